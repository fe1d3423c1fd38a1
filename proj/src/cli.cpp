#include "gpjt/cli.hpp"

#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "gpjt/harness.hpp"
#include "gpjt/io.hpp"

namespace gpjt {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Target {
  int d = 0;
  std::string lambda;
  std::string a;
  std::optional<int> beta_trunc;
};

struct Output {
  std::string format = "text";
  std::string path;
};

void add_target(CLI::App& cmd, Target& t)
{
  cmd.add_option("--d", t.d, "Number of x variables")->required();
  auto* lambda = cmd.add_option("--lambda", t.lambda, "Partition, comma separated");
  auto* a = cmd.add_option("--a", t.a, "General index vector with a_i + d - i >= 0");
  lambda->excludes(a);
  cmd.add_option("--beta-trunc", t.beta_trunc, "Truncation order N (beta^(N+1) = 0)");
}

void add_output(CLI::App& cmd, Output& o)
{
  cmd.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd.add_option("--out", o.path, "Write the result to this file instead of stdout");
}

std::vector<int> target_vector(const Target& t)
{
  if (t.d < 1) {
    throw UsageError("--d must be at least 1");
  }
  if (!t.a.empty()) {
    const IndexVector a = IndexVector::parse(t.a);
    if (a.d() != t.d) {
      throw UsageError("--a has " + std::to_string(a.d()) + " entries but --d is " +
                       std::to_string(t.d));
    }
    return a.values();
  }
  if (t.lambda.empty()) {
    throw UsageError("one of --lambda or --a is required");
  }
  return Partition::parse(t.lambda, t.d).parts();
}

void emit(const Output& o, const std::string& text, std::ostream& out)
{
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.path);
  if (!file) {
    throw UsageError("cannot open '" + o.path + "' for writing");
  }
  file << text;
}

std::string render(const Output& o, const Polynomial& p)
{
  return o.format == "json" ? to_json(p).dump(2) + "\n" : to_text(p) + "\n";
}

int report_exit(const Output& o, const VerificationReport& report, std::ostream& out,
                std::ostream& err)
{
  emit(o, o.format == "json" ? report.to_json().dump(2) + "\n" : report.to_text(), out);
  if (report.error()) {
    err << "error: " << *report.error() << "\n";
    return kExitUsage;
  }
  return report.all_passed() ? kExitOk : kExitFailed;
}

}  // namespace

int default_coeff_trunc(int d, int k, int m)
{
  return d - 1 + k + std::max(0, -m);
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Factorial Grothendieck polynomials in Z[x, b, beta]/(beta^(N+1))", "gpjt"};
  app.require_subcommand(1);

  Target target;
  Output output;
  std::string method;
  auto* compute_cmd = app.add_subcommand("compute", "Compute G_lambda(x|b) by one formula");
  add_target(*compute_cmd, target);
  compute_cmd->add_option("--method", method, "bialternant, hm or himn")
      ->required()
      ->check(CLI::IsMember({"bialternant", "hm", "himn"}));
  add_output(*compute_cmd, output);

  int coeff_d = 0;
  int coeff_k = 0;
  int coeff_m = 0;
  std::optional<int> coeff_trunc;
  auto* coeff_cmd = app.add_subcommand("coeff", "One-row coefficient G_m^(k)(x|b)");
  coeff_cmd->add_option("--d", coeff_d, "Number of x variables")->required();
  coeff_cmd->add_option("--k", coeff_k, "Number of b variables in the product")->required();
  coeff_cmd->add_option("--m", coeff_m, "Power of u")->required();
  coeff_cmd->add_option("--beta-trunc", coeff_trunc, "Truncation order N");
  add_output(*coeff_cmd, output);

  auto* verify_cmd = app.add_subcommand("verify", "Check identities exactly");
  verify_cmd->require_subcommand(1);

  int sweep = -1;
  bool no_stabilization = false;
  auto* theorem_cmd =
      verify_cmd->add_subcommand("theorem", "Three-way agreement of the formulas");
  add_target(*theorem_cmd, target);
  theorem_cmd->add_option("--all-up-to", sweep,
                          "Every partition with at most d parts, each at most this");
  theorem_cmd->add_flag("--no-stabilization", no_stabilization, "Skip the N + 1 recomputation");
  add_output(*theorem_cmd, output);

  int proofs_d = 0;
  int k_max = 0;
  int proofs_trunc = 0;
  auto* proofs_cmd = verify_cmd->add_subcommand("proofs", "Generating-function identities");
  proofs_cmd->add_option("--d", proofs_d, "Number of x variables")->required();
  proofs_cmd->add_option("--k-max", k_max, "Largest k")->required();
  proofs_cmd->add_option("--beta-trunc", proofs_trunc, "Truncation order N")->required();
  add_output(*proofs_cmd, output);

  std::string expected;
  auto* expected_cmd =
      verify_cmd->add_subcommand("expected", "Compare one formula with a given polynomial");
  add_target(*expected_cmd, target);
  expected_cmd->add_option("--method", method, "bialternant, hm or himn")
      ->check(CLI::IsMember({"bialternant", "hm", "himn"}));
  expected_cmd->add_option("--expect", expected, "Expected value in text form")->required();
  add_output(*expected_cmd, output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (compute_cmd->parsed()) {
      const IndexVector a(target_vector(target));
      const RingContext ctx = theorem_context(a, target.beta_trunc);
      emit(output, render(output, compute(ctx, a, parse_method(method))), out);
      return kExitOk;
    }
    if (coeff_cmd->parsed()) {
      if (coeff_k < 0) {
        throw UsageError("--k must be non-negative");
      }
      const RingContext ctx(coeff_d, coeff_k,
                            coeff_trunc.value_or(default_coeff_trunc(coeff_d, coeff_k, coeff_m)));
      emit(output, render(output, g_coeff(ctx, coeff_k, coeff_m)), out);
      return kExitOk;
    }
    if (theorem_cmd->parsed()) {
      TheoremOptions options{target.beta_trunc, !no_stabilization};
      if (sweep >= 0) {
        if (!target.lambda.empty() || !target.a.empty()) {
          throw UsageError("--all-up-to replaces --lambda and --a");
        }
        if (target.d < 1) {
          throw UsageError("--d must be at least 1");
        }
        return report_exit(output, verify_theorem_sweep(target.d, sweep, options), out, err);
      }
      return report_exit(output, verify_theorem(target.d, target_vector(target), options), out,
                         err);
    }
    if (proofs_cmd->parsed()) {
      return report_exit(output, verify_proof_suite(proofs_d, k_max, proofs_trunc), out, err);
    }
    if (expected_cmd->parsed()) {
      const IndexVector a(target_vector(target));
      const RingContext ctx = theorem_context(a, target.beta_trunc);
      const Method m = method.empty() ? Method::bialternant : parse_method(method);
      VerificationReport report(ctx);
      report.add(compare(method_name(m) + "=expected", {{"a", a.values()}}, compute(ctx, a, m),
                         parse_text(ctx, expected)));
      return report_exit(output, report, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "usage error: no command given\n";
  return kExitUsage;
}

}  // namespace gpjt
