// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. Pass criterion numbers as arguments to run a subset.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gpjt/cli.hpp"
#include "gpjt/grothendieck.hpp"
#include "gpjt/harness.hpp"
#include "gpjt/io.hpp"
#include "random_poly.hpp"

using namespace gpjt;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what)
  {
    if (!ok) {
      passed = false;
      if (failures.size() < 10) {
        failures.push_back(what);
      }
    }
  }
};

// Criterion 8 round-trips every polynomial the earlier criteria produce.
struct RoundTrip {
  std::size_t count = 0;
  std::vector<std::string> failures;

  void operator()(const Polynomial& p, const std::string& origin)
  {
    ++count;
    const std::string text = to_text(p);
    const std::string json = to_json(p).dump();
    bool ok = false;
    try {
      const Polynomial from_text = parse_text(p.context(), text);
      const Polynomial from_json = polynomial_from_json(nlohmann::json::parse(json));
      ok = to_text(from_text) == text && to_json(from_json).dump() == json && from_text == p &&
           from_json == p;
    } catch (const std::exception& e) {
      failures.push_back(origin + ": " + e.what());
      return;
    }
    if (!ok && failures.size() < 10) {
      failures.push_back(origin);
    }
  }
};

RoundTrip g_roundtrip;

std::string name_of(const std::vector<int>& parts)
{
  return Partition(parts, static_cast<int>(parts.size())).str();
}

// Criteria 1 and 6 share one pass over the sweep.
struct SweepResult {
  Outcome theorem;
  Outcome stabilization;
};

SweepResult run_small_sweep()
{
  SweepResult r;
  std::size_t cases = 0;
  for (int d = 1; d <= 3; ++d) {
    for (const Partition& lambda : partitions_in_box(d, 4)) {
      ++cases;
      const std::string label = "d=" + std::to_string(d) + " " + lambda.str();
      const RingContext ctx = theorem_context(lambda);
      const Polynomial g = bialternant(ctx, lambda);
      const Polynomial hm = hm_determinant(ctx, lambda);
      const Polynomial himn = himn_determinant(ctx, lambda);
      r.theorem.expect(g == hm, label + " bialternant != hm");
      r.theorem.expect(g == himn, label + " bialternant != himn");
      r.theorem.expect(hm == himn, label + " hm != himn");
      g_roundtrip(g, label + " bialternant");
      g_roundtrip(hm, label + " hm");
      g_roundtrip(himn, label + " himn");

      const RingContext wider = theorem_context(lambda, ctx.N + 1);
      const Polynomial g1 = bialternant(wider, lambda);
      const Polynomial hm1 = hm_determinant(wider, lambda);
      const Polynomial himn1 = himn_determinant(wider, lambda);
      r.stabilization.expect(g1.in_context(ctx) == g, label + " bialternant");
      r.stabilization.expect(hm1.in_context(ctx) == hm, label + " hm");
      r.stabilization.expect(himn1.in_context(ctx) == himn, label + " himn");
      g_roundtrip(g1, label + " bialternant N+1");
      g_roundtrip(hm1, label + " hm N+1");
      g_roundtrip(himn1, label + " himn N+1");
    }
  }
  r.theorem.detail = std::to_string(cases) + " partitions, 3 comparisons each";
  r.stabilization.detail = std::to_string(cases) + " partitions, N and N+1 runs of all three formulas";
  return r;
}

Outcome stress_sweep()
{
  Outcome o;
  std::string sizes;
  for (const std::vector<int>& parts :
       {std::vector<int>{2, 1, 1, 0}, std::vector<int>{3, 2, 1, 0}, std::vector<int>{4, 2, 2, 1}}) {
    const Partition lambda(parts, 4);
    const RingContext ctx = theorem_context(lambda);
    const Polynomial g = bialternant(ctx, lambda);
    const Polynomial hm = hm_determinant(ctx, lambda);
    const Polynomial himn = himn_determinant(ctx, lambda);
    o.expect(g == hm, lambda.str() + " bialternant != hm");
    o.expect(g == himn, lambda.str() + " bialternant != himn");
    g_roundtrip(g, lambda.str() + " bialternant");
    g_roundtrip(hm, lambda.str() + " hm");
    g_roundtrip(himn, lambda.str() + " himn");
    sizes += (sizes.empty() ? "" : ", ") + lambda.str() + " " + std::to_string(g.size()) + " terms";
  }
  o.detail = "d=4: " + sizes;
  return o;
}

Outcome corollary()
{
  Outcome o;
  int cases = 0;
  for (int d = 1; d <= 3; ++d) {
    for (int k = 0; k <= 4; ++k) {
      std::vector<int> parts(static_cast<std::size_t>(d), 0);
      parts[0] = k;
      const Partition lambda(parts, d);
      const RingContext ctx = theorem_context(lambda);
      const Polynomial g = bialternant(ctx, lambda);
      const Polynomial coeff = g_coeff(ctx, k + d - 1, k);
      o.expect(g == coeff, "d=" + std::to_string(d) + " k=" + std::to_string(k));
      g_roundtrip(g, "corollary bialternant " + name_of(parts));
      g_roundtrip(coeff, "corollary coefficient " + name_of(parts));
      ++cases;
    }
  }
  o.detail = std::to_string(cases) + " cases";
  return o;
}

void record(Outcome& o, const VerificationReport& r)
{
  for (const Check& c : r.checks()) {
    o.expect(c.passed, c.name + " " + c.params.dump());
  }
  if (r.error()) {
    o.expect(false, *r.error());
  }
}

Outcome proof_suite()
{
  constexpr int kN = 6;
  constexpr int kMax = 2;
  Outcome o;
  std::size_t checks = 0;
  for (int d = 1; d <= 3; ++d) {
    const VerificationReport r = verify_proof_suite(d, kMax, kN);
    record(o, r);
    checks += r.checks().size();
    // The polynomials the suite is built from, for the round-trip criterion.
    const RingContext ctx(d, kMax, kN);
    for (int k = 0; k <= kMax; ++k) {
      for (int m = -kN; m <= k + 3; ++m) {
        g_roundtrip(g_coeff(ctx, k, m), "G_" + std::to_string(m) + "^(" + std::to_string(k) + ")");
      }
    }
    for (int j = 1; j <= d; ++j) {
      const LaurentSeries e = e_series(ctx, j);
      const LaurentSeries eb = ebar_series(ctx, j);
      for (int p = 0; p < d; ++p) {
        g_roundtrip(e.coeff(p), "e_p^(j)");
        g_roundtrip(eb.coeff(p), "ebar_p^(j)");
      }
    }
  }
  for (int d = 1; d <= 4; ++d) {
    const RingContext ctx(d, 0, kN);
    const VerificationReport r = verify_minor_determinants(ctx);
    record(o, r);
    checks += r.checks().size();
    g_roundtrip(determinant(build_M(ctx)), "det M");
    g_roundtrip(determinant(build_Mbar(ctx)), "det Mbar");
  }
  o.detail = std::to_string(checks) + " checks, d in {1,2,3}, k <= 2, N = 6; det M and det Mbar for d <= 4";
  return o;
}

Outcome specializations()
{
  Outcome o;
  int cases = 0;
  for (int d = 1; d <= 3; ++d) {
    for (const Partition& lambda : partitions_in_box(d, 6)) {
      if (lambda.size() > 6) {
        continue;
      }
      const RingContext ctx = theorem_context(lambda);
      const Polynomial g = bialternant(ctx, lambda);
      const Polynomial schur = schur_specialize(g);
      const Polynomial oracle = ssyt_schur_oracle(ctx, lambda);
      o.expect(schur == oracle, "d=" + std::to_string(d) + " " + lambda.str());
      g_roundtrip(g, "specialization bialternant " + lambda.str());
      g_roundtrip(schur, "schur " + lambda.str());
      g_roundtrip(oracle, "ssyt " + lambda.str());
      ++cases;
    }
  }
  const Partition one(std::vector<int>{1, 0}, 2);
  const RingContext ctx = theorem_context(one);
  const Polynomial buch = buch_specialize(bialternant(ctx, one));
  const Polynomial x1 = Polynomial::x(ctx, 1);
  const Polynomial x2 = Polynomial::x(ctx, 2);
  o.expect(buch == x1 + x2 - x1 * x2, "Buch (1,0)");
  g_roundtrip(buch, "buch (1,0)");
  o.detail = std::to_string(cases) + " Schur cases with |lambda| <= 6, plus Buch (1,0)";
  return o;
}

Outcome ring_properties()
{
  constexpr int kCases = 1000;
  Outcome o;
  std::mt19937_64 rng(0x67706a74);
  const std::vector<RingContext> contexts = {RingContext(1, 0, 0), RingContext(1, 1, 2),
                                             RingContext(2, 1, 1), RingContext(2, 2, 3),
                                             RingContext(3, 1, 2)};
  std::uniform_int_distribution<std::size_t> pick(0, contexts.size() - 1);
  using testing_support::random_polynomial;
  for (int t = 0; t < kCases; ++t) {
    const RingContext& ctx = contexts[pick(rng)];
    const std::string label = "case " + std::to_string(t);
    const Polynomial a = random_polynomial(rng, ctx);
    const Polynomial b = random_polynomial(rng, ctx);
    const Polynomial c = random_polynomial(rng, ctx);
    o.expect(a + b == b + a, label + " add commutes");
    o.expect((a + b) + c == a + (b + c), label + " add associates");
    o.expect(a * b == b * a, label + " mul commutes");
    o.expect((a * b) * c == a * (b * c), label + " mul associates");
    o.expect(a * (b + c) == a * b + a * c, label + " distributes");

    const Polynomial u = testing_support::random_unit(rng, ctx);
    o.expect((unit_inverse(u) * u).is_one(), label + " unit_inverse");

    if (!b.is_zero()) {
      const Polynomial ab = a * b;
      const Polynomial q = exact_div(ab, b);
      o.expect(q * b == ab, label + " exact_div round-trip");
      // A divisor with a nonzero beta-free part is not a zero divisor in R.
      if (!b.beta_layer(0).is_zero()) {
        o.expect(q == a, label + " exact_div quotient");
      }
    }

    const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    PolyMatrix m = testing_support::random_matrix(rng, ctx, n);
    const Polynomial det = determinant(m);
    std::uniform_int_distribution<std::size_t> row(0, n - 1);
    const std::size_t r1 = row(rng);
    std::size_t r2 = row(rng);
    if (r2 == r1) {
      r2 = (r1 + 1) % n;
    }
    m.swap_rows(r1, r2);
    o.expect(determinant(m) == -det, label + " row swap");
  }
  o.detail = std::to_string(kCases) + " randomized cases";
  return o;
}

Outcome interface_checks()
{
  Outcome o;
  for (const auto& f : g_roundtrip.failures) {
    o.expect(false, "round-trip " + f);
  }
  struct Expect {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Expect> runs = {
      {{"compute", "--d", "1", "--lambda", "2", "--method", "bialternant"}, 0},
      {{"verify", "theorem", "--d", "2", "--lambda", "1,0"}, 0},
      {{"verify", "proofs", "--d", "2", "--k-max", "2", "--beta-trunc", "4"}, 0},
      {{"verify", "expected", "--d", "1", "--lambda", "1", "--expect", "1*x1"}, 1},
      {{"compute", "--d", "0", "--lambda", "1", "--method", "hm"}, 2},
      {{"verify", "theorem", "--d", "2", "--a", "0,-1"}, 2},
      {{"compute", "--d", "2"}, 2},
  };
  for (const auto& r : runs) {
    std::vector<const char*> argv{"gpjt"};
    for (const auto& a : r.args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    std::string joined;
    for (const auto& a : r.args) {
      joined += " " + a;
    }
    o.expect(code == r.code, "exit " + std::to_string(code) + " for" + joined);
  }
  o.detail = std::to_string(g_roundtrip.count) + " polynomials round-tripped, " +
             std::to_string(runs.size()) + " CLI exit-code runs";
  return o;
}

}  // namespace

int main(int argc, char** argv)
{
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) {
    wanted.insert(std::stoi(argv[i]));
  }
  auto want = [&](int n) { return wanted.empty() || wanted.count(n) != 0; };

  bool all = true;
  auto report = [&](int n, const char* title, const Outcome& o, double seconds) {
    std::printf("%s %d %s: %s (%.1f s)\n", o.passed ? "PASS" : "FAIL", n, title, o.detail.c_str(),
                seconds);
    for (const auto& f : o.failures) {
      std::printf("    %s\n", f.c_str());
    }
    std::fflush(stdout);
    all = all && o.passed;
  };
  auto timed = [](const std::function<Outcome()>& f, double& seconds) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = f();
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return o;
  };

  double seconds = 0;
  double sweep_seconds = 0;
  SweepResult sweep;
  if (want(1) || want(6) || want(8)) {
    const auto start = std::chrono::steady_clock::now();
    sweep = run_small_sweep();
    sweep_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    sweep.theorem.detail += "; timing includes the N+1 runs of criterion 6";
    sweep.stabilization.detail += "; timed with criterion 1";
  }
  if (want(1)) {
    report(1, "theorem sweep d <= 3, lambda_1 <= 4", sweep.theorem, sweep_seconds);
  }
  if (want(2) || want(8)) {
    const Outcome o = timed(stress_sweep, seconds);
    if (want(2)) {
      report(2, "theorem stress d = 4", o, seconds);
    }
  }
  if (want(3) || want(8)) {
    const Outcome o = timed(corollary, seconds);
    if (want(3)) {
      report(3, "single-row corollary", o, seconds);
    }
  }
  if (want(4) || want(8)) {
    const Outcome o = timed(proof_suite, seconds);
    if (want(4)) {
      report(4, "proof identities", o, seconds);
    }
  }
  if (want(5) || want(8)) {
    const Outcome o = timed(specializations, seconds);
    if (want(5)) {
      report(5, "Schur and Buch specializations", o, seconds);
    }
  }
  if (want(6)) {
    report(6, "stabilization N -> N+1", sweep.stabilization, sweep_seconds);
  }
  if (want(7)) {
    report(7, "ring properties", timed(ring_properties, seconds), seconds);
  }
  if (want(8)) {
    report(8, "interface round-trips and exit codes", timed(interface_checks, seconds), seconds);
  }
  return all ? 0 : 1;
}
