#ifndef GPJT_HARNESS_HPP
#define GPJT_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gpjt/grothendieck.hpp"

// Identity checks over parameter sweeps and the reports they produce.
namespace gpjt {

/// Where two sides of a failed check first differ: the first monomial (in
/// canonical order) whose coefficients disagree, and the u-exponent when
/// the sides are series.
struct Witness {
  std::optional<int> u_power;
  std::string monomial;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Check {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  bool passed = false;
  std::optional<Witness> witness;
};

/// Compares two polynomials; the witness is set exactly when they differ.
[[nodiscard]] Check compare(std::string name, nlohmann::json params, const Polynomial& lhs,
                            const Polynomial& rhs);
/// Compares two series coefficient by coefficient on [lo, hi].
[[nodiscard]] Check compare(std::string name, nlohmann::json params, const LaurentSeries& lhs,
                            const LaurentSeries& rhs, int lo, int hi);

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::optional<RingContext> ctx) : context_(std::move(ctx)) {}

  void add(Check c) { checks_.push_back(std::move(c)); }
  void append(const VerificationReport& other);
  void set_error(std::string message) { error_ = std::move(message); }

  [[nodiscard]] const std::optional<RingContext>& context() const noexcept { return context_; }
  [[nodiscard]] const std::vector<Check>& checks() const noexcept { return checks_; }
  [[nodiscard]] const std::optional<std::string>& error() const noexcept { return error_; }
  [[nodiscard]] std::size_t failures() const;
  /// No error and every check passed.
  [[nodiscard]] bool all_passed() const;

  [[nodiscard]] nlohmann::json to_json() const;
  /// One line per check, then a summary line.
  [[nodiscard]] std::string to_text() const;

 private:
  std::optional<RingContext> context_;
  std::vector<Check> checks_;
  std::optional<std::string> error_;
};

enum class Method { bialternant, hm, himn };

[[nodiscard]] std::string method_name(Method m);
/// Throws std::invalid_argument for an unknown name.
[[nodiscard]] Method parse_method(std::string_view name);
[[nodiscard]] Polynomial compute(const RingContext& ctx, const IndexVector& a, Method m);

struct TheoremOptions {
  std::optional<int> beta_trunc;
  bool check_stabilization = true;
};

/// bialternant, hm and himn for a, compared pairwise; optionally recomputed
/// with N + 1 and compared after truncating back to N. An invalid index
/// vector is reported as an error rather than thrown.
[[nodiscard]] VerificationReport verify_theorem(int d, const std::vector<int>& a,
                                                const TheoremOptions& options = {});

/// verify_theorem for every partition with at most d parts, each at most
/// max_part. Checks appear in sweep order whatever the thread count.
[[nodiscard]] VerificationReport verify_theorem_sweep(int d, int max_part,
                                                      const TheoremOptions& options = {});

/// The generating-function identities and matrix factorizations behind the
/// two determinant formulas, for every 0 <= k <= k_max and 1 <= j <= d in
/// the context (d, k_max, N).
[[nodiscard]] VerificationReport verify_proof_suite(int d, int k_max, int beta_trunc);

/// det M and det Mbar against their closed forms.
[[nodiscard]] VerificationReport verify_minor_determinants(const RingContext& ctx);

/// Worker count for sweeps: GPJT_THREADS if set and positive, otherwise the
/// hardware concurrency.
[[nodiscard]] unsigned sweep_threads();

}  // namespace gpjt

#endif  // GPJT_HARNESS_HPP
