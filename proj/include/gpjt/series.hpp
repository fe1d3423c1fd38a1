#ifndef GPJT_SERIES_HPP
#define GPJT_SERIES_HPP

#include <vector>

#include "gpjt/ring.hpp"

// Truncated Laurent series in u with coefficients in R, and the generating
// functions whose coefficients are the one-row Grothendieck polynomials:
//
//   G^(k)(u) = 1/(1 + beta/u) * prod_i (1 + beta x_i)/(1 - x_i u)
//                             * prod_{j<=k} (1 + (u + beta) b_j)
//
// with 1/(1 + beta/u) read as sum_s (-beta)^s u^-s.
namespace gpjt {

/// A coefficient outside the window in which a series is known exactly.
class OutOfWindow : public Error {
 public:
  using Error::Error;
};

/// Coefficients of u^lo .. u^hi. Every coefficient below lo is zero. When
/// `terminates` is set every coefficient above hi is zero as well;
/// otherwise nothing is known above hi and asking for it throws.
class LaurentSeries {
 public:
  LaurentSeries(const RingContext& ctx, int lo, std::vector<Polynomial> coeffs, bool terminates);

  /// The series c * u^0.
  static LaurentSeries constant(const Polynomial& c);
  /// sum_p coeffs[p] u^p, a polynomial in u.
  static LaurentSeries polynomial(const RingContext& ctx, std::vector<Polynomial> coeffs);

  [[nodiscard]] const RingContext& context() const noexcept { return ctx_; }
  [[nodiscard]] int lo() const noexcept { return lo_; }
  [[nodiscard]] int hi() const noexcept { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool terminates() const noexcept { return terminates_; }
  /// Coefficient of u^m; throws OutOfWindow above hi for a non-terminating series.
  [[nodiscard]] Polynomial coeff(int m) const;

  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  RingContext ctx_;
  int lo_;
  std::vector<Polynomial> coeffs_;
  bool terminates_;
};

/// Product of two series on the window where every contributing coefficient
/// is known: [f.lo + g.lo, hi] with hi the largest exponent not reaching past
/// a non-terminating factor's window.
[[nodiscard]] LaurentSeries laurent_mul(const LaurentSeries& f, const LaurentSeries& g);
/// Only the coefficients of u^lo .. u^hi of the product, in order. Throws
/// OutOfWindow if hi lies beyond the exact window.
[[nodiscard]] std::vector<Polynomial> product_coefficients(const LaurentSeries& f,
                                                          const LaurentSeries& g, int lo, int hi);

enum class Shift {
  negate,             // u -> -u
  negate_minus_beta,  // u -> -u - beta
};

/// Substitutes for u. u -> -u - beta needs a series with lo >= 0; a
/// non-terminating input loses its top N exact coefficients.
[[nodiscard]] LaurentSeries shift_substitute(const LaurentSeries& f, Shift s);

/// ybar = -y / (1 + beta y) for y an x or b variable.
[[nodiscard]] Polynomial bar(const RingContext& ctx, Variable v);

/// sum_{s<=N} (-beta)^s u^-s, i.e. 1/(1 + beta/u) in R.
[[nodiscard]] LaurentSeries inverse_beta_series(const RingContext& ctx);
/// (1 + beta/u)^n = sum_{s<=N} gen_binomial(n, s) beta^s u^-s.
[[nodiscard]] LaurentSeries binomial_series(const RingContext& ctx, long n);
/// 1/(1 - y u) up to u^degree.
[[nodiscard]] LaurentSeries geometric_series(const Polynomial& y, int degree);
/// prod_i (1 + beta x_i)/(1 - x_i u) up to u^degree.
[[nodiscard]] LaurentSeries cauchy_series(const RingContext& ctx, int degree);
/// prod_{j<=k} (1 + (u + beta) b_j), a polynomial of degree k in u.
[[nodiscard]] LaurentSeries b_factor_series(const RingContext& ctx, int k);
/// prod_{l<=k} (1 - bbar_l u)/(1 + beta bbar_l), built from bar and
/// unit_inverse. Equal to b_factor_series(ctx, k).
[[nodiscard]] LaurentSeries bbar_factor_series(const RingContext& ctx, int k);

/// E^(j)(u) = prod_{i != j} (1 + x_i u).
[[nodiscard]] LaurentSeries e_series(const RingContext& ctx, int j);
/// Ebar^(j)(u) = prod_{i != j} (1 - xbar_i u).
[[nodiscard]] LaurentSeries ebar_series(const RingContext& ctx, int j);

/// The three factors of G^(k)(u) for one context, with the Cauchy factor
/// expanded far enough for coefficients up to u^(max_degree - N). Immutable
/// once built, so one instance can serve many coefficient requests.
class GkFactors {
 public:
  GkFactors(const RingContext& ctx, int max_degree);

  [[nodiscard]] const RingContext& context() const noexcept { return ctx_; }
  [[nodiscard]] int max_degree() const noexcept { return cauchy_.hi(); }
  [[nodiscard]] const LaurentSeries& inverse_beta() const noexcept { return inverse_beta_; }
  [[nodiscard]] const LaurentSeries& cauchy() const noexcept { return cauchy_; }
  [[nodiscard]] const LaurentSeries& b_factor(int k) const;

  /// G^(k)(u) on [-N, m_max].
  [[nodiscard]] LaurentSeries series(int k, int m_max) const;
  /// G_m^(k).
  [[nodiscard]] Polynomial coefficient(int k, int m) const;
  /// [u^m] weights(u) * G^(k)(u) for a terminating weight series in u^-1,
  /// i.e. sum_s w_s G_{m+s}^(k) with w_s = [u^-s] weights. Only the handful
  /// of coefficients this needs are formed.
  [[nodiscard]] Polynomial weighted_coefficient(const LaurentSeries& weights, int k, int m) const;

 private:
  RingContext ctx_;
  LaurentSeries inverse_beta_;
  LaurentSeries cauchy_;
  std::vector<LaurentSeries> b_factors_;
};

/// G^(k)(u) with coefficients exact on [-N, m_max]; below u^-N every
/// coefficient vanishes in R. Throws std::out_of_range when k > B.
[[nodiscard]] LaurentSeries gk_series(const RingContext& ctx, int k, int m_max);
/// G_m^(k)(x|b); zero for m < -N.
[[nodiscard]] Polynomial g_coeff(const RingContext& ctx, int k, int m);

}  // namespace gpjt

#endif  // GPJT_SERIES_HPP
