#ifndef GPJT_GROTHENDIECK_HPP
#define GPJT_GROTHENDIECK_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "gpjt/binomial.hpp"
#include "gpjt/ring.hpp"
#include "gpjt/series.hpp"

// Factorial Grothendieck polynomials G_lambda(x|b) by three routes: the
// bi-alternant (reference definition) and two Jacobi-Trudi type
// determinants in the one-row coefficients G_m^(k)(x|b).
namespace gpjt {

/// Weakly decreasing non-negative sequence, zero-padded to length d.
class Partition {
 public:
  Partition(std::vector<int> parts, int d);
  /// "3,1,0"; an empty string is the empty partition.
  static Partition parse(std::string_view text, int d);

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  [[nodiscard]] int d() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int size() const noexcept;  // |lambda|
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// (a_1, ..., a_d) with a_i + d - i >= 0; every partition is one.
class IndexVector {
 public:
  explicit IndexVector(std::vector<int> values);
  IndexVector(const Partition& p) : IndexVector(p.parts()) {}  // NOLINT: implicit by design
  static IndexVector parse(std::string_view text);

  [[nodiscard]] int d() const noexcept { return static_cast<int>(values_.size()); }
  [[nodiscard]] const std::vector<int>& values() const noexcept { return values_; }
  /// a_i + d - i for 1-based i: the number of b variables row i consumes.
  [[nodiscard]] int level(int i) const;
  [[nodiscard]] int max_level() const;
  [[nodiscard]] bool is_partition() const;
  [[nodiscard]] std::string str() const;

 private:
  std::vector<int> values_;
};

/// B = max level; N defaults to |a| + d(d-1) for a partition and to
/// sum(a_i + d - i) + d(d-1) for any other index vector.
[[nodiscard]] RingContext theorem_context(const IndexVector& a,
                                          std::optional<int> beta_trunc = std::nullopt);
[[nodiscard]] int default_beta_trunc(const IndexVector& a);

/// x (+) y = x + y + beta x y
[[nodiscard]] Polynomial oplus(const Polynomial& p, const Polynomial& q);
/// [y|b]^k = (y (+) b_1) ... (y (+) b_k)
[[nodiscard]] Polynomial factorial_power(const Polynomial& y, int k);

/// ([x_j|b]^(a_i+d-i) (1 + beta x_j)^(i-1))_{i,j}
[[nodiscard]] PolyMatrix bialternant_numerator(const RingContext& ctx, const IndexVector& a);
/// prod_{i<j} (x_i - x_j)
[[nodiscard]] Polynomial vandermonde(const RingContext& ctx);
/// det(bialternant_numerator) / vandermonde, dividing by one linear factor
/// at a time.
[[nodiscard]] Polynomial bialternant(const RingContext& ctx, const IndexVector& a);

/// Entry (i, j) is sum_{s<=N} C(i-d, s) beta^s G_{a_i+j-i+s}^(a_i+d-i).
[[nodiscard]] PolyMatrix hm_matrix(const RingContext& ctx, const IndexVector& a);
/// Entry (i, j) is sum_{s<=N} C(i-j, s) beta^s G_{a_i+j-i+s}^(a_i+d-i).
[[nodiscard]] PolyMatrix himn_matrix(const RingContext& ctx, const IndexVector& a);
[[nodiscard]] Polynomial hm_determinant(const RingContext& ctx, const IndexVector& a);
[[nodiscard]] Polynomial himn_determinant(const RingContext& ctx, const IndexVector& a);

/// Same matrices with every entry read literally as a sum of g_coeff values.
/// Much slower; kept as an independent route for cross-checking.
[[nodiscard]] PolyMatrix hm_matrix_from_coefficients(const RingContext& ctx, const IndexVector& a);
[[nodiscard]] PolyMatrix himn_matrix_from_coefficients(const RingContext& ctx,
                                                       const IndexVector& a);

/// ((-1)^(d-i) e_{d-i}^(j)(x))_{i,j}
[[nodiscard]] PolyMatrix build_M(const RingContext& ctx);
/// ((-1)^(d-i) e_{d-i}^(j)(-xbar))_{i,j}
[[nodiscard]] PolyMatrix build_Mbar(const RingContext& ctx);

/// beta -> 0, b -> 0: the Schur polynomial limit.
[[nodiscard]] Polynomial schur_specialize(const Polynomial& p);
/// beta -> -1, b -> 0: Buch's Grothendieck polynomial G_lambda(x).
[[nodiscard]] Polynomial buch_specialize(const Polynomial& p);

/// s_lambda(x_1..x_d) by brute-force enumeration of semistandard tableaux
/// with entries at most d. Independent of every determinant routine.
[[nodiscard]] Polynomial ssyt_schur_oracle(const RingContext& ctx, const Partition& lambda);

/// Every partition with at most d parts, each at most max_part, in
/// increasing lexicographic order of (lambda_1, ..., lambda_d).
[[nodiscard]] std::vector<Partition> partitions_in_box(int d, int max_part);

}  // namespace gpjt

#endif  // GPJT_GROTHENDIECK_HPP
