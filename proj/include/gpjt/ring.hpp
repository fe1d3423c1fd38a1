#ifndef GPJT_RING_HPP
#define GPJT_RING_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpjt/integer.hpp"
#include "gpjt/monomial.hpp"

// Exact arithmetic in R = Z[x_1..x_d, b_1..b_B, beta] / (beta^(N+1)).
namespace gpjt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("polynomials belong to different ring contexts") {}
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

/// Raised by exact_div. Carries the leading monomial and coefficient of the
/// remainder that could not be cancelled.
class NotDivisible : public Error {
 public:
  NotDivisible(Monomial witness, Integer coefficient, const std::string& what)
      : Error(what), witness_(witness), coefficient_(std::move(coefficient))
  {
  }
  [[nodiscard]] const Monomial& witness() const noexcept { return witness_; }
  [[nodiscard]] const Integer& coefficient() const noexcept { return coefficient_; }

 private:
  Monomial witness_;
  Integer coefficient_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Dimensions of the working ring. Two polynomials combine only when their
/// contexts are identical.
struct RingContext {
  int d = 1;  // x variables
  int B = 0;  // b variables
  int N = 0;  // beta^(N+1) == 0

  RingContext() = default;
  RingContext(int x_count, int b_count, int beta_trunc);

  [[nodiscard]] std::size_t x_slot(int i) const;  // 1-based i
  [[nodiscard]] std::size_t b_slot(int j) const;  // 1-based j
  [[nodiscard]] std::string str() const;

  friend bool operator==(const RingContext&, const RingContext&) = default;
};

enum class VarKind { x, b, beta };

struct Variable {
  VarKind kind = VarKind::x;
  int index = 1;  // 1-based; ignored for beta

  static Variable x(int i) { return {VarKind::x, i}; }
  static Variable b(int j) { return {VarKind::b, j}; }
  static Variable beta() { return {VarKind::beta, 0}; }

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Sparse polynomial over Z with beta-degree at most ctx.N. Terms are kept
/// in canonical order (see canonical_less) with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const RingContext& ctx) : ctx_(ctx) {}

  static Polynomial zero(const RingContext& ctx) { return Polynomial(ctx); }
  static Polynomial one(const RingContext& ctx);
  static Polynomial constant(const RingContext& ctx, const Integer& c);
  /// Throws std::out_of_range for an index outside the context.
  static Polynomial variable(const RingContext& ctx, Variable v);
  static Polynomial x(const RingContext& ctx, int i) { return variable(ctx, Variable::x(i)); }
  static Polynomial b(const RingContext& ctx, int j) { return variable(ctx, Variable::b(j)); }
  static Polynomial beta(const RingContext& ctx) { return variable(ctx, Variable::beta()); }
  static Polynomial term(const RingContext& ctx, const Monomial& m, const Integer& c);
  /// Sorts, merges equal monomials, drops zeros and anything past beta^N.
  static Polynomial from_terms(const RingContext& ctx, std::vector<Monomial> monomials,
                               std::vector<Integer> coefficients);

  [[nodiscard]] const RingContext& context() const noexcept { return ctx_; }
  [[nodiscard]] std::size_t size() const noexcept { return monos_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return monos_.empty(); }
  [[nodiscard]] bool is_one() const noexcept;
  [[nodiscard]] std::span<const Monomial> monomials() const noexcept { return monos_; }
  [[nodiscard]] std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  [[nodiscard]] Integer coefficient(const Monomial& m) const;
  [[nodiscard]] Integer constant_term() const;
  /// Highest beta exponent present; 0 for the zero polynomial.
  [[nodiscard]] unsigned beta_degree() const noexcept;
  /// Degree in one variable.
  [[nodiscard]] unsigned degree_in(Variable v) const;

  /// Coefficient of v^k with this polynomial viewed as univariate in v.
  [[nodiscard]] Polynomial coefficient_of(Variable v, unsigned k) const;
  /// Coefficient of beta^e: the terms with beta exponent exactly e, divided by beta^e.
  [[nodiscard]] Polynomial beta_layer(unsigned e) const
  {
    return coefficient_of(Variable::beta(), e);
  }
  /// Last term in canonical order, i.e. the leading term.
  [[nodiscard]] const Monomial& leading_monomial() const { return monos_.back(); }
  [[nodiscard]] const Integer& leading_coefficient() const { return coeffs_.back(); }

  /// Drops every term whose beta exponent exceeds max_beta.
  [[nodiscard]] Polynomial truncated(unsigned max_beta) const;
  /// The same terms viewed in another context (same d, at least as many b
  /// variables); terms beyond the new beta bound are dropped.
  [[nodiscard]] Polynomial in_context(const RingContext& ctx) const;

  [[nodiscard]] Polynomial scaled(const Integer& c) const;
  /// c * m * this, computed without re-sorting.
  [[nodiscard]] Polynomial times_term(const Monomial& m, const Integer& c) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  friend class TermAccumulator;
  Polynomial(const RingContext& ctx, std::vector<Monomial> monos, std::vector<Integer> coeffs)
      : ctx_(ctx), monos_(std::move(monos)), coeffs_(std::move(coeffs))
  {
  }
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract);
  std::size_t slot_of(Variable v) const;

  RingContext ctx_;
  std::vector<Monomial> monos_;
  std::vector<Integer> coeffs_;
};

/// Sums many polynomials and products of polynomials in a hash table and
/// sorts once at the end. Multiplication, determinants and series
/// convolutions all funnel through here.
class TermAccumulator {
 public:
  explicit TermAccumulator(const RingContext& ctx);
  ~TermAccumulator();
  TermAccumulator(const TermAccumulator&) = delete;
  TermAccumulator& operator=(const TermAccumulator&) = delete;

  void add(const Polynomial& p, const Integer& scale = Integer(1));
  /// += scale * p * q, discarding products past beta^N.
  void add_product(const Polynomial& p, const Polynomial& q, const Integer& scale = Integer(1));
  [[nodiscard]] Polynomial finish();

 private:
  struct Table;
  RingContext ctx_;
  Table* table_;
};

[[nodiscard]] Polynomial pow(const Polynomial& p, unsigned exponent);

/// Inverse of a unit 1 + beta*q via the finite geometric series. Throws
/// NotAUnit unless the constant term is 1 and every other term carries beta.
[[nodiscard]] Polynomial unit_inverse(const Polynomial& p);

/// r with r * q == p in R. Throws NotDivisible carrying the leading term of
/// the remainder, or std::invalid_argument when q is zero.
///
/// q is split into beta-homogeneous layers and the quotient is solved layer
/// by layer; each layer division treats the dividend as univariate in the
/// first variable of the divisor, dividing coefficients recursively. When q
/// has positive beta-valuation v the quotient is only determined modulo
/// beta^(N+1-v); the representative with no terms above that is returned.
[[nodiscard]] Polynomial exact_div(const Polynomial& p, const Polynomial& q);

/// Assignment of replacements to variables: an integer constant, or (for x
/// and b) another variable of the same family. Unassigned variables stay.
class Substitution {
 public:
  explicit Substitution(const RingContext& ctx);

  Substitution& assign(Variable v, const Integer& value);
  Substitution& rename(Variable v, Variable target);
  /// x_i <-> x_j
  static Substitution swap_x(const RingContext& ctx, int i, int j);

  [[nodiscard]] const RingContext& context() const noexcept { return ctx_; }

 private:
  friend Polynomial substitute(const Polynomial& p, const Substitution& s);
  struct Slot {
    bool constant = false;
    Integer value;
    std::size_t target = 0;
  };
  std::size_t slot_of(Variable v) const;

  RingContext ctx_;
  std::vector<Slot> slots_;  // indexed by monomial slot
};

[[nodiscard]] Polynomial substitute(const Polynomial& p, const Substitution& s);

/// Dense matrix of polynomials sharing one context; 0-based indices.
class PolyMatrix {
 public:
  PolyMatrix(const RingContext& ctx, std::size_t rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] const RingContext& context() const noexcept { return ctx_; }
  [[nodiscard]] Polynomial& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  [[nodiscard]] const Polynomial& at(std::size_t r, std::size_t c) const
  {
    return cells_[r * cols_ + c];
  }
  void swap_rows(std::size_t a, std::size_t b);

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

 private:
  RingContext ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> cells_;
};

/// Division-free determinant: Laplace expansion from the bottom row up,
/// memoising every minor by its column set. Throws std::invalid_argument
/// for a non-square matrix.
[[nodiscard]] Polynomial determinant(const PolyMatrix& m);

}  // namespace gpjt

#endif  // GPJT_RING_HPP
