#ifndef GPJT_INTEGER_HPP
#define GPJT_INTEGER_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gpjt {

/// Arbitrary-precision signed integer.
///
/// Values that fit in 64 bits are stored inline and use overflow-checked
/// machine arithmetic; anything larger is promoted to a GMP integer and
/// demoted again as soon as it fits. Almost every coefficient met while
/// expanding Grothendieck polynomials is small, so the inline path is the
/// hot one.
class Integer {
 public:
  Integer() noexcept = default;
  Integer(long long value) noexcept : small_(static_cast<std::int64_t>(value)) {}
  explicit Integer(const mpz_class& value);

  Integer(const Integer& other);
  Integer(Integer&& other) noexcept = default;
  Integer& operator=(const Integer& other);
  Integer& operator=(Integer&& other) noexcept = default;
  ~Integer() = default;

  /// Parses an optionally signed decimal string. Throws std::invalid_argument.
  static Integer parse(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return !big_ && small_ == 1; }
  [[nodiscard]] int sign() const noexcept;
  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] std::int64_t small_value() const noexcept { return small_; }
  [[nodiscard]] mpz_class to_mpz() const;
  [[nodiscard]] std::string str() const;

  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);

  /// *this += a * b
  void add_mul(const Integer& a, const Integer& b)
  {
    std::int64_t p;
    std::int64_t r;
    if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &p) &&
        !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
    add_mul_big(a, b);
  }

  void negate();
  [[nodiscard]] Integer operator-() const;

  [[nodiscard]] bool divisible_by(const Integer& divisor) const;
  /// Exact quotient; the caller guarantees divisibility and a nonzero divisor.
  [[nodiscard]] Integer divexact(const Integer& divisor) const;

  /// this^exponent
  [[nodiscard]] Integer pow(unsigned exponent) const;

  friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
  friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
  friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }

  friend bool operator==(const Integer& lhs, const Integer& rhs);
  friend std::strong_ordering operator<=>(const Integer& lhs, const Integer& rhs);

 private:
  void assign_big(mpz_class value);
  void add_mul_big(const Integer& a, const Integer& b);

  std::int64_t small_ = 0;
  // Engaged only when the value does not fit in small_.
  std::unique_ptr<mpz_class> big_;
};

}  // namespace gpjt

#endif  // GPJT_INTEGER_HPP
