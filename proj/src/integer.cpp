#include "gpjt/integer.hpp"

#include <stdexcept>

namespace gpjt {

namespace {

mpz_class from_int64(std::int64_t v)
{
  mpz_class out;
  mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
  return out;
}

bool fits_int64(const mpz_class& v)
{
  return mpz_fits_slong_p(v.get_mpz_t()) != 0;
}

}  // namespace

Integer::Integer(const mpz_class& value)
{
  assign_big(value);
}

Integer::Integer(const Integer& other) : small_(other.small_)
{
  if (other.big_) {
    big_ = std::make_unique<mpz_class>(*other.big_);
  }
}

Integer& Integer::operator=(const Integer& other)
{
  if (this != &other) {
    small_ = other.small_;
    if (other.big_) {
      big_ = std::make_unique<mpz_class>(*other.big_);
    } else {
      big_.reset();
    }
  }
  return *this;
}

void Integer::assign_big(mpz_class value)
{
  if (fits_int64(value)) {
    small_ = mpz_get_si(value.get_mpz_t());
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(std::move(value));
  }
}

Integer Integer::parse(std::string_view text)
{
  std::string s(text);
  if (s.empty()) {
    throw std::invalid_argument("empty integer literal");
  }
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) {
    throw std::invalid_argument("malformed integer literal '" + s + "'");
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("malformed integer literal '" + s + "'");
    }
  }
  if (s[0] == '+') {
    s.erase(0, 1);
  }
  Integer out;
  out.assign_big(mpz_class(s, 10));
  return out;
}

int Integer::sign() const noexcept
{
  if (big_) {
    return mpz_sgn(big_->get_mpz_t());
  }
  return (small_ > 0) - (small_ < 0);
}

mpz_class Integer::to_mpz() const
{
  return big_ ? *big_ : from_int64(small_);
}

std::string Integer::str() const
{
  return big_ ? big_->get_str(10) : std::to_string(small_);
}

Integer& Integer::operator+=(const Integer& rhs)
{
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign_big(to_mpz() + rhs.to_mpz());
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs)
{
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign_big(to_mpz() - rhs.to_mpz());
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs)
{
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign_big(to_mpz() * rhs.to_mpz());
  return *this;
}

void Integer::add_mul_big(const Integer& a, const Integer& b)
{
  mpz_class acc = to_mpz();
  mpz_addmul(acc.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  assign_big(std::move(acc));
}

void Integer::negate()
{
  if (!big_ && small_ != INT64_MIN) {
    small_ = -small_;
    return;
  }
  assign_big(-to_mpz());
}

Integer Integer::operator-() const
{
  Integer out(*this);
  out.negate();
  return out;
}

bool Integer::divisible_by(const Integer& divisor) const
{
  if (divisor.is_zero()) {
    return is_zero();
  }
  if (!big_ && !divisor.big_ && divisor.small_ != -1) {
    return small_ % divisor.small_ == 0;
  }
  return mpz_divisible_p(to_mpz().get_mpz_t(), divisor.to_mpz().get_mpz_t()) != 0;
}

Integer Integer::divexact(const Integer& divisor) const
{
  if (!big_ && !divisor.big_ && divisor.small_ != -1) {
    return Integer(static_cast<long long>(small_ / divisor.small_));
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), to_mpz().get_mpz_t(), divisor.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer Integer::pow(unsigned exponent) const
{
  Integer result(1);
  Integer base(*this);
  while (exponent != 0) {
    if (exponent & 1U) {
      result *= base;
    }
    exponent >>= 1U;
    if (exponent != 0) {
      base *= base;
    }
  }
  return result;
}

bool operator==(const Integer& lhs, const Integer& rhs)
{
  if (!lhs.big_ && !rhs.big_) {
    return lhs.small_ == rhs.small_;
  }
  if (lhs.big_ && rhs.big_) {
    return *lhs.big_ == *rhs.big_;
  }
  // Normalised values never straddle representations.
  return false;
}

std::strong_ordering operator<=>(const Integer& lhs, const Integer& rhs)
{
  if (!lhs.big_ && !rhs.big_) {
    return lhs.small_ <=> rhs.small_;
  }
  const int c = cmp(lhs.to_mpz(), rhs.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace gpjt
