#include "kernels_impl.hpp"

#include <stdexcept>

namespace gpjt {

Monomial operator*(const Monomial& a, const Monomial& b)
{
  Monomial out;
  for (std::size_t i = 0; i < kMonomialSlots; ++i) {
    const unsigned e = static_cast<unsigned>(a.exps[i]) + b.exps[i];
    if (e > kMaxExponent) {
      throw std::overflow_error("monomial exponent exceeds 255");
    }
    out.exps[i] = static_cast<std::uint8_t>(e);
  }
  return out;
}

Monomial quotient(const Monomial& a, const Monomial& b) noexcept
{
  Monomial out;
  for (std::size_t i = 0; i < kMonomialSlots; ++i) {
    out.exps[i] = static_cast<std::uint8_t>(a.exps[i] - b.exps[i]);
  }
  return out;
}

namespace kernels::detail {

bool shift_scalar(const Monomial* src, std::size_t n, const Monomial& by, Monomial* dst)
{
  bool ok = true;
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t i = 0; i < kMonomialSlots; ++i) {
      const unsigned e = static_cast<unsigned>(src[t].exps[i]) + by.exps[i];
      ok &= e <= kMaxExponent;
      dst[t].exps[i] = static_cast<std::uint8_t>(e);
    }
  }
  return ok;
}

void degrees_scalar(const Monomial* src, std::size_t n, std::uint32_t* out)
{
  for (std::size_t t = 0; t < n; ++t) {
    out[t] = src[t].degree();
  }
}

}  // namespace kernels::detail

}  // namespace gpjt
