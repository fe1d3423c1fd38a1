#ifndef GPJT_MONOMIAL_HPP
#define GPJT_MONOMIAL_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>

namespace gpjt {

inline constexpr std::size_t kMonomialSlots = 32;
// beta always lives in the last slot so its exponent is at a fixed offset.
inline constexpr std::size_t kBetaSlot = kMonomialSlots - 1;
// Slots available for the x and b variables together.
inline constexpr std::size_t kMaxGenerators = kBetaSlot;
inline constexpr unsigned kMaxExponent = 255;

/// Packed exponent vector: one byte per variable, x_1..x_d first, then
/// b_1..b_B, unused slots zero, beta in the final slot. A whole monomial is
/// exactly one 256-bit vector register.
struct Monomial {
  std::array<std::uint8_t, kMonomialSlots> exps{};

  [[nodiscard]] unsigned beta() const noexcept { return exps[kBetaSlot]; }
  [[nodiscard]] unsigned degree() const noexcept
  {
    unsigned total = 0;
    for (auto e : exps) {
      total += e;
    }
    return total;
  }
  [[nodiscard]] bool is_one() const noexcept
  {
    for (auto e : exps) {
      if (e != 0) {
        return false;
      }
    }
    return true;
  }
  /// True when this monomial divides `other`.
  [[nodiscard]] bool divides(const Monomial& other) const noexcept
  {
    for (std::size_t i = 0; i < kMonomialSlots; ++i) {
      if (exps[i] > other.exps[i]) {
        return false;
      }
    }
    return true;
  }

  /// Exponents as four words; byte order is the host's.
  [[nodiscard]] std::array<std::uint64_t, 4> words() const noexcept
  {
    std::array<std::uint64_t, 4> w;
    std::memcpy(w.data(), exps.data(), sizeof(w));
    return w;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept
  {
    const auto wa = a.words();
    const auto wb = b.words();
    return ((wa[0] ^ wb[0]) | (wa[1] ^ wb[1]) | (wa[2] ^ wb[2]) | (wa[3] ^ wb[3])) == 0;
  }
};

static_assert(sizeof(Monomial) == 32);

/// Product of two monomials; throws std::overflow_error past kMaxExponent.
Monomial operator*(const Monomial& a, const Monomial& b);

/// a / b for b dividing a.
Monomial quotient(const Monomial& a, const Monomial& b) noexcept;

/// Canonical term order: ascending total degree; within a degree, the
/// monomial with the larger exponent at the first differing slot
/// (x_1, ..., x_d, b_1, ..., b_B, beta) comes first. It is a monomial order,
/// so multiplying both sides by a common monomial preserves it.
/// memcmp(a, b) > 0 on the exponent bytes.
inline bool lex_greater(const Monomial& a, const Monomial& b) noexcept
{
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    if (wa[i] != wb[i]) {
      if constexpr (std::endian::native == std::endian::little) {
        return __builtin_bswap64(wa[i]) > __builtin_bswap64(wb[i]);
      } else {
        return wa[i] > wb[i];
      }
    }
  }
  return false;
}

inline bool canonical_less(const Monomial& a, const Monomial& b) noexcept
{
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) {
    return da < db;
  }
  return lex_greater(a, b);
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept
  {
    // Independent products keep the four multiplies in flight together; the
    // final fold feeds high bits back into the low ones the table probes on.
    const auto w = m.words();
    std::uint64_t h = (w[0] * 0x9e3779b97f4a7c15ULL) ^ (w[1] * 0xc2b2ae3d27d4eb4fULL) ^
                      (w[2] * 0x165667b19e3779f9ULL) ^ (w[3] * 0xd6e8feb86659fd93ULL);
    h ^= h >> 32;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace gpjt

#endif  // GPJT_MONOMIAL_HPP
