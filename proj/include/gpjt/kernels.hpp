#ifndef GPJT_KERNELS_HPP
#define GPJT_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "gpjt/monomial.hpp"

// Batch kernels over packed monomials. Each has a portable scalar reference
// version and, on x86-64, an AVX2 version that processes one monomial per
// 256-bit register. The active table is picked once at first use from the
// CPU's capabilities; GPJT_SIMD=scalar forces the reference kernels.
namespace gpjt::kernels {

struct Table {
  std::string_view name;
  // dst[i] = src[i] * by. Returns false when some exponent would exceed
  // kMaxExponent; dst is then unspecified.
  bool (*shift)(const Monomial* src, std::size_t n, const Monomial& by, Monomial* dst);
  // out[i] = total degree of src[i].
  void (*degrees)(const Monomial* src, std::size_t n, std::uint32_t* out);
};

const Table& scalar_table() noexcept;
/// nullptr when the build or the CPU lacks AVX2.
const Table* avx2_table() noexcept;
const Table& active() noexcept;

inline bool shift(std::span<const Monomial> src, const Monomial& by, std::span<Monomial> dst)
{
  return active().shift(src.data(), src.size(), by, dst.data());
}

inline void degrees(std::span<const Monomial> src, std::span<std::uint32_t> out)
{
  active().degrees(src.data(), src.size(), out.data());
}

}  // namespace gpjt::kernels

#endif  // GPJT_KERNELS_HPP
