#ifndef GPJT_SRC_KERNELS_IMPL_HPP
#define GPJT_SRC_KERNELS_IMPL_HPP

#include "gpjt/kernels.hpp"

namespace gpjt::kernels::detail {

bool shift_scalar(const Monomial* src, std::size_t n, const Monomial& by, Monomial* dst);
void degrees_scalar(const Monomial* src, std::size_t n, std::uint32_t* out);

#if defined(__x86_64__) || defined(_M_X64)
#define GPJT_HAVE_AVX2_KERNELS 1
bool shift_avx2(const Monomial* src, std::size_t n, const Monomial& by, Monomial* dst);
void degrees_avx2(const Monomial* src, std::size_t n, std::uint32_t* out);
#endif

}  // namespace gpjt::kernels::detail

#endif  // GPJT_SRC_KERNELS_IMPL_HPP
