#include "kernels_impl.hpp"

#ifdef GPJT_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace gpjt::kernels::detail {

namespace {

__attribute__((target("avx2"))) inline __m256i load(const Monomial& m)
{
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m.exps.data()));
}

}  // namespace

__attribute__((target("avx2"))) bool shift_avx2(const Monomial* src, std::size_t n,
                                                const Monomial& by, Monomial* dst)
{
  const __m256i b = load(by);
  __m256i ok = _mm256_set1_epi8(-1);
  for (std::size_t t = 0; t < n; ++t) {
    const __m256i a = load(src[t]);
    const __m256i s = _mm256_add_epi8(a, b);
    // A byte wrapped iff the unsigned sum dropped below the addend.
    ok = _mm256_and_si256(ok, _mm256_cmpeq_epi8(_mm256_max_epu8(a, s), s));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst[t].exps.data()), s);
  }
  return _mm256_movemask_epi8(ok) == -1;
}

__attribute__((target("avx2"))) void degrees_avx2(const Monomial* src, std::size_t n,
                                                  std::uint32_t* out)
{
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t t = 0; t < n; ++t) {
    const __m256i sums = _mm256_sad_epu8(load(src[t]), zero);
    const __m128i lo = _mm256_castsi256_si128(sums);
    const __m128i hi = _mm256_extracti128_si256(sums, 1);
    const __m128i s = _mm_add_epi64(lo, hi);
    out[t] = static_cast<std::uint32_t>(_mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1));
  }
}

}  // namespace gpjt::kernels::detail

#endif  // GPJT_HAVE_AVX2_KERNELS
