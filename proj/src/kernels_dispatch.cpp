#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace gpjt::kernels {

namespace {

constexpr Table kScalar{"scalar", &detail::shift_scalar, &detail::degrees_scalar};

#ifdef GPJT_HAVE_AVX2_KERNELS
constexpr Table kAvx2{"avx2", &detail::shift_avx2, &detail::degrees_avx2};
#endif

const Table& select()
{
  if (const char* forced = std::getenv("GPJT_SIMD"); forced != nullptr) {
    if (std::string_view(forced) == "scalar") {
      return kScalar;
    }
  }
  if (const Table* t = avx2_table(); t != nullptr) {
    return *t;
  }
  return kScalar;
}

}  // namespace

const Table& scalar_table() noexcept
{
  return kScalar;
}

const Table* avx2_table() noexcept
{
#ifdef GPJT_HAVE_AVX2_KERNELS
  if (__builtin_cpu_supports("avx2")) {
    return &kAvx2;
  }
#endif
  return nullptr;
}

const Table& active() noexcept
{
  static const Table& chosen = select();
  return chosen;
}

}  // namespace gpjt::kernels
