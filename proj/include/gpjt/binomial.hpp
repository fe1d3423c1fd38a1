#ifndef GPJT_BINOMIAL_HPP
#define GPJT_BINOMIAL_HPP

#include "gpjt/integer.hpp"

namespace gpjt {

/// Coefficient of t^s in (1+t)^n for any integer n; zero for s < 0.
/// For n < 0 this is (-1)^s * C(-n+s-1, s).
[[nodiscard]] Integer gen_binomial(long n, long s);

}  // namespace gpjt

#endif  // GPJT_BINOMIAL_HPP
