#include "gpjt/binomial.hpp"

namespace gpjt {

Integer gen_binomial(long n, long s)
{
  if (s < 0) {
    return Integer(0);
  }
  // mpz_bin_ui already follows the (1+t)^n convention for negative n.
  mpz_class out;
  mpz_class top = n;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(s));
  return Integer(out);
}

}  // namespace gpjt
