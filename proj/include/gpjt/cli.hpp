#ifndef GPJT_CLI_HPP
#define GPJT_CLI_HPP

#include <ostream>

namespace gpjt {

/// Exit codes: 0 success, 1 some identity check failed, 2 usage or input error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// N used by `coeff` when none is given: d - 1 + k + max(0, -m).
[[nodiscard]] int default_coeff_trunc(int d, int k, int m);

}  // namespace gpjt

#endif  // GPJT_CLI_HPP
