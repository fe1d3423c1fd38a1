#ifndef GPJT_IO_HPP
#define GPJT_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "gpjt/ring.hpp"

namespace gpjt {

/// Canonical text form: terms in canonical order joined by " + ", each an
/// integer coefficient followed by "*"-separated factors x<i>, b<j>, beta,
/// with "^<e>" for exponents above one. A constant term is just its
/// coefficient and the zero polynomial is "0". Example:
///   1*x1 + 1*b1 + 1*x1*b1*beta
[[nodiscard]] std::string to_text(const Polynomial& p);
[[nodiscard]] std::string monomial_text(const RingContext& ctx, const Monomial& m);

/// Accepts the canonical form and any reordering of it; repeated monomials
/// are summed and omitted exponents mean 1. Throws ParseError.
[[nodiscard]] Polynomial parse_text(const RingContext& ctx, std::string_view text);

/// {"context": {"B", "N", "d"}, "terms": [{"b", "beta", "coeff", "x"}, ...]}
/// with decimal-string coefficients and terms in canonical order.
[[nodiscard]] nlohmann::json to_json(const Polynomial& p);
[[nodiscard]] nlohmann::json to_json(const RingContext& ctx);
/// Throws ParseError on schema violations.
[[nodiscard]] Polynomial polynomial_from_json(const nlohmann::json& j);
[[nodiscard]] RingContext context_from_json(const nlohmann::json& j);

}  // namespace gpjt

#endif  // GPJT_IO_HPP
