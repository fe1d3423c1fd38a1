#include <vector>

#include "gpjt/ring.hpp"

namespace gpjt {

namespace {

[[noreturn]] void fail(const Polynomial& remainder, unsigned beta_shift)
{
  Monomial w = remainder.leading_monomial();
  w.exps[kBetaSlot] = static_cast<std::uint8_t>(w.exps[kBetaSlot] + beta_shift);
  throw NotDivisible(w, remainder.leading_coefficient(), "polynomial is not divisible");
}

// Splits p by the exponent at slot; parts[k] holds the terms with exponent
// k, with that exponent cleared.
std::vector<Polynomial> split_at(const Polynomial& p, std::size_t slot)
{
  std::vector<std::vector<Monomial>> monos;
  std::vector<std::vector<Integer>> coeffs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Monomial m = p.monomials()[i];
    const unsigned k = m.exps[slot];
    if (k >= monos.size()) {
      monos.resize(k + 1);
      coeffs.resize(k + 1);
    }
    m.exps[slot] = 0;
    monos[k].push_back(m);
    coeffs[k].push_back(p.coefficients()[i]);
  }
  std::vector<Polynomial> parts;
  for (std::size_t k = 0; k < monos.size(); ++k) {
    parts.push_back(Polynomial::from_terms(p.context(), std::move(monos[k]), std::move(coeffs[k])));
  }
  return parts;
}

// sum_{k < count} parts[k] * v^k with v at slot.
Polynomial join_at(const RingContext& ctx, const std::vector<Polynomial>& parts, std::size_t slot,
                   std::size_t count)
{
  std::vector<Monomial> monos;
  std::vector<Integer> coeffs;
  for (std::size_t k = 0; k < count && k < parts.size(); ++k) {
    for (std::size_t i = 0; i < parts[k].size(); ++i) {
      Monomial m = parts[k].monomials()[i];
      m.exps[slot] = static_cast<std::uint8_t>(k);
      monos.push_back(m);
      coeffs.push_back(parts[k].coefficients()[i]);
    }
  }
  return Polynomial::from_terms(ctx, std::move(monos), std::move(coeffs));
}

// Exact division of beta-free polynomials. Both sides are viewed as
// univariate in the first variable occurring in the divisor, and each
// quotient coefficient comes from dividing by the divisor's leading
// coefficient recursively.
Polynomial divide_layer(const Polynomial& p, const Polynomial& q)
{
  const RingContext& ctx = p.context();
  if (p.is_zero()) {
    return p;
  }
  if (q.is_one()) {
    return p;
  }
  if (q.size() == 1) {
    const Monomial& m = q.monomials()[0];
    const Integer& c = q.coefficients()[0];
    std::vector<Monomial> monos;
    std::vector<Integer> coeffs;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!m.divides(p.monomials()[i]) || !p.coefficients()[i].divisible_by(c)) {
        throw NotDivisible(p.monomials()[i], p.coefficients()[i], "polynomial is not divisible");
      }
      monos.push_back(quotient(p.monomials()[i], m));
      coeffs.push_back(p.coefficients()[i].divexact(c));
    }
    return Polynomial::from_terms(ctx, std::move(monos), std::move(coeffs));
  }

  std::size_t slot = kBetaSlot;
  for (const auto& m : q.monomials()) {
    for (std::size_t s = 0; s < slot; ++s) {
      if (m.exps[s] != 0) {
        slot = s;
        break;
      }
    }
  }
  const std::vector<Polynomial> divisor = split_at(q, slot);
  const std::size_t n = divisor.size() - 1;
  const Polynomial& lead = divisor[n];

  std::vector<Polynomial> rest = split_at(p, slot);
  if (rest.size() <= n) {
    fail(p, 0);
  }
  std::vector<Polynomial> quot(rest.size() - n, Polynomial(ctx));
  for (std::size_t k = rest.size() - 1; k >= n; --k) {
    if (!rest[k].is_zero()) {
      Polynomial t(ctx);
      try {
        t = divide_layer(rest[k], lead);
      } catch (const NotDivisible&) {
        fail(join_at(ctx, rest, slot, k + 1), 0);
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!divisor[i].is_zero()) {
          rest[k - n + i] -= divisor[i] * t;
        }
      }
      quot[k - n] = std::move(t);
    }
    if (k == n) {
      break;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!rest[k].is_zero()) {
      fail(join_at(ctx, rest, slot, n), 0);
    }
  }
  return join_at(ctx, quot, slot, quot.size());
}

}  // namespace

Polynomial exact_div(const Polynomial& p, const Polynomial& q)
{
  if (!(p.context() == q.context())) {
    throw ContextMismatch();
  }
  if (q.is_zero()) {
    throw std::invalid_argument("division by zero polynomial");
  }
  const RingContext& ctx = p.context();
  const auto top = static_cast<unsigned>(ctx.N);

  unsigned valuation = 0;
  while (q.beta_layer(valuation).is_zero()) {
    ++valuation;
  }
  if (valuation > 0) {
    const Polynomial low = p.truncated(valuation - 1);
    if (!low.is_zero()) {
      fail(low, 0);
    }
  }

  std::vector<Polynomial> divisor_layers = split_at(q, kBetaSlot);
  divisor_layers.erase(divisor_layers.begin(), divisor_layers.begin() + valuation);
  const std::vector<Polynomial> dividend_layers = split_at(p, kBetaSlot);
  const Polynomial& base = divisor_layers[0];

  std::vector<Polynomial> layers;
  for (unsigned t = 0; t + valuation <= top; ++t) {
    const std::size_t at = t + valuation;
    Polynomial rhs = at < dividend_layers.size() ? dividend_layers[at] : Polynomial(ctx);
    bool corrected = false;
    TermAccumulator acc(ctx);
    for (unsigned e = 1; e <= t && e < divisor_layers.size(); ++e) {
      if (!divisor_layers[e].is_zero() && !layers[t - e].is_zero()) {
        acc.add_product(divisor_layers[e], layers[t - e], Integer(-1));
        corrected = true;
      }
    }
    if (corrected) {
      acc.add(rhs);
      rhs = acc.finish();
    }
    try {
      layers.push_back(divide_layer(rhs, base));
    } catch (const NotDivisible& err) {
      Monomial w = err.witness();
      w.exps[kBetaSlot] = static_cast<std::uint8_t>(at);
      throw NotDivisible(w, err.coefficient(), err.what());
    }
  }
  return join_at(ctx, layers, kBetaSlot, layers.size());
}

}  // namespace gpjt
