#include "gpjt/series.hpp"

#include <algorithm>

#include "gpjt/binomial.hpp"

namespace gpjt {

namespace {

Polynomial beta_power(const RingContext& ctx, unsigned s, const Integer& c)
{
  Monomial m;
  if (s > static_cast<unsigned>(ctx.N)) {
    return Polynomial(ctx);
  }
  m.exps[kBetaSlot] = static_cast<std::uint8_t>(s);
  return Polynomial::term(ctx, m, c);
}

int exact_hi(const LaurentSeries& f, const LaurentSeries& g)
{
  if (f.terminates() && g.terminates()) {
    return f.hi() + g.hi();
  }
  if (f.terminates()) {
    return g.hi() + f.lo();
  }
  if (g.terminates()) {
    return f.hi() + g.lo();
  }
  return std::min(f.hi() + g.lo(), g.hi() + f.lo());
}

Polynomial product_coefficient(const LaurentSeries& f, const LaurentSeries& g, int n)
{
  TermAccumulator acc(f.context());
  const int first = std::max(f.lo(), n - g.hi());
  const int last = std::min(f.hi(), n - g.lo());
  for (int i = first; i <= last; ++i) {
    acc.add_product(f.coeff(i), g.coeff(n - i));
  }
  return acc.finish();
}

}  // namespace

LaurentSeries::LaurentSeries(const RingContext& ctx, int lo, std::vector<Polynomial> coeffs,
                             bool terminates)
    : ctx_(ctx), lo_(lo), coeffs_(std::move(coeffs)), terminates_(terminates)
{
  for (const auto& c : coeffs_) {
    if (!(c.context() == ctx_)) {
      throw ContextMismatch();
    }
  }
  if (coeffs_.empty()) {
    coeffs_.emplace_back(ctx_);
  }
  // Zero coefficients at the bottom carry no information; neither do zeros
  // at the top of a terminating series.
  std::size_t drop = 0;
  while (drop + 1 < coeffs_.size() && coeffs_[drop].is_zero()) {
    ++drop;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(drop));
  lo_ += static_cast<int>(drop);
  if (terminates_) {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) {
      coeffs_.pop_back();
    }
  }
}

LaurentSeries LaurentSeries::constant(const Polynomial& c)
{
  return LaurentSeries(c.context(), 0, {c}, true);
}

LaurentSeries LaurentSeries::polynomial(const RingContext& ctx, std::vector<Polynomial> coeffs)
{
  return LaurentSeries(ctx, 0, std::move(coeffs), true);
}

Polynomial LaurentSeries::coeff(int m) const
{
  if (m < lo_) {
    return Polynomial(ctx_);
  }
  if (m > hi()) {
    if (terminates_) {
      return Polynomial(ctx_);
    }
    throw OutOfWindow("coefficient of u^" + std::to_string(m) + " lies beyond the exact window (hi=" +
                      std::to_string(hi()) + ")");
  }
  return coeffs_[static_cast<std::size_t>(m - lo_)];
}

LaurentSeries laurent_mul(const LaurentSeries& f, const LaurentSeries& g)
{
  if (!(f.context() == g.context())) {
    throw ContextMismatch();
  }
  const int lo = f.lo() + g.lo();
  const int hi = exact_hi(f, g);
  std::vector<Polynomial> coeffs;
  for (int n = lo; n <= hi; ++n) {
    coeffs.push_back(product_coefficient(f, g, n));
  }
  return LaurentSeries(f.context(), lo, std::move(coeffs), f.terminates() && g.terminates());
}

std::vector<Polynomial> product_coefficients(const LaurentSeries& f, const LaurentSeries& g,
                                             int lo, int hi)
{
  if (!(f.context() == g.context())) {
    throw ContextMismatch();
  }
  if (!(f.terminates() && g.terminates()) && hi > exact_hi(f, g)) {
    throw OutOfWindow("requested u^" + std::to_string(hi) + " beyond the exact window of a product");
  }
  std::vector<Polynomial> out;
  for (int n = lo; n <= hi; ++n) {
    out.push_back(n < f.lo() + g.lo() ? Polynomial(f.context()) : product_coefficient(f, g, n));
  }
  return out;
}

LaurentSeries shift_substitute(const LaurentSeries& f, Shift s)
{
  const RingContext& ctx = f.context();
  if (s == Shift::negate) {
    std::vector<Polynomial> coeffs;
    for (int m = f.lo(); m <= f.hi(); ++m) {
      coeffs.push_back(m % 2 == 0 ? f.coeff(m) : -f.coeff(m));
    }
    return LaurentSeries(ctx, f.lo(), std::move(coeffs), f.terminates());
  }
  if (f.lo() < 0) {
    throw std::invalid_argument("u -> -u - beta needs a series without negative powers of u");
  }
  // (-u - beta)^p = sum_t (-1)^p C(p, t) beta^t u^(p-t)
  const int hi = f.terminates() ? f.hi() : f.hi() - ctx.N;
  if (hi < 0) {
    throw OutOfWindow("series too short for u -> -u - beta");
  }
  std::vector<Polynomial> coeffs;
  for (int n = 0; n <= hi; ++n) {
    TermAccumulator acc(ctx);
    const int top = f.terminates() ? f.hi() : n + ctx.N;
    for (int p = std::max(n, f.lo()); p <= top; ++p) {
      const int t = p - n;
      if (t > ctx.N) {
        break;
      }
      Integer c = gen_binomial(p, t);
      if (p % 2 != 0) {
        c.negate();
      }
      acc.add_product(f.coeff(p), beta_power(ctx, static_cast<unsigned>(t), c));
    }
    coeffs.push_back(acc.finish());
  }
  return LaurentSeries(ctx, 0, std::move(coeffs), f.terminates());
}

Polynomial bar(const RingContext& ctx, Variable v)
{
  if (v.kind == VarKind::beta) {
    throw std::invalid_argument("bar is defined for x and b variables only");
  }
  const Polynomial y = Polynomial::variable(ctx, v);
  return -(y * unit_inverse(Polynomial::one(ctx) + Polynomial::beta(ctx) * y));
}

LaurentSeries inverse_beta_series(const RingContext& ctx)
{
  std::vector<Polynomial> coeffs;
  for (int s = ctx.N; s >= 0; --s) {
    coeffs.push_back(beta_power(ctx, static_cast<unsigned>(s), Integer(s % 2 == 0 ? 1 : -1)));
  }
  return LaurentSeries(ctx, -ctx.N, std::move(coeffs), true);
}

LaurentSeries binomial_series(const RingContext& ctx, long n)
{
  std::vector<Polynomial> coeffs;
  for (int s = ctx.N; s >= 0; --s) {
    coeffs.push_back(beta_power(ctx, static_cast<unsigned>(s), gen_binomial(n, s)));
  }
  return LaurentSeries(ctx, -ctx.N, std::move(coeffs), true);
}

LaurentSeries geometric_series(const Polynomial& y, int degree)
{
  const RingContext& ctx = y.context();
  std::vector<Polynomial> coeffs{Polynomial::one(ctx)};
  for (int n = 1; n <= degree; ++n) {
    coeffs.push_back(coeffs.back() * y);
  }
  return LaurentSeries(ctx, 0, std::move(coeffs), false);
}

LaurentSeries cauchy_series(const RingContext& ctx, int degree)
{
  if (degree < 0) {
    throw std::invalid_argument("negative expansion degree");
  }
  std::vector<Polynomial> coeffs(static_cast<std::size_t>(degree) + 1, Polynomial(ctx));
  coeffs[0] = Polynomial::one(ctx);
  Polynomial numerator = Polynomial::one(ctx);
  for (int i = 1; i <= ctx.d; ++i) {
    // Multiplying by 1/(1 - x_i u) is the running recurrence c_n += x_i c_{n-1}.
    Monomial xi;
    xi.exps[ctx.x_slot(i)] = 1;
    for (std::size_t n = 1; n < coeffs.size(); ++n) {
      coeffs[n] += coeffs[n - 1].times_term(xi, Integer(1));
    }
    numerator *= Polynomial::one(ctx) + Polynomial::beta(ctx) * Polynomial::x(ctx, i);
  }
  for (auto& c : coeffs) {
    c = c * numerator;
  }
  return LaurentSeries(ctx, 0, std::move(coeffs), false);
}

LaurentSeries b_factor_series(const RingContext& ctx, int k)
{
  if (k < 0 || k > ctx.B) {
    throw std::out_of_range("b factor index " + std::to_string(k) + " outside 0.." +
                            std::to_string(ctx.B));
  }
  LaurentSeries out = LaurentSeries::constant(Polynomial::one(ctx));
  for (int j = 1; j <= k; ++j) {
    const Polynomial bj = Polynomial::b(ctx, j);
    out = laurent_mul(out, LaurentSeries::polynomial(
                               ctx, {Polynomial::one(ctx) + Polynomial::beta(ctx) * bj, bj}));
  }
  return out;
}

LaurentSeries bbar_factor_series(const RingContext& ctx, int k)
{
  if (k < 0 || k > ctx.B) {
    throw std::out_of_range("b factor index " + std::to_string(k) + " outside 0.." +
                            std::to_string(ctx.B));
  }
  LaurentSeries out = LaurentSeries::constant(Polynomial::one(ctx));
  for (int l = 1; l <= k; ++l) {
    const Polynomial bb = bar(ctx, Variable::b(l));
    const Polynomial inv = unit_inverse(Polynomial::one(ctx) + Polynomial::beta(ctx) * bb);
    out = laurent_mul(out, LaurentSeries::polynomial(ctx, {inv, -(bb * inv)}));
  }
  return out;
}

LaurentSeries e_series(const RingContext& ctx, int j)
{
  static_cast<void>(ctx.x_slot(j));  // range check
  LaurentSeries out = LaurentSeries::constant(Polynomial::one(ctx));
  for (int i = 1; i <= ctx.d; ++i) {
    if (i != j) {
      out = laurent_mul(out, LaurentSeries::polynomial(ctx, {Polynomial::one(ctx), Polynomial::x(ctx, i)}));
    }
  }
  return out;
}

LaurentSeries ebar_series(const RingContext& ctx, int j)
{
  static_cast<void>(ctx.x_slot(j));  // range check
  LaurentSeries out = LaurentSeries::constant(Polynomial::one(ctx));
  for (int i = 1; i <= ctx.d; ++i) {
    if (i != j) {
      out = laurent_mul(out, LaurentSeries::polynomial(
                                 ctx, {Polynomial::one(ctx), -bar(ctx, Variable::x(i))}));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

GkFactors::GkFactors(const RingContext& ctx, int max_degree)
    : ctx_(ctx), inverse_beta_(inverse_beta_series(ctx)), cauchy_(cauchy_series(ctx, max_degree))
{
  for (int k = 0; k <= ctx.B; ++k) {
    b_factors_.push_back(b_factor_series(ctx, k));
  }
}

const LaurentSeries& GkFactors::b_factor(int k) const
{
  if (k < 0 || k > ctx_.B) {
    throw std::out_of_range("series level k=" + std::to_string(k) + " needs k <= B=" +
                            std::to_string(ctx_.B));
  }
  return b_factors_[static_cast<std::size_t>(k)];
}

LaurentSeries GkFactors::series(int k, int m_max) const
{
  const LaurentSeries& bk = b_factor(k);
  if (m_max < -ctx_.N) {
    throw std::invalid_argument("m_max below -N");
  }
  // 1/(1 + beta/u) times the Cauchy factor vanishes below u^-N in R.
  const LaurentSeries head(ctx_, -ctx_.N, product_coefficients(inverse_beta_, cauchy_, -ctx_.N, m_max),
                           false);
  return LaurentSeries(ctx_, -ctx_.N, product_coefficients(head, bk, -ctx_.N, m_max), false);
}

Polynomial GkFactors::coefficient(int k, int m) const
{
  return weighted_coefficient(LaurentSeries::constant(Polynomial::one(ctx_)), k, m);
}

Polynomial GkFactors::weighted_coefficient(const LaurentSeries& weights, int k, int m) const
{
  const LaurentSeries& bk = b_factor(k);
  if (!weights.terminates() || weights.hi() > 0) {
    throw std::invalid_argument("weights must be a finite series in u^-1");
  }
  const LaurentSeries head = laurent_mul(weights, inverse_beta_);
  const int k_top = bk.hi();
  const std::vector<Polynomial> left = product_coefficients(head, cauchy_, m - k_top, m);
  TermAccumulator acc(ctx_);
  for (int q = 0; q <= k_top; ++q) {
    acc.add_product(bk.coeff(q), left[static_cast<std::size_t>(k_top - q)]);
  }
  return acc.finish();
}

LaurentSeries gk_series(const RingContext& ctx, int k, int m_max)
{
  if (k < 0 || k > ctx.B) {
    throw std::out_of_range("series level k=" + std::to_string(k) + " needs k <= B=" +
                            std::to_string(ctx.B));
  }
  if (m_max < -ctx.N) {
    throw std::invalid_argument("m_max below -N");
  }
  return GkFactors(ctx, m_max + ctx.N).series(k, m_max);
}

Polynomial g_coeff(const RingContext& ctx, int k, int m)
{
  if (k < 0 || k > ctx.B) {
    throw std::out_of_range("series level k=" + std::to_string(k) + " needs k <= B=" +
                            std::to_string(ctx.B));
  }
  if (m < -ctx.N) {
    return Polynomial(ctx);
  }
  return GkFactors(ctx, m + ctx.N).coefficient(k, m);
}

}  // namespace gpjt
