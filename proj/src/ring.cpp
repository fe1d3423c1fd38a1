#include "gpjt/ring.hpp"

#include <algorithm>
#include <numeric>

#include <absl/container/flat_hash_map.h>

#include "gpjt/kernels.hpp"

namespace gpjt {

namespace {

void require_same(const RingContext& a, const RingContext& b)
{
  if (!(a == b)) {
    throw ContextMismatch();
  }
}

// Sorts parallel term arrays into canonical order. Monomials must be unique.
void sort_canonical(std::vector<Monomial>& monos, std::vector<Integer>& coeffs)
{
  const std::size_t n = monos.size();
  std::vector<std::uint32_t> deg(n);
  kernels::degrees(monos, deg);
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (deg[a] != deg[b]) {
      return deg[a] < deg[b];
    }
    return lex_greater(monos[a], monos[b]);
  });
  std::vector<Monomial> m2(n);
  std::vector<Integer> c2(n);
  for (std::size_t i = 0; i < n; ++i) {
    m2[i] = monos[order[i]];
    c2[i] = std::move(coeffs[order[i]]);
  }
  monos = std::move(m2);
  coeffs = std::move(c2);
}

}  // namespace

RingContext::RingContext(int x_count, int b_count, int beta_trunc)
    : d(x_count), B(b_count), N(beta_trunc)
{
  if (d < 1) {
    throw std::invalid_argument("ring context needs at least one x variable");
  }
  if (B < 0 || N < 0) {
    throw std::invalid_argument("ring context sizes must be non-negative");
  }
  if (static_cast<std::size_t>(d + B) > kMaxGenerators) {
    throw std::invalid_argument("ring context supports at most 31 x and b variables");
  }
  if (static_cast<unsigned>(N) > kMaxExponent) {
    throw std::invalid_argument("beta truncation order above 255 is not supported");
  }
}

std::size_t RingContext::x_slot(int i) const
{
  if (i < 1 || i > d) {
    throw std::out_of_range("x index " + std::to_string(i) + " outside 1.." + std::to_string(d));
  }
  return static_cast<std::size_t>(i - 1);
}

std::size_t RingContext::b_slot(int j) const
{
  if (j < 1 || j > B) {
    throw std::out_of_range("b index " + std::to_string(j) + " outside 1.." + std::to_string(B));
  }
  return static_cast<std::size_t>(d + j - 1);
}

std::string RingContext::str() const
{
  return "d=" + std::to_string(d) + " B=" + std::to_string(B) + " N=" + std::to_string(N);
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::one(const RingContext& ctx)
{
  return constant(ctx, Integer(1));
}

Polynomial Polynomial::constant(const RingContext& ctx, const Integer& c)
{
  return term(ctx, Monomial{}, c);
}

Polynomial Polynomial::variable(const RingContext& ctx, Variable v)
{
  Monomial m;
  switch (v.kind) {
    case VarKind::x:
      m.exps[ctx.x_slot(v.index)] = 1;
      break;
    case VarKind::b:
      m.exps[ctx.b_slot(v.index)] = 1;
      break;
    case VarKind::beta:
      m.exps[kBetaSlot] = 1;
      break;
  }
  return term(ctx, m, Integer(1));
}

Polynomial Polynomial::term(const RingContext& ctx, const Monomial& m, const Integer& c)
{
  if (c.is_zero() || m.beta() > static_cast<unsigned>(ctx.N)) {
    return Polynomial(ctx);
  }
  return Polynomial(ctx, {m}, {c});
}

Polynomial Polynomial::from_terms(const RingContext& ctx, std::vector<Monomial> monomials,
                                  std::vector<Integer> coefficients)
{
  if (monomials.size() != coefficients.size()) {
    throw std::invalid_argument("monomial and coefficient counts differ");
  }
  const auto cap = static_cast<unsigned>(ctx.N);
  std::size_t kept = 0;
  bool sorted = true;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    const Monomial& m = monomials[i];
    for (std::size_t s = static_cast<std::size_t>(ctx.d + ctx.B); s < kBetaSlot; ++s) {
      if (m.exps[s] != 0) {
        throw std::out_of_range("monomial uses a variable outside the ring context");
      }
    }
    if (m.beta() > cap || coefficients[i].is_zero()) {
      continue;
    }
    if (kept > 0 && !canonical_less(monomials[kept - 1], m)) {
      sorted = false;
    }
    if (kept != i) {
      monomials[kept] = m;
      coefficients[kept] = std::move(coefficients[i]);
    }
    ++kept;
  }
  monomials.resize(kept);
  coefficients.resize(kept);
  if (sorted) {
    return Polynomial(ctx, std::move(monomials), std::move(coefficients));
  }
  // Sort, then combine repeated monomials and drop cancelled terms.
  sort_canonical(monomials, coefficients);
  std::size_t out = 0;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (out > 0 && monomials[out - 1] == monomials[i]) {
      coefficients[out - 1] += coefficients[i];
      continue;
    }
    if (out > 0 && coefficients[out - 1].is_zero()) {
      --out;
    }
    monomials[out] = monomials[i];
    coefficients[out] = std::move(coefficients[i]);
    ++out;
  }
  if (out > 0 && coefficients[out - 1].is_zero()) {
    --out;
  }
  monomials.resize(out);
  coefficients.resize(out);
  return Polynomial(ctx, std::move(monomials), std::move(coefficients));
}

bool Polynomial::is_one() const noexcept
{
  return monos_.size() == 1 && monos_[0].is_one() && coeffs_[0].is_one();
}

Integer Polynomial::coefficient(const Monomial& m) const
{
  auto it = std::lower_bound(monos_.begin(), monos_.end(), m, canonical_less);
  if (it != monos_.end() && *it == m) {
    return coeffs_[static_cast<std::size_t>(it - monos_.begin())];
  }
  return Integer(0);
}

Integer Polynomial::constant_term() const
{
  // Degree 0 sorts first.
  if (!monos_.empty() && monos_[0].is_one()) {
    return coeffs_[0];
  }
  return Integer(0);
}

unsigned Polynomial::beta_degree() const noexcept
{
  unsigned best = 0;
  for (const auto& m : monos_) {
    best = std::max(best, m.beta());
  }
  return best;
}

std::size_t Polynomial::slot_of(Variable v) const
{
  if (v.kind == VarKind::x) {
    return ctx_.x_slot(v.index);
  }
  if (v.kind == VarKind::b) {
    return ctx_.b_slot(v.index);
  }
  return kBetaSlot;
}

unsigned Polynomial::degree_in(Variable v) const
{
  const std::size_t slot = slot_of(v);
  unsigned best = 0;
  for (const auto& m : monos_) {
    best = std::max<unsigned>(best, m.exps[slot]);
  }
  return best;
}

Polynomial Polynomial::coefficient_of(Variable v, unsigned k) const
{
  const std::size_t slot = slot_of(v);
  Polynomial out(ctx_);
  // Dividing every kept term by the same power of v keeps canonical order.
  for (std::size_t i = 0; i < monos_.size(); ++i) {
    if (monos_[i].exps[slot] == k) {
      Monomial m = monos_[i];
      m.exps[slot] = 0;
      out.monos_.push_back(m);
      out.coeffs_.push_back(coeffs_[i]);
    }
  }
  return out;
}

Polynomial Polynomial::truncated(unsigned max_beta) const
{
  Polynomial out(ctx_);
  for (std::size_t i = 0; i < monos_.size(); ++i) {
    if (monos_[i].beta() <= max_beta) {
      out.monos_.push_back(monos_[i]);
      out.coeffs_.push_back(coeffs_[i]);
    }
  }
  return out;
}

Polynomial Polynomial::in_context(const RingContext& ctx) const
{
  if (ctx.d != ctx_.d || ctx.B < ctx_.B) {
    throw ContextMismatch();
  }
  Polynomial out = truncated(static_cast<unsigned>(ctx.N));
  out.ctx_ = ctx;
  return out;
}

Polynomial Polynomial::scaled(const Integer& c) const
{
  if (c.is_zero()) {
    return Polynomial(ctx_);
  }
  Polynomial out(*this);
  for (auto& v : out.coeffs_) {
    v *= c;
  }
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const Integer& c) const
{
  Polynomial out(ctx_);
  if (c.is_zero() || monos_.empty()) {
    return out;
  }
  std::vector<Monomial> shifted(monos_.size());
  if (!kernels::shift(monos_, m, shifted)) {
    throw std::overflow_error("monomial exponent exceeds 255");
  }
  const auto cap = static_cast<unsigned>(ctx_.N);
  out.monos_.reserve(shifted.size());
  out.coeffs_.reserve(shifted.size());
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    if (shifted[i].beta() <= cap) {
      out.monos_.push_back(shifted[i]);
      out.coeffs_.push_back(coeffs_[i] * c);
    }
  }
  return out;
}

Polynomial Polynomial::merge(const Polynomial& a, const Polynomial& b, bool subtract)
{
  require_same(a.ctx_, b.ctx_);
  Polynomial out(a.ctx_);
  out.monos_.reserve(a.size() + b.size());
  out.coeffs_.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && canonical_less(a.monos_[i], b.monos_[j]))) {
      out.monos_.push_back(a.monos_[i]);
      out.coeffs_.push_back(a.coeffs_[i]);
      ++i;
    } else if (i == a.size() || canonical_less(b.monos_[j], a.monos_[i])) {
      out.monos_.push_back(b.monos_[j]);
      out.coeffs_.push_back(subtract ? -b.coeffs_[j] : b.coeffs_[j]);
      ++j;
    } else {
      Integer c = a.coeffs_[i];
      if (subtract) {
        c -= b.coeffs_[j];
      } else {
        c += b.coeffs_[j];
      }
      if (!c.is_zero()) {
        out.monos_.push_back(a.monos_[i]);
        out.coeffs_.push_back(std::move(c));
      }
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
  return *this = merge(*this, rhs, false);
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
  return *this = merge(*this, rhs, true);
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
  return *this = *this * rhs;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
  return Polynomial::merge(a, b, false);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
  return Polynomial::merge(a, b, true);
}

Polynomial operator-(const Polynomial& a)
{
  Polynomial out(a);
  for (auto& c : out.coeffs_) {
    c.negate();
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
  require_same(a.ctx_, b.ctx_);
  if (a.is_zero() || b.is_zero()) {
    return Polynomial(a.ctx_);
  }
  if (a.size() == 1) {
    return b.times_term(a.monos_[0], a.coeffs_[0]);
  }
  if (b.size() == 1) {
    return a.times_term(b.monos_[0], b.coeffs_[0]);
  }
  TermAccumulator acc(a.ctx_);
  acc.add_product(a, b);
  return acc.finish();
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
  return a.ctx_ == b.ctx_ && a.monos_ == b.monos_ && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------

struct TermAccumulator::Table {
  // One map per (beta exponent, remaining degree). Products are formed one
  // output cell at a time, so the map being written stays small enough to
  // remain in cache.
  using Map = absl::flat_hash_map<Monomial, Integer, MonomialHash>;
  std::vector<std::vector<Map>> cells;
  std::vector<Monomial> scratch;

  Map& cell(unsigned beta, unsigned rest)
  {
    auto& row = cells[beta];
    if (rest >= row.size()) {
      row.resize(rest + 1);
    }
    return row[rest];
  }
};

TermAccumulator::TermAccumulator(const RingContext& ctx) : ctx_(ctx), table_(new Table)
{
  table_->cells.resize(static_cast<std::size_t>(ctx.N) + 1);
}

TermAccumulator::~TermAccumulator()
{
  delete table_;
}

void TermAccumulator::add(const Polynomial& p, const Integer& scale)
{
  require_same(ctx_, p.context());
  if (scale.is_zero()) {
    return;
  }
  const auto monos = p.monomials();
  const auto coeffs = p.coefficients();
  for (std::size_t i = 0; i < monos.size(); ++i) {
    const unsigned e = monos[i].beta();
    table_->cell(e, monos[i].degree() - e)[monos[i]].add_mul(coeffs[i], scale);
  }
}

namespace {

// Terms regrouped by (beta exponent e, remaining degree g): bucket (e, g) is
// [start[e * width + g], start[e * width + g + 1]).
struct Buckets {
  std::size_t width = 0;
  std::vector<std::size_t> start;
  std::vector<Monomial> monos;
  std::vector<Integer> coeffs;

  Buckets(const Polynomial& p, unsigned cap)
  {
    const auto pm = p.monomials();
    const auto pc = p.coefficients();
    std::vector<std::uint32_t> deg(pm.size());
    kernels::degrees(pm, deg);
    unsigned top = 0;
    for (std::size_t i = 0; i < pm.size(); ++i) {
      deg[i] -= pm[i].beta();
      top = std::max(top, deg[i]);
    }
    width = top + 1;
    start.assign((cap + 1) * width + 1, 0);
    for (std::size_t i = 0; i < pm.size(); ++i) {
      ++start[pm[i].beta() * width + deg[i] + 1];
    }
    std::partial_sum(start.begin(), start.end(), start.begin());
    monos.resize(pm.size());
    coeffs.resize(pm.size());
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (std::size_t i = 0; i < pm.size(); ++i) {
      const std::size_t at = fill[pm[i].beta() * width + deg[i]]++;
      monos[at] = pm[i];
      coeffs[at] = pc[i];
    }
  }

  [[nodiscard]] std::size_t begin(unsigned e, unsigned g) const { return start[e * width + g]; }
  [[nodiscard]] std::size_t end(unsigned e, unsigned g) const { return start[e * width + g + 1]; }
};

}  // namespace

void TermAccumulator::add_product(const Polynomial& p, const Polynomial& q, const Integer& scale)
{
  require_same(ctx_, p.context());
  require_same(ctx_, q.context());
  if (p.is_zero() || q.is_zero() || scale.is_zero()) {
    return;
  }
  // Output cell (t, g) collects outer bucket (e, f) times inner bucket
  // (t - e, g - f); each outer term against one inner bucket is one batch
  // kernel call.
  const Polynomial& outer = p.size() <= q.size() ? p : q;
  const Polynomial& inner = p.size() <= q.size() ? q : p;
  const auto cap = static_cast<unsigned>(ctx_.N);
  const Buckets ob(outer, cap);
  const Buckets ib(inner, cap);
  const auto ow = static_cast<unsigned>(ob.width);
  const auto iw = static_cast<unsigned>(ib.width);

  auto& scratch = table_->scratch;
  scratch.resize(inner.size());
  for (unsigned t = 0; t <= cap; ++t) {
    for (unsigned g = 0; g + 2 <= ow + iw; ++g) {
      Table::Map* cell = nullptr;
      for (unsigned e = 0; e <= t; ++e) {
        for (unsigned f = g >= iw ? g - iw + 1 : 0; f < ow && f <= g; ++f) {
          const std::size_t ilo = ib.begin(t - e, g - f);
          const std::size_t n = ib.end(t - e, g - f) - ilo;
          if (n == 0 || ob.begin(e, f) == ob.end(e, f)) {
            continue;
          }
          if (cell == nullptr) {
            cell = &table_->cell(t, g);
          }
          for (std::size_t o = ob.begin(e, f); o < ob.end(e, f); ++o) {
            if (!kernels::active().shift(ib.monos.data() + ilo, n, ob.monos[o], scratch.data())) {
              throw std::overflow_error("monomial exponent exceeds 255");
            }
            const Integer factor = scale.is_one() ? ob.coeffs[o] : ob.coeffs[o] * scale;
            for (std::size_t k = 0; k < n; ++k) {
              (*cell)[scratch[k]].add_mul(factor, ib.coeffs[ilo + k]);
            }
          }
        }
      }
    }
  }
}

Polynomial TermAccumulator::finish()
{
  std::size_t total = 0;
  for (const auto& row : table_->cells) {
    for (const auto& cell : row) {
      total += cell.size();
    }
  }
  std::vector<Monomial> monos;
  std::vector<Integer> coeffs;
  monos.reserve(total);
  coeffs.reserve(total);
  for (auto& row : table_->cells) {
    for (auto& cell : row) {
      for (auto& [m, c] : cell) {
        if (!c.is_zero()) {
          monos.push_back(m);
          coeffs.push_back(std::move(c));
        }
      }
    }
    row.clear();
  }
  sort_canonical(monos, coeffs);
  return Polynomial(ctx_, std::move(monos), std::move(coeffs));
}

// ---------------------------------------------------------------------------

Polynomial pow(const Polynomial& p, unsigned exponent)
{
  Polynomial result = Polynomial::one(p.context());
  Polynomial base = p;
  while (exponent != 0) {
    if (exponent & 1U) {
      result *= base;
    }
    exponent >>= 1U;
    if (exponent != 0) {
      base *= base;
    }
  }
  return result;
}

Polynomial unit_inverse(const Polynomial& p)
{
  const auto monos = p.monomials();
  if (p.constant_term() != Integer(1)) {
    throw NotAUnit("constant term is not 1");
  }
  for (std::size_t i = 1; i < monos.size(); ++i) {
    if (monos[i].beta() == 0) {
      throw NotAUnit("a non-constant term carries no beta factor");
    }
  }
  // p = 1 + q with beta | q, so 1/p = sum_{s<=N} (-q)^s, evaluated by Horner.
  const Polynomial one = Polynomial::one(p.context());
  const Polynomial q = p - one;
  Polynomial r = one;
  for (int s = 0; s < p.context().N; ++s) {
    r = one - q * r;
  }
  return r;
}

// ---------------------------------------------------------------------------

Substitution::Substitution(const RingContext& ctx) : ctx_(ctx), slots_(kMonomialSlots)
{
  for (std::size_t s = 0; s < kMonomialSlots; ++s) {
    slots_[s].target = s;
  }
}

std::size_t Substitution::slot_of(Variable v) const
{
  switch (v.kind) {
    case VarKind::x:
      return ctx_.x_slot(v.index);
    case VarKind::b:
      return ctx_.b_slot(v.index);
    case VarKind::beta:
      break;
  }
  return kBetaSlot;
}

Substitution& Substitution::assign(Variable v, const Integer& value)
{
  Slot& s = slots_[slot_of(v)];
  s.constant = true;
  s.value = value;
  return *this;
}

Substitution& Substitution::rename(Variable v, Variable target)
{
  if (v.kind != target.kind || v.kind == VarKind::beta) {
    throw std::invalid_argument("a variable may only be renamed within its own x or b family");
  }
  Slot& s = slots_[slot_of(v)];
  s.constant = false;
  s.target = slot_of(target);
  return *this;
}

Substitution Substitution::swap_x(const RingContext& ctx, int i, int j)
{
  Substitution s(ctx);
  s.rename(Variable::x(i), Variable::x(j));
  s.rename(Variable::x(j), Variable::x(i));
  return s;
}

Polynomial substitute(const Polynomial& p, const Substitution& s)
{
  require_same(p.context(), s.ctx_);
  TermAccumulator acc(p.context());
  const auto monos = p.monomials();
  const auto coeffs = p.coefficients();
  for (std::size_t i = 0; i < monos.size(); ++i) {
    Monomial out;
    Integer c = coeffs[i];
    for (std::size_t slot = 0; slot < kMonomialSlots && !c.is_zero(); ++slot) {
      const unsigned e = monos[i].exps[slot];
      if (e == 0) {
        continue;
      }
      const auto& rule = s.slots_[slot];
      if (rule.constant) {
        c *= rule.value.pow(e);
      } else {
        const unsigned sum = out.exps[rule.target] + e;
        if (sum > kMaxExponent) {
          throw std::overflow_error("monomial exponent exceeds 255");
        }
        out.exps[rule.target] = static_cast<std::uint8_t>(sum);
      }
    }
    acc.add(Polynomial::term(p.context(), out, c));
  }
  return acc.finish();
}

// ---------------------------------------------------------------------------

PolyMatrix::PolyMatrix(const RingContext& ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), cells_(rows * cols, Polynomial(ctx))
{
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b)
{
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap(at(a, c), at(b, c));
  }
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
  require_same(a.ctx_, b.ctx_);
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("matrix shapes do not compose");
  }
  PolyMatrix out(a.ctx_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      TermAccumulator acc(a.ctx_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        acc.add_product(a.at(i, k), b.at(k, j));
      }
      out.at(i, j) = acc.finish();
    }
  }
  return out;
}

Polynomial determinant(const PolyMatrix& m)
{
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) {
    return Polynomial::one(m.context());
  }
  if (n > 20) {
    throw std::invalid_argument("determinant size above 20 is not supported");
  }
  // minor[mask]: determinant of the bottom popcount(mask) rows restricted to
  // the columns in mask.
  std::vector<Polynomial> minor(std::size_t{1} << n, Polynomial(m.context()));
  minor[0] = Polynomial::one(m.context());
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    for (std::size_t mask = 1; mask < minor.size(); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) {
        continue;
      }
      if (size == n && mask != minor.size() - 1) {
        continue;
      }
      TermAccumulator acc(m.context());
      int position = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if ((mask >> c) & 1U) {
          const Polynomial& sub = minor[mask & ~(std::size_t{1} << c)];
          acc.add_product(m.at(row, c), sub, Integer(position % 2 == 0 ? 1 : -1));
          ++position;
        }
      }
      minor[mask] = acc.finish();
    }
  }
  return minor.back();
}

}  // namespace gpjt
