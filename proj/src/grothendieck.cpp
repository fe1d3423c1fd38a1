#include "gpjt/grothendieck.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace gpjt {

namespace {

std::vector<int> parse_csv(std::string_view text)
{
  std::vector<int> out;
  while (!text.empty() && text.front() == ' ') {
    text.remove_prefix(1);
  }
  if (text.empty()) {
    return out;
  }
  while (true) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') {
      item.remove_prefix(1);
    }
    while (!item.empty() && item.back() == ' ') {
      item.remove_suffix(1);
    }
    int v = 0;
    const auto* end = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(item.data(), end, v);
    if (item.empty() || ec != std::errc() || ptr != end) {
      throw std::invalid_argument("malformed integer list '" + std::string(text) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string join(const std::vector<int>& v)
{
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? "," : "") + std::to_string(v[i]);
  }
  return out;
}

void require_fits(const RingContext& ctx, const IndexVector& a)
{
  if (ctx.d != a.d()) {
    throw std::invalid_argument("index vector length " + std::to_string(a.d()) +
                                " does not match d=" + std::to_string(ctx.d));
  }
  if (ctx.B < a.max_level()) {
    throw std::invalid_argument("B=" + std::to_string(ctx.B) + " is too small; need " +
                                std::to_string(a.max_level()) + " b variables");
  }
}

Polynomial one_plus_beta_x(const RingContext& ctx, int i)
{
  return Polynomial::one(ctx) + Polynomial::beta(ctx) * Polynomial::x(ctx, i);
}

using WeightFn = long (*)(int i, int j, int d);

PolyMatrix jacobi_trudi_matrix(const RingContext& ctx, const IndexVector& a, WeightFn top)
{
  require_fits(ctx, a);
  const int d = ctx.d;
  // Largest coefficient index is a_i + d - i (j = d) and the weights reach
  // N steps further up.
  const GkFactors factors(ctx, std::max(0, a.max_level()) + ctx.N);
  PolyMatrix h(ctx, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) {
    const int k = a.level(i);
    const int a_i = a.values()[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= d; ++j) {
      const LaurentSeries weights = binomial_series(ctx, top(i, j, d));
      h.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          factors.weighted_coefficient(weights, k, a_i + j - i);
    }
  }
  return h;
}

PolyMatrix literal_matrix(const RingContext& ctx, const IndexVector& a, WeightFn top)
{
  require_fits(ctx, a);
  const int d = ctx.d;
  const int max_index = a.max_level() + ctx.N;
  std::vector<LaurentSeries> rows;
  for (int k = 0; k <= ctx.B; ++k) {
    rows.push_back(gk_series(ctx, k, max_index));
  }
  PolyMatrix h(ctx, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) {
    const int k = a.level(i);
    const int a_i = a.values()[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= d; ++j) {
      Polynomial entry(ctx);
      for (int s = 0; s <= ctx.N; ++s) {
        Monomial bs;
        bs.exps[kBetaSlot] = static_cast<std::uint8_t>(s);
        const Polynomial g = rows[static_cast<std::size_t>(k)].coeff(a_i + j - i + s);
        entry += g.times_term(bs, gen_binomial(top(i, j, d), s));
      }
      h.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = entry;
    }
  }
  return h;
}

long hm_top(int i, int /*j*/, int d)
{
  return i - d;
}

long himn_top(int i, int j, int /*d*/)
{
  return i - j;
}

}  // namespace

// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> parts, int d) : parts_(std::move(parts))
{
  if (d < 1) {
    throw std::invalid_argument("d must be at least 1");
  }
  while (!parts_.empty() && parts_.back() == 0 && static_cast<int>(parts_.size()) > d) {
    parts_.pop_back();
  }
  if (static_cast<int>(parts_.size()) > d) {
    throw std::invalid_argument("partition has more than d=" + std::to_string(d) + " parts");
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw std::invalid_argument("partition parts must be non-negative");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  parts_.resize(static_cast<std::size_t>(d), 0);
}

Partition Partition::parse(std::string_view text, int d)
{
  return Partition(parse_csv(text), d);
}

int Partition::size() const noexcept
{
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const
{
  return "(" + join(parts_) + ")";
}

IndexVector::IndexVector(std::vector<int> values) : values_(std::move(values))
{
  if (values_.empty()) {
    throw std::invalid_argument("index vector must have at least one entry");
  }
  for (int i = 1; i <= d(); ++i) {
    if (level(i) < 0) {
      throw std::invalid_argument("a_" + std::to_string(i) + " + d - " + std::to_string(i) + " = " +
                                  std::to_string(level(i)) + " < 0");
    }
  }
}

IndexVector IndexVector::parse(std::string_view text)
{
  return IndexVector(parse_csv(text));
}

int IndexVector::level(int i) const
{
  return values_.at(static_cast<std::size_t>(i - 1)) + d() - i;
}

int IndexVector::max_level() const
{
  int best = 0;
  for (int i = 1; i <= d(); ++i) {
    best = std::max(best, level(i));
  }
  return best;
}

bool IndexVector::is_partition() const
{
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || (i > 0 && values_[i] > values_[i - 1])) {
      return false;
    }
  }
  return true;
}

std::string IndexVector::str() const
{
  return "(" + join(values_) + ")";
}

int default_beta_trunc(const IndexVector& a)
{
  const int d = a.d();
  int weight = 0;
  for (int i = 1; i <= d; ++i) {
    weight += a.is_partition() ? a.values()[static_cast<std::size_t>(i - 1)] : a.level(i);
  }
  return weight + d * (d - 1);
}

RingContext theorem_context(const IndexVector& a, std::optional<int> beta_trunc)
{
  return RingContext(a.d(), a.max_level(), beta_trunc.value_or(default_beta_trunc(a)));
}

// ---------------------------------------------------------------------------

Polynomial oplus(const Polynomial& p, const Polynomial& q)
{
  return p + q + Polynomial::beta(p.context()) * p * q;
}

Polynomial factorial_power(const Polynomial& y, int k)
{
  const RingContext& ctx = y.context();
  if (k < 0 || k > ctx.B) {
    throw std::out_of_range("factorial power " + std::to_string(k) + " needs k <= B=" +
                            std::to_string(ctx.B));
  }
  Polynomial out = Polynomial::one(ctx);
  for (int l = 1; l <= k; ++l) {
    out *= oplus(y, Polynomial::b(ctx, l));
  }
  return out;
}

PolyMatrix bialternant_numerator(const RingContext& ctx, const IndexVector& a)
{
  require_fits(ctx, a);
  const int d = ctx.d;
  PolyMatrix m(ctx, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int j = 1; j <= d; ++j) {
    const Polynomial xj = Polynomial::x(ctx, j);
    const Polynomial unit = one_plus_beta_x(ctx, j);
    Polynomial unit_power = Polynomial::one(ctx);
    for (int i = 1; i <= d; ++i) {
      m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          factorial_power(xj, a.level(i)) * unit_power;
      unit_power *= unit;
    }
  }
  return m;
}

Polynomial vandermonde(const RingContext& ctx)
{
  Polynomial out = Polynomial::one(ctx);
  for (int i = 1; i <= ctx.d; ++i) {
    for (int j = i + 1; j <= ctx.d; ++j) {
      out *= Polynomial::x(ctx, i) - Polynomial::x(ctx, j);
    }
  }
  return out;
}

Polynomial bialternant(const RingContext& ctx, const IndexVector& a)
{
  Polynomial value = determinant(bialternant_numerator(ctx, a));
  for (int i = 1; i <= ctx.d; ++i) {
    for (int j = i + 1; j <= ctx.d; ++j) {
      try {
        value = exact_div(value, Polynomial::x(ctx, i) - Polynomial::x(ctx, j));
      } catch (const NotDivisible& e) {
        // The numerator is alternating, so this cannot happen.
        throw std::logic_error(std::string("bi-alternant numerator not divisible: ") + e.what());
      }
    }
  }
  return value;
}

PolyMatrix hm_matrix(const RingContext& ctx, const IndexVector& a)
{
  return jacobi_trudi_matrix(ctx, a, &hm_top);
}

PolyMatrix himn_matrix(const RingContext& ctx, const IndexVector& a)
{
  return jacobi_trudi_matrix(ctx, a, &himn_top);
}

PolyMatrix hm_matrix_from_coefficients(const RingContext& ctx, const IndexVector& a)
{
  return literal_matrix(ctx, a, &hm_top);
}

PolyMatrix himn_matrix_from_coefficients(const RingContext& ctx, const IndexVector& a)
{
  return literal_matrix(ctx, a, &himn_top);
}

Polynomial hm_determinant(const RingContext& ctx, const IndexVector& a)
{
  return determinant(hm_matrix(ctx, a));
}

Polynomial himn_determinant(const RingContext& ctx, const IndexVector& a)
{
  return determinant(himn_matrix(ctx, a));
}

namespace {

PolyMatrix signed_elementary_matrix(const RingContext& ctx, LaurentSeries (*series)(const RingContext&, int))
{
  const int d = ctx.d;
  PolyMatrix m(ctx, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int j = 1; j <= d; ++j) {
    const LaurentSeries e = series(ctx, j);
    for (int i = 1; i <= d; ++i) {
      const Polynomial c = e.coeff(d - i);
      m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          (d - i) % 2 == 0 ? c : -c;
    }
  }
  return m;
}

}  // namespace

PolyMatrix build_M(const RingContext& ctx)
{
  return signed_elementary_matrix(ctx, &e_series);
}

PolyMatrix build_Mbar(const RingContext& ctx)
{
  return signed_elementary_matrix(ctx, &ebar_series);
}

namespace {

Polynomial specialize(const Polynomial& p, long beta_value)
{
  const RingContext& ctx = p.context();
  Substitution s(ctx);
  s.assign(Variable::beta(), Integer(beta_value));
  for (int j = 1; j <= ctx.B; ++j) {
    s.assign(Variable::b(j), Integer(0));
  }
  return substitute(p, s);
}

}  // namespace

Polynomial schur_specialize(const Polynomial& p)
{
  return specialize(p, 0);
}

Polynomial buch_specialize(const Polynomial& p)
{
  return specialize(p, -1);
}

Polynomial ssyt_schur_oracle(const RingContext& ctx, const Partition& lambda)
{
  const int d = ctx.d;
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.d(); ++r) {
    for (int c = 0; c < lambda.parts()[static_cast<std::size_t>(r)]; ++c) {
      cells.emplace_back(r, c);
    }
  }
  if (lambda.d() > d && lambda.parts()[static_cast<std::size_t>(d)] > 0) {
    return Polynomial(ctx);
  }
  std::vector<std::vector<int>> filling(static_cast<std::size_t>(lambda.d()));
  for (int r = 0; r < lambda.d(); ++r) {
    filling[static_cast<std::size_t>(r)].assign(
        static_cast<std::size_t>(lambda.parts()[static_cast<std::size_t>(r)]), 0);
  }

  std::vector<Monomial> monos;
  std::vector<Integer> coeffs;
  auto recurse = [&](auto&& self, std::size_t index) -> void {
    if (index == cells.size()) {
      Monomial m;
      for (const auto& row : filling) {
        for (int v : row) {
          ++m.exps[ctx.x_slot(v)];
        }
      }
      monos.push_back(m);
      coeffs.emplace_back(1);
      return;
    }
    const auto [r, c] = cells[index];
    const auto ur = static_cast<std::size_t>(r);
    const auto uc = static_cast<std::size_t>(c);
    int low = 1;
    if (c > 0) {
      low = std::max(low, filling[ur][uc - 1]);  // rows weakly increase
    }
    if (r > 0) {
      low = std::max(low, filling[ur - 1][uc] + 1);  // columns strictly increase
    }
    for (int v = low; v <= d; ++v) {
      filling[ur][uc] = v;
      self(self, index + 1);
    }
    filling[ur][uc] = 0;
  };
  recurse(recurse, 0);
  return Polynomial::from_terms(ctx, std::move(monos), std::move(coeffs));
}

std::vector<Partition> partitions_in_box(int d, int max_part)
{
  std::vector<Partition> out;
  std::vector<int> parts(static_cast<std::size_t>(d), 0);
  auto recurse = [&](auto&& self, std::size_t index, int cap) -> void {
    if (index == parts.size()) {
      out.emplace_back(parts, d);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      parts[index] = v;
      self(self, index + 1, v);
    }
    parts[index] = 0;
  };
  recurse(recurse, 0, max_part);
  std::sort(out.begin(), out.end(),
            [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
  return out;
}

}  // namespace gpjt
