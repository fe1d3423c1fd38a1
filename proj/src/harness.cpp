#include "gpjt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include "gpjt/io.hpp"

namespace gpjt {

using nlohmann::json;

Check compare(std::string name, json params, const Polynomial& lhs, const Polynomial& rhs)
{
  Check c{std::move(name), std::move(params), true, std::nullopt};
  const Polynomial diff = lhs - rhs;
  if (!diff.is_zero()) {
    const Monomial& m = diff.monomials().front();
    c.passed = false;
    c.witness = Witness{std::nullopt, monomial_text(lhs.context(), m), lhs.coefficient(m).str(),
                        rhs.coefficient(m).str()};
  }
  return c;
}

Check compare(std::string name, json params, const LaurentSeries& lhs, const LaurentSeries& rhs,
              int lo, int hi)
{
  params["window"] = {lo, hi};
  for (int m = lo; m <= hi; ++m) {
    Check c = compare(name, params, lhs.coeff(m), rhs.coeff(m));
    if (!c.passed) {
      c.witness->u_power = m;
      return c;
    }
  }
  return Check{std::move(name), std::move(params), true, std::nullopt};
}

// ---------------------------------------------------------------------------

void VerificationReport::append(const VerificationReport& other)
{
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  if (other.error_ && !error_) {
    error_ = other.error_;
  }
}

std::size_t VerificationReport::failures() const
{
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

bool VerificationReport::all_passed() const
{
  return !error_ && failures() == 0;
}

json VerificationReport::to_json() const
{
  json checks = json::array();
  for (const Check& c : checks_) {
    json entry = {{"name", c.name}, {"params", c.params}, {"status", c.passed ? "pass" : "fail"}};
    if (c.witness) {
      json w = {{"monomial", c.witness->monomial}, {"lhs", c.witness->lhs}, {"rhs", c.witness->rhs}};
      if (c.witness->u_power) {
        w["u_power"] = *c.witness->u_power;
      }
      entry["witness"] = std::move(w);
    }
    checks.push_back(std::move(entry));
  }
  json out = {{"checks", std::move(checks)},
              {"context", context_ ? gpjt::to_json(*context_) : json(nullptr)},
              {"error", error_ ? json(*error_) : json(nullptr)},
              {"passed", all_passed()},
              {"summary", {{"failed", failures()}, {"total", checks_.size()}}}};
  return out;
}

std::string VerificationReport::to_text() const
{
  std::string out;
  if (context_) {
    out += "context " + context_->str() + "\n";
  }
  for (const Check& c : checks_) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name + " " + c.params.dump();
    if (c.witness) {
      out += " differs at ";
      if (c.witness->u_power) {
        out += "u^" + std::to_string(*c.witness->u_power) + " ";
      }
      out += c.witness->monomial + ": " + c.witness->lhs + " vs " + c.witness->rhs;
    }
    out += "\n";
  }
  if (error_) {
    out += "ERROR " + *error_ + "\n";
  }
  out += std::to_string(checks_.size()) + " checks, " + std::to_string(failures()) + " failed\n";
  return out;
}

// ---------------------------------------------------------------------------

std::string method_name(Method m)
{
  switch (m) {
    case Method::bialternant:
      return "bialternant";
    case Method::hm:
      return "hm";
    case Method::himn:
      return "himn";
  }
  return "?";
}

Method parse_method(std::string_view name)
{
  for (Method m : {Method::bialternant, Method::hm, Method::himn}) {
    if (name == method_name(m)) {
      return m;
    }
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

Polynomial compute(const RingContext& ctx, const IndexVector& a, Method m)
{
  switch (m) {
    case Method::bialternant:
      return bialternant(ctx, a);
    case Method::hm:
      return hm_determinant(ctx, a);
    case Method::himn:
      return himn_determinant(ctx, a);
  }
  throw std::logic_error("unreachable");
}

unsigned sweep_threads()
{
  if (const char* env = std::getenv("GPJT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return static_cast<unsigned>(v);
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

template <class Fn>
void parallel_for(std::size_t n, Fn fn)
{
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(sweep_threads(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

json theorem_params(const IndexVector& a, const RingContext& ctx)
{
  return {{"a", a.values()}, {"B", ctx.B}, {"N", ctx.N}, {"d", ctx.d}};
}

constexpr Method kMethods[] = {Method::bialternant, Method::hm, Method::himn};

}  // namespace

VerificationReport verify_theorem(int d, const std::vector<int>& values,
                                  const TheoremOptions& options)
{
  std::optional<IndexVector> a;
  std::optional<RingContext> ctx;
  try {
    if (d < 1) {
      throw std::invalid_argument("d must be at least 1");
    }
    if (static_cast<int>(values.size()) != d) {
      throw std::invalid_argument("index vector has " + std::to_string(values.size()) +
                                  " entries, expected d=" + std::to_string(d));
    }
    a.emplace(values);
    ctx.emplace(theorem_context(*a, options.beta_trunc));
  } catch (const std::exception& e) {
    VerificationReport report;
    report.set_error(e.what());
    return report;
  }

  VerificationReport report(*ctx);
  const json params = theorem_params(*a, *ctx);
  std::vector<Polynomial> values_at_n;
  for (Method m : kMethods) {
    values_at_n.push_back(compute(*ctx, *a, m));
  }
  report.add(compare("bialternant=hm", params, values_at_n[0], values_at_n[1]));
  report.add(compare("bialternant=himn", params, values_at_n[0], values_at_n[2]));
  report.add(compare("hm=himn", params, values_at_n[1], values_at_n[2]));

  if (options.check_stabilization) {
    const RingContext wider(ctx->d, ctx->B, ctx->N + 1);
    for (std::size_t i = 0; i < std::size(kMethods); ++i) {
      const Polynomial again = compute(wider, *a, kMethods[i]).in_context(*ctx);
      report.add(compare("stable:" + method_name(kMethods[i]), params, again, values_at_n[i]));
    }
  }
  return report;
}

VerificationReport verify_theorem_sweep(int d, int max_part, const TheoremOptions& options)
{
  if (d < 1 || max_part < 0) {
    VerificationReport report;
    report.set_error("sweep needs d >= 1 and a non-negative bound");
    return report;
  }
  const std::vector<Partition> cases = partitions_in_box(d, max_part);
  std::vector<VerificationReport> parts(cases.size());
  parallel_for(cases.size(),
               [&](std::size_t i) { parts[i] = verify_theorem(d, cases[i].parts(), options); });
  VerificationReport report;
  for (const auto& p : parts) {
    report.append(p);
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

Polynomial unit(const RingContext& ctx, int i)
{
  return Polynomial::one(ctx) + Polynomial::beta(ctx) * Polynomial::x(ctx, i);
}

Polynomial beta_power(const RingContext& ctx, int s, const Integer& c)
{
  Monomial m;
  m.exps[kBetaSlot] = static_cast<std::uint8_t>(s);
  return Polynomial::term(ctx, m, c);
}

/// sum_{s<=N} coeff(s) beta^s
template <class Coeff>
Polynomial beta_series(const RingContext& ctx, Coeff coeff)
{
  Polynomial out(ctx);
  for (int s = 0; s <= ctx.N; ++s) {
    out += beta_power(ctx, s, coeff(s));
  }
  return out;
}

void check_generating_functions(VerificationReport& report, const RingContext& ctx, int k)
{
  const int d = ctx.d;
  const int top = k + 3;
  const LaurentSeries g = gk_series(ctx, k, top);
  const LaurentSeries bbar = bbar_factor_series(ctx, k);
  const LaurentSeries inv_beta = inverse_beta_series(ctx);
  Polynomial all_units = Polynomial::one(ctx);
  for (int i = 1; i <= d; ++i) {
    all_units *= unit(ctx, i);
  }

  report.add(compare("bbar_factor", {{"k", k}}, bbar, b_factor_series(ctx, k), 0, k));

  for (int j = 1; j <= d; ++j) {
    const json params = {{"j", j}, {"k", k}};
    const Polynomial xj = Polynomial::x(ctx, j);
    const LaurentSeries geometric = geometric_series(xj, top + ctx.N);
    const LaurentSeries e = e_series(ctx, j);
    const LaurentSeries ebar = ebar_series(ctx, j);

    const LaurentSeries lhs_e = laurent_mul(g, shift_substitute(e, Shift::negate));
    const LaurentSeries rhs_e = laurent_mul(
        laurent_mul(laurent_mul(inv_beta, geometric), LaurentSeries::constant(all_units)), bbar);
    report.add(compare("series_product_E", params, lhs_e, rhs_e, -ctx.N, top));

    const LaurentSeries lhs_ebar = laurent_mul(g, shift_substitute(ebar, Shift::negate_minus_beta));
    const LaurentSeries rhs_ebar = laurent_mul(
        laurent_mul(laurent_mul(inv_beta, geometric), LaurentSeries::constant(unit(ctx, j))), bbar);
    report.add(compare("series_product_Ebar", params, lhs_ebar, rhs_ebar, -ctx.N, top));

    Polynomial others = Polynomial::one(ctx);
    for (int i = 1; i <= d; ++i) {
      if (i != j) {
        others *= unit(ctx, i);
      }
    }
    const Polynomial fp = factorial_power(xj, k);
    for (int m = k; m <= top; ++m) {
      json mp = params;
      mp["m"] = m;
      Polynomial lhs(ctx);
      Polynomial lhs_bar(ctx);
      for (int p = 0; p < d; ++p) {
        const Polynomial sign = Polynomial::constant(ctx, Integer(p % 2 == 0 ? 1 : -1));
        lhs += g.coeff(m - p) * sign * e.coeff(p);
        Polynomial inner(ctx);
        for (int s = 0; s <= p && s <= ctx.N; ++s) {
          inner += beta_power(ctx, s, gen_binomial(p, s)) * g.coeff(m - p + s);
        }
        lhs_bar += inner * sign * ebar.coeff(p);
      }
      const Polynomial shifted = pow(xj, static_cast<unsigned>(m - k)) * fp;
      report.add(compare("coefficient_identity_E", mp, lhs, shifted * others));
      report.add(compare("coefficient_identity_Ebar", mp, lhs_bar, shifted));
    }

    for (int l = 1; l <= k; ++l) {
      const Polynomial bl = Polynomial::b(ctx, l);
      const Polynomial bb = bar(ctx, Variable::b(l));
      const Polynomial lhs =
          (xj - bb) * unit_inverse(Polynomial::one(ctx) + Polynomial::beta(ctx) * bb);
      report.add(compare("oplus_from_bar", {{"j", j}, {"l", l}}, lhs, oplus(xj, bl)));
    }
  }
}

void check_matrix_products(VerificationReport& report, const RingContext& ctx, int k_max)
{
  const int d = ctx.d;
  const PolyMatrix m = build_M(ctx);
  const PolyMatrix mbar = build_Mbar(ctx);
  Polynomial all_units = Polynomial::one(ctx);
  std::vector<Polynomial> inverses;
  for (int i = 1; i <= d; ++i) {
    all_units *= unit(ctx, i);
    inverses.push_back(unit_inverse(unit(ctx, i)));
  }

  // Every index vector whose levels a_i + d - i lie in [0, k_max].
  std::vector<int> levels(static_cast<std::size_t>(d), 0);
  while (true) {
    std::vector<int> values(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i) {
      values[static_cast<std::size_t>(i - 1)] = levels[static_cast<std::size_t>(i - 1)] - d + i;
    }
    const IndexVector a(values);
    const PolyMatrix hm = hm_matrix_from_coefficients(ctx, a) * m;
    const PolyMatrix hmbar = himn_matrix_from_coefficients(ctx, a) * mbar;
    for (int i = 1; i <= d; ++i) {
      const int level = a.level(i);
      for (int j = 1; j <= d; ++j) {
        const json params = {{"a", values}, {"i", i}, {"j", j}};
        const Polynomial fp = factorial_power(Polynomial::x(ctx, j), level);
        const Polynomial& inv = inverses[static_cast<std::size_t>(j - 1)];
        const auto r = static_cast<std::size_t>(i - 1);
        const auto c = static_cast<std::size_t>(j - 1);
        report.add(compare("HM_entry", params, hm.at(r, c),
                           fp * pow(inv, static_cast<unsigned>(d + 1 - i)) * all_units));
        report.add(compare("HprimeMbar_entry", params, hmbar.at(r, c),
                           fp * pow(unit(ctx, j), static_cast<unsigned>(i - 1)) *
                               pow(inv, static_cast<unsigned>(d - 1))));
      }
    }
    std::size_t pos = 0;
    while (pos < levels.size() && levels[pos] == k_max) {
      levels[pos++] = 0;
    }
    if (pos == levels.size()) {
      break;
    }
    ++levels[pos];
  }
}

void check_binomial_convolution(VerificationReport& report, const RingContext& ctx)
{
  const int d = ctx.d;
  for (int i = 1; i <= d; ++i) {
    for (int p = 0; p < d; ++p) {
      const Polynomial lhs = beta_series(ctx, [&](int s) { return gen_binomial(i - d + p, s); });
      const Polynomial rhs = beta_series(ctx, [&](int s) {
        Integer sum(0);
        for (int l = 0; l <= s; ++l) {
          sum.add_mul(gen_binomial(i - d, l), gen_binomial(p, s - l));
        }
        return sum;
      });
      report.add(compare("binomial_convolution", {{"i", i}, {"p", p}}, lhs, rhs));
    }
  }
}

}  // namespace

VerificationReport verify_minor_determinants(const RingContext& ctx)
{
  VerificationReport report(ctx);
  const int d = ctx.d;
  const Polynomial v = vandermonde(ctx);
  report.add(compare("det_M", {{"d", d}}, determinant(build_M(ctx)), v));

  Polynomial inverse_units = Polynomial::one(ctx);
  Polynomial bar_product = Polynomial::one(ctx);
  for (int i = 1; i <= d; ++i) {
    inverse_units *= pow(unit_inverse(unit(ctx, i)), static_cast<unsigned>(d - 1));
    for (int j = i + 1; j <= d; ++j) {
      bar_product *= bar(ctx, Variable::x(j)) - bar(ctx, Variable::x(i));
    }
  }
  const Polynomial det_mbar = determinant(build_Mbar(ctx));
  report.add(compare("det_Mbar", {{"d", d}}, det_mbar, inverse_units * v));
  report.add(compare("det_Mbar_bar_product", {{"d", d}}, det_mbar, bar_product));
  return report;
}

VerificationReport verify_proof_suite(int d, int k_max, int beta_trunc)
{
  if (k_max < 0) {
    throw std::invalid_argument("k-max must be non-negative");
  }
  const RingContext ctx(d, k_max, beta_trunc);
  VerificationReport report(ctx);
  for (int k = 0; k <= k_max; ++k) {
    check_generating_functions(report, ctx, k);
  }
  check_matrix_products(report, ctx, k_max);
  report.append(verify_minor_determinants(ctx));
  check_binomial_convolution(report, ctx);
  return report;
}

}  // namespace gpjt
