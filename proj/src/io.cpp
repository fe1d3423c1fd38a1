#include "gpjt/io.hpp"

#include <charconv>

namespace gpjt {

namespace {

void append_factor(std::string& out, const std::string& name, unsigned e)
{
  out += '*';
  out += name;
  if (e > 1) {
    out += '^';
    out += std::to_string(e);
  }
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_int(std::string_view s, std::string_view what)
{
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("malformed " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

Monomial parse_factors(const RingContext& ctx, std::string_view factors, Monomial m)
{
  while (!factors.empty()) {
    const auto star = factors.find('*');
    const std::string_view factor = trim(factors.substr(0, star));
    factors = star == std::string_view::npos ? std::string_view{} : factors.substr(star + 1);

    const auto caret = factor.find('^');
    const std::string_view name = factor.substr(0, caret);
    int exponent = 1;
    if (caret != std::string_view::npos) {
      exponent = parse_int(factor.substr(caret + 1), "exponent");
      if (exponent < 0) {
        throw ParseError("negative exponent in '" + std::string(factor) + "'");
      }
    }
    std::size_t slot = 0;
    try {
      if (name == "beta") {
        slot = kBetaSlot;
      } else if (name.size() > 1 && name[0] == 'x') {
        slot = ctx.x_slot(parse_int(name.substr(1), "variable index"));
      } else if (name.size() > 1 && name[0] == 'b') {
        slot = ctx.b_slot(parse_int(name.substr(1), "variable index"));
      } else {
        throw ParseError("unknown factor '" + std::string(factor) + "'");
      }
    } catch (const std::out_of_range& e) {
      throw ParseError(e.what());
    }
    const unsigned sum = m.exps[slot] + static_cast<unsigned>(exponent);
    if (sum > kMaxExponent) {
      throw ParseError("exponent too large in '" + std::string(factor) + "'");
    }
    m.exps[slot] = static_cast<std::uint8_t>(sum);
  }
  return m;
}

}  // namespace

std::string monomial_text(const RingContext& ctx, const Monomial& m)
{
  std::string out;
  for (int i = 1; i <= ctx.d; ++i) {
    if (const unsigned e = m.exps[ctx.x_slot(i)]; e != 0) {
      append_factor(out, "x" + std::to_string(i), e);
    }
  }
  for (int j = 1; j <= ctx.B; ++j) {
    if (const unsigned e = m.exps[ctx.b_slot(j)]; e != 0) {
      append_factor(out, "b" + std::to_string(j), e);
    }
  }
  if (m.beta() != 0) {
    append_factor(out, "beta", m.beta());
  }
  // Drop the leading '*'.
  return out.empty() ? "1" : out.substr(1);
}

std::string to_text(const Polynomial& p)
{
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  const auto monos = p.monomials();
  const auto coeffs = p.coefficients();
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (i != 0) {
      out += " + ";
    }
    out += coeffs[i].str();
    if (!monos[i].is_one()) {
      out += '*';
      out += monomial_text(p.context(), monos[i]);
    }
  }
  return out;
}

Polynomial parse_text(const RingContext& ctx, std::string_view text)
{
  text = trim(text);
  if (text.empty()) {
    throw ParseError("empty polynomial text");
  }
  std::vector<Monomial> monos;
  std::vector<Integer> coeffs;
  while (!text.empty()) {
    // '+' only ever separates terms; a negative coefficient is written "-c".
    const auto plus = text.find('+');
    const std::string_view term = trim(text.substr(0, plus));
    text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 1);
    if (term.empty() || (plus != std::string_view::npos && trim(text).empty())) {
      throw ParseError("empty term");
    }
    const auto star = term.find('*');
    const std::string_view coeff_text = trim(term.substr(0, star));
    Integer c;
    try {
      c = Integer::parse(coeff_text);
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed coefficient '" + std::string(coeff_text) + "'");
    }
    Monomial m;
    if (star != std::string_view::npos) {
      const std::string_view rest = term.substr(star + 1);
      if (trim(rest).empty()) {
        throw ParseError("dangling '*' in '" + std::string(term) + "'");
      }
      m = parse_factors(ctx, rest, m);
    }
    monos.push_back(m);
    coeffs.push_back(std::move(c));
  }
  return Polynomial::from_terms(ctx, std::move(monos), std::move(coeffs));
}

nlohmann::json to_json(const RingContext& ctx)
{
  return nlohmann::json{{"d", ctx.d}, {"B", ctx.B}, {"N", ctx.N}};
}

nlohmann::json to_json(const Polynomial& p)
{
  const RingContext& ctx = p.context();
  nlohmann::json terms = nlohmann::json::array();
  const auto monos = p.monomials();
  const auto coeffs = p.coefficients();
  for (std::size_t i = 0; i < monos.size(); ++i) {
    std::vector<int> xs;
    std::vector<int> bs;
    for (int k = 1; k <= ctx.d; ++k) {
      xs.push_back(monos[i].exps[ctx.x_slot(k)]);
    }
    for (int k = 1; k <= ctx.B; ++k) {
      bs.push_back(monos[i].exps[ctx.b_slot(k)]);
    }
    terms.push_back(
        {{"coeff", coeffs[i].str()}, {"x", xs}, {"b", bs}, {"beta", monos[i].beta()}});
  }
  return nlohmann::json{{"context", to_json(ctx)}, {"terms", std::move(terms)}};
}

RingContext context_from_json(const nlohmann::json& j)
{
  try {
    return RingContext(j.at("d").get<int>(), j.at("B").get<int>(), j.at("N").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad context: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad context: ") + e.what());
  }
}

Polynomial polynomial_from_json(const nlohmann::json& j)
{
  if (!j.is_object() || !j.contains("context")) {
    throw ParseError("polynomial JSON must be an object with a context");
  }
  const RingContext ctx = context_from_json(j.at("context"));
  std::vector<Monomial> monos;
  std::vector<Integer> coeffs;
  try {
    for (const auto& t : j.at("terms")) {
      const auto xs = t.at("x").get<std::vector<int>>();
      const auto bs = t.at("b").get<std::vector<int>>();
      const int beta = t.at("beta").get<int>();
      if (xs.size() != static_cast<std::size_t>(ctx.d) ||
          bs.size() != static_cast<std::size_t>(ctx.B)) {
        throw ParseError("term exponent arrays do not match the context");
      }
      Monomial m;
      auto put = [&](std::size_t slot, int e) {
        if (e < 0 || e > static_cast<int>(kMaxExponent)) {
          throw ParseError("exponent out of range");
        }
        m.exps[slot] = static_cast<std::uint8_t>(e);
      };
      for (int k = 1; k <= ctx.d; ++k) {
        put(ctx.x_slot(k), xs[static_cast<std::size_t>(k - 1)]);
      }
      for (int k = 1; k <= ctx.B; ++k) {
        put(ctx.b_slot(k), bs[static_cast<std::size_t>(k - 1)]);
      }
      put(kBetaSlot, beta);
      monos.push_back(m);
      coeffs.push_back(Integer::parse(t.at("coeff").get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad coefficient: ") + e.what());
  }
  return Polynomial::from_terms(ctx, std::move(monos), std::move(coeffs));
}

}  // namespace gpjt
