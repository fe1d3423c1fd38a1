#include <random>

#include "doctest.h"

#include "gpjt/io.hpp"
#include "gpjt/ring.hpp"
#include "oracle_fixtures.hpp"
#include "random_poly.hpp"

using namespace gpjt;

namespace {

Polynomial P(const RingContext& ctx, const char* text)
{
  return parse_text(ctx, text);
}

}  // namespace

TEST_CASE("context validation and variable slots")
{
  CHECK_THROWS(RingContext(0, 0, 0));
  CHECK_THROWS(RingContext(1, -1, 0));
  CHECK_THROWS(RingContext(1, 0, -1));
  CHECK_THROWS(RingContext(20, 12, 0));
  const RingContext ctx(2, 3, 1);
  CHECK(ctx.x_slot(2) == 1);
  CHECK(ctx.b_slot(1) == 2);
  CHECK_THROWS_AS(static_cast<void>(ctx.x_slot(3)), std::out_of_range);
  CHECK_THROWS_AS(static_cast<void>(ctx.b_slot(4)), std::out_of_range);
  CHECK_THROWS_AS(Polynomial::x(ctx, 0), std::out_of_range);
  CHECK_THROWS_AS(Polynomial::b(ctx, 4), std::out_of_range);
}

TEST_CASE("make")
{
  const RingContext ctx(2, 1, 2);
  const Polynomial one = Polynomial::one(ctx);
  REQUIRE(one.size() == 1);
  CHECK(one.monomials()[0].is_one());
  CHECK(one.coefficients()[0] == Integer(1));
  CHECK(to_text(Polynomial::x(ctx, 1)) == "1*x1");
  CHECK(to_text(Polynomial::constant(ctx, Integer(-3))) == "-3");
  CHECK(to_text(Polynomial::zero(ctx)) == "0");
  CHECK(to_text(Polynomial::beta(ctx)) == "1*beta");
  CHECK(Polynomial::beta(RingContext(1, 0, 0)).is_zero());
}

TEST_CASE("add, neg, mul")
{
  const RingContext ctx(2, 1, 2);
  const Polynomial x1 = Polynomial::x(ctx, 1);
  const Polynomial beta = Polynomial::beta(ctx);
  CHECK((x1 + -x1).is_zero());
  CHECK((pow(beta, 2) * x1 * beta).is_zero());
  const Polynomial one = Polynomial::one(ctx);
  CHECK((one + beta * x1) * (one - beta * x1) == P(ctx, "1 + -1*x1^2*beta^2"));
  CHECK(pow(x1 + Polynomial::x(ctx, 2), 2) == P(ctx, "1*x1^2 + 2*x1*x2 + 1*x2^2"));
  CHECK(pow(x1, 0).is_one());
  CHECK_THROWS_AS(x1 + Polynomial::x(RingContext(2, 1, 3), 1), ContextMismatch);
  CHECK_THROWS_AS(x1 * Polynomial::x(RingContext(2, 0, 2), 1), ContextMismatch);
}

TEST_CASE("canonical order of the text form")
{
  const RingContext ctx(2, 1, 3);
  const Polynomial p = P(ctx, "1*beta + 1*b1 + 1*x2 + 1*x1 + 7 + 1*x1*b1*beta + 1*x2^2");
  CHECK(to_text(p) == "7 + 1*x1 + 1*x2 + 1*b1 + 1*beta + 1*x2^2 + 1*x1*b1*beta");
  CHECK(to_text(P(ctx, "1*x1 + 2*x1 + -3*x1")) == "0");
  CHECK(to_text(P(ctx, "1*x1*x1 + 1*x1^2")) == "2*x1^2");
  CHECK(to_text(P(ctx, "1*beta^4 + 1*x1")) == "1*x1");
}

TEST_CASE("text parse errors")
{
  const RingContext ctx(2, 1, 3);
  CHECK_THROWS_AS(P(ctx, ""), ParseError);
  CHECK_THROWS_AS(P(ctx, "x1"), ParseError);
  CHECK_THROWS_AS(P(ctx, "1*x3"), ParseError);
  CHECK_THROWS_AS(P(ctx, "1*b2"), ParseError);
  CHECK_THROWS_AS(P(ctx, "1*y1"), ParseError);
  CHECK_THROWS_AS(P(ctx, "1*x1 + "), ParseError);
  CHECK_THROWS_AS(P(ctx, "1*"), ParseError);
  CHECK_THROWS_AS(P(ctx, "1*x1^-1"), ParseError);
  CHECK_THROWS_AS(P(ctx, "1*x1^999"), ParseError);
}

TEST_CASE("unit_inverse")
{
  const RingContext ctx(1, 1, 2);
  const Polynomial one = Polynomial::one(ctx);
  const Polynomial bx = Polynomial::beta(ctx) * Polynomial::x(ctx, 1);
  CHECK(unit_inverse(one + bx) == P(ctx, "1 + -1*x1*beta + 1*x1^2*beta^2"));
  CHECK(unit_inverse(one).is_one());
  const Polynomial u = one + Polynomial::beta(ctx) * Polynomial::b(ctx, 1);
  CHECK((unit_inverse(u) * u).is_one());
  CHECK_THROWS_AS(unit_inverse(Polynomial::constant(ctx, Integer(2))), NotAUnit);
  CHECK_THROWS_AS(unit_inverse(one + Polynomial::x(ctx, 1)), NotAUnit);
  CHECK_THROWS_AS(unit_inverse(Polynomial::zero(ctx)), NotAUnit);
  CHECK_THROWS_AS(unit_inverse(-one), NotAUnit);
}

TEST_CASE("exact_div examples")
{
  const RingContext ctx(2, 0, 0);
  const Polynomial x1 = Polynomial::x(ctx, 1);
  const Polynomial x2 = Polynomial::x(ctx, 2);
  CHECK(exact_div(x1 * x1 - x2 * x2, x1 - x2) == x1 + x2);
  CHECK(exact_div(Polynomial::zero(ctx), x1 - x2).is_zero());
  CHECK(exact_div(Polynomial::constant(ctx, Integer(6)) * x1, Polynomial::constant(ctx, Integer(3))) ==
        Polynomial::constant(ctx, Integer(2)) * x1);
  CHECK_THROWS_AS(exact_div(x1, Polynomial::zero(ctx)), std::invalid_argument);

  try {
    static_cast<void>(exact_div(x1, x2));
    FAIL("expected NotDivisible");
  } catch (const NotDivisible& e) {
    CHECK(monomial_text(ctx, e.witness()) == "x1");
    CHECK(e.coefficient() == Integer(1));
  }
  CHECK_THROWS_AS(exact_div(x1 * x1 + x2, x1 - x2), NotDivisible);
  CHECK_THROWS_AS(exact_div(x1, Polynomial::constant(ctx, Integer(2))), NotDivisible);
}

TEST_CASE("exact_div with beta in the divisor")
{
  const RingContext ctx(2, 1, 4);
  std::mt19937_64 rng(7);
  const Polynomial q = P(ctx, "1*x1 + -1*x2 + 1*x1*b1*beta + 2*x2^2*beta^2");
  for (int t = 0; t < 30; ++t) {
    const Polynomial r = testing_support::random_polynomial(rng, ctx);
    const Polynomial p = r * q;
    CHECK(exact_div(p, q) * q == p);
  }
  // Divisor with beta-valuation 1: the quotient is only fixed modulo beta^N.
  const Polynomial bq = Polynomial::beta(ctx) * (Polynomial::x(ctx, 1) - Polynomial::x(ctx, 2));
  const Polynomial p = P(ctx, "1*x1*beta + -1*x2*beta + 1*x1^2*beta^2 + -1*x1*x2*beta^2");
  const Polynomial r = exact_div(p, bq);
  CHECK(r * bq == p);
  CHECK(r.beta_degree() < 4);
  CHECK_THROWS_AS(exact_div(Polynomial::x(ctx, 1), bq), NotDivisible);
}

TEST_CASE("exact_div of the 2x2 alternant by x1 - x2")
{
  const RingContext ctx(2, 2, 4);
  const Polynomial x1 = Polynomial::x(ctx, 1);
  const Polynomial x2 = Polynomial::x(ctx, 2);
  const Polynomial beta = Polynomial::beta(ctx);
  const Polynomial one = Polynomial::one(ctx);
  auto op = [&](const Polynomial& y, const Polynomial& b) { return y + b + beta * y * b; };
  auto fp2 = [&](const Polynomial& y) { return op(y, Polynomial::b(ctx, 1)) * op(y, Polynomial::b(ctx, 2)); };
  const Polynomial numerator = fp2(x1) * (one + beta * x2) - fp2(x2) * (one + beta * x1);
  const Polynomial expected = P(ctx, fixtures::kBialternant.front().text);
  REQUIRE(fixtures::kBialternant.front().lambda == std::vector<int>{1, 0});
  CHECK(exact_div(numerator, x1 - x2) == expected);
}

TEST_CASE("determinant examples")
{
  const RingContext ctx(2, 0, 1);
  PolyMatrix id(ctx, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    id.at(i, i) = Polynomial::one(ctx);
  }
  CHECK(determinant(id).is_one());

  PolyMatrix m(ctx, 2, 2);
  m.at(0, 0) = Polynomial::x(ctx, 1);
  m.at(0, 1) = Polynomial::one(ctx);
  m.at(1, 0) = Polynomial::x(ctx, 2);
  m.at(1, 1) = Polynomial::one(ctx);
  CHECK(determinant(m) == Polynomial::x(ctx, 1) - Polynomial::x(ctx, 2));

  PolyMatrix big_m(ctx, 2, 2);
  big_m.at(0, 0) = -Polynomial::x(ctx, 2);
  big_m.at(0, 1) = -Polynomial::x(ctx, 1);
  big_m.at(1, 0) = Polynomial::one(ctx);
  big_m.at(1, 1) = Polynomial::one(ctx);
  CHECK(determinant(big_m) == Polynomial::x(ctx, 1) - Polynomial::x(ctx, 2));

  CHECK(determinant(PolyMatrix(ctx, 0, 0)).is_one());
  CHECK_THROWS_AS(determinant(PolyMatrix(ctx, 2, 3)), std::invalid_argument);
}

TEST_CASE("determinant equals the Leibniz expansion; row swaps negate")
{
  const RingContext ctx(2, 1, 2);
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int t = 0; t < 4; ++t) {
      PolyMatrix m = testing_support::random_matrix(rng, ctx, n);
      const Polynomial det = determinant(m);
      CHECK(det == testing_support::leibniz_determinant(m));
      if (n >= 2) {
        m.swap_rows(0, n - 1);
        CHECK(determinant(m) == -det);
        for (std::size_t c = 0; c < n; ++c) {
          m.at(1, c) = m.at(0, c);
        }
        CHECK(determinant(m).is_zero());
      }
    }
  }
}

TEST_CASE("substitute")
{
  const RingContext ctx(2, 1, 2);
  const Polynomial x1 = Polynomial::x(ctx, 1);
  const Polynomial x2 = Polynomial::x(ctx, 2);
  const Polynomial b1 = Polynomial::b(ctx, 1);
  const Polynomial beta = Polynomial::beta(ctx);

  Substitution kill_b(ctx);
  kill_b.assign(Variable::b(1), Integer(0));
  CHECK(substitute(x1 + b1 + beta * x1 * b1, kill_b) == x1);

  CHECK(substitute(x1 + x2, Substitution::swap_x(ctx, 1, 2)) == x1 + x2);
  CHECK(substitute(x1 * x1 * x2, Substitution::swap_x(ctx, 1, 2)) == x2 * x2 * x1);

  Substitution flip(ctx);
  flip.assign(Variable::beta(), Integer(-1));
  CHECK(substitute(x1 + x2 - beta * x1 * x2, flip) == x1 + x2 + x1 * x2);

  Substitution rename(ctx);
  rename.rename(Variable::x(2), Variable::x(1));
  CHECK(substitute(x1 * x2, rename) == x1 * x1);
  CHECK_THROWS_AS(rename.rename(Variable::x(1), Variable::b(1)), std::invalid_argument);
  CHECK_THROWS_AS(substitute(x1, Substitution(RingContext(2, 1, 3))), ContextMismatch);
}

TEST_CASE("layers, truncation and context changes")
{
  const RingContext ctx(2, 1, 3);
  const Polynomial p = P(ctx, "1*x1 + 2*x1*beta + 3*x2*b1*beta^3 + 4*beta^2");
  CHECK(p.beta_degree() == 3);
  CHECK(p.beta_layer(1) == P(ctx, "2*x1"));
  CHECK(p.beta_layer(3) == P(ctx, "3*x2*b1"));
  CHECK(p.truncated(1) == P(ctx, "1*x1 + 2*x1*beta"));
  CHECK(p.degree_in(Variable::x(1)) == 1);
  CHECK(p.coefficient_of(Variable::b(1), 1) == P(ctx, "3*x2*beta^3"));
  CHECK(p.constant_term() == Integer(0));

  const RingContext wider(2, 2, 4);
  const Polynomial q = p.in_context(wider);
  CHECK(q.context() == wider);
  CHECK(q.in_context(RingContext(2, 2, 3)) == p.in_context(RingContext(2, 2, 3)));
  CHECK_THROWS(q.in_context(ctx));
  CHECK(p.in_context(RingContext(2, 1, 1)) == P(RingContext(2, 1, 1), "1*x1 + 2*x1*beta"));
}

TEST_CASE("text and JSON round-trips are byte-identical")
{
  std::mt19937_64 rng(3);
  for (const RingContext& ctx : {RingContext(1, 0, 0), RingContext(2, 2, 3), RingContext(3, 4, 6)}) {
    for (int t = 0; t < 40; ++t) {
      const Polynomial p = testing_support::random_polynomial(rng, ctx, 6, 3);
      const std::string text = to_text(p);
      CHECK(to_text(parse_text(ctx, text)) == text);
      const std::string json = to_json(p).dump();
      const Polynomial back = polynomial_from_json(nlohmann::json::parse(json));
      CHECK(back == p);
      CHECK(to_json(back).dump() == json);
    }
  }
}

TEST_CASE("JSON schema")
{
  const RingContext ctx(2, 1, 2);
  const nlohmann::json j = to_json(P(ctx, "-3*x1^2*b1*beta + 5"));
  CHECK(j["context"] == nlohmann::json{{"d", 2}, {"B", 1}, {"N", 2}});
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0] == nlohmann::json{{"coeff", "5"}, {"x", {0, 0}}, {"b", {0}}, {"beta", 0}});
  CHECK(j["terms"][1] == nlohmann::json{{"coeff", "-3"}, {"x", {2, 0}}, {"b", {1}}, {"beta", 1}});

  nlohmann::json bad = j;
  bad["terms"][0]["x"] = {0};
  CHECK_THROWS_AS(polynomial_from_json(bad), ParseError);
  bad = j;
  bad["terms"][0]["coeff"] = "five";
  CHECK_THROWS_AS(polynomial_from_json(bad), ParseError);
  bad = j;
  bad["context"]["d"] = 0;
  CHECK_THROWS_AS(polynomial_from_json(bad), ParseError);
  bad = j;
  bad.erase("context");
  CHECK_THROWS_AS(polynomial_from_json(bad), ParseError);
  // Terms past beta^N are the zero element of R.
  bad = j;
  bad["terms"][1]["beta"] = 3;
  CHECK(to_text(polynomial_from_json(bad)) == "5");
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::array()), ParseError);
}

TEST_CASE("large coefficients survive arithmetic and serialization")
{
  const RingContext ctx(1, 0, 0);
  const Polynomial c = Polynomial::constant(ctx, Integer::parse("1000000000000000000000"));
  const Polynomial x = Polynomial::x(ctx, 1);
  const Polynomial p = pow(c * x + Polynomial::one(ctx), 3);
  CHECK(to_text(p) == "1 + 3000000000000000000000*x1 + 3000000000000000000000000000000000000000000*x1^2 + "
                      "1000000000000000000000000000000000000000000000000000000000000000*x1^3");
  CHECK(exact_div(p, c * x + Polynomial::one(ctx)) == pow(c * x + Polynomial::one(ctx), 2));
  CHECK(parse_text(ctx, to_text(p)) == p);
}

TEST_CASE("small randomized ring axioms")
{
  const RingContext ctx(2, 2, 3);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Polynomial a = testing_support::random_polynomial(rng, ctx);
    const Polynomial b = testing_support::random_polynomial(rng, ctx);
    const Polynomial c = testing_support::random_polynomial(rng, ctx);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    const Polynomial u = testing_support::random_unit(rng, ctx);
    CHECK((unit_inverse(u) * u).is_one());
    if (!b.is_zero()) {
      CHECK(exact_div(a * b, b) * b == a * b);
    }
  }
}
