#include <limits>

#include "doctest.h"

#include "gpjt/binomial.hpp"
#include "gpjt/integer.hpp"

using gpjt::Integer;

TEST_CASE("integer parse and print")
{
  CHECK(Integer::parse("0").str() == "0");
  CHECK(Integer::parse("-17").str() == "-17");
  CHECK(Integer::parse("+5").str() == "5");
  const std::string huge = "123456789012345678901234567890";
  CHECK(Integer::parse(huge).str() == huge);
  CHECK(Integer::parse("-" + huge).str() == "-" + huge);
  CHECK_THROWS_AS(Integer::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Integer::parse("12a"), std::invalid_argument);
  CHECK_THROWS_AS(Integer::parse("-"), std::invalid_argument);
}

TEST_CASE("integer promotes past 64 bits and demotes back")
{
  const Integer max(std::numeric_limits<long long>::max());
  Integer sum = max + Integer(1);
  CHECK_FALSE(sum.is_small());
  CHECK(sum.str() == "9223372036854775808");
  sum -= Integer(1);
  CHECK(sum.is_small());
  CHECK(sum == max);

  const Integer min(std::numeric_limits<long long>::min());
  CHECK((-min).str() == "9223372036854775808");
  CHECK((min * Integer(-1)).str() == "9223372036854775808");

  Integer sq = max * max;
  CHECK(sq.str() == "85070591730234615847396907784232501249");
  CHECK(sq.divisible_by(max));
  CHECK(sq.divexact(max) == max);
}

TEST_CASE("integer add_mul matches separate operations")
{
  const Integer big = Integer::parse("98765432109876543210");
  for (long long a : {-3LL, 0LL, 7LL, std::numeric_limits<long long>::max()}) {
    for (long long b : {-5LL, 2LL, std::numeric_limits<long long>::min()}) {
      for (const Integer& base : {Integer(11), big, -big}) {
        Integer acc = base;
        acc.add_mul(Integer(a), Integer(b));
        CHECK(acc == base + Integer(a) * Integer(b));
        Integer acc2 = base;
        acc2.add_mul(big, Integer(b));
        CHECK(acc2 == base + big * Integer(b));
      }
    }
  }
}

TEST_CASE("integer ordering, sign and pow")
{
  CHECK(Integer(-2) < Integer(3));
  CHECK(Integer::parse("-99999999999999999999") < Integer(-5));
  CHECK(Integer::parse("99999999999999999999") > Integer(5));
  CHECK(Integer(0).sign() == 0);
  CHECK(Integer(-4).sign() == -1);
  CHECK(Integer(2).pow(70).str() == "1180591620717411303424");
  CHECK(Integer(-3).pow(3) == Integer(-27));
  CHECK(Integer(5).pow(0).is_one());
  CHECK_FALSE(Integer(7).divisible_by(Integer(2)));
  CHECK(Integer(-12).divexact(Integer(4)) == Integer(-3));
}

TEST_CASE("gen_binomial examples")
{
  CHECK(gpjt::gen_binomial(3, 2) == Integer(3));
  CHECK(gpjt::gen_binomial(-1, 2) == Integer(1));
  CHECK(gpjt::gen_binomial(-2, 3) == Integer(-4));
  CHECK(gpjt::gen_binomial(5, -1) == Integer(0));
  CHECK(gpjt::gen_binomial(2, 3) == Integer(0));
  CHECK(gpjt::gen_binomial(0, 0) == Integer(1));
  CHECK(gpjt::gen_binomial(100, 50).str() == "100891344545564193334812497256");
}

TEST_CASE("gen_binomial satisfies Pascal for every integer upper argument")
{
  for (long n = -12; n <= 12; ++n) {
    for (long s = -2; s <= 12; ++s) {
      CAPTURE(n);
      CAPTURE(s);
      CHECK(gpjt::gen_binomial(n, s) == gpjt::gen_binomial(n - 1, s - 1) + gpjt::gen_binomial(n - 1, s));
    }
  }
}

TEST_CASE("gen_binomial is the power series coefficient of (1+t)^n")
{
  // (1+t)^n (1+t)^-n = 1
  for (long n = 0; n <= 8; ++n) {
    for (long s = 0; s <= 10; ++s) {
      Integer conv;
      for (long l = 0; l <= s; ++l) {
        conv += gpjt::gen_binomial(n, l) * gpjt::gen_binomial(-n, s - l);
      }
      CHECK(conv == Integer(s == 0 ? 1 : 0));
    }
  }
}
