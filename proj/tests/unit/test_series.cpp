#include <doctest.h>

#include "euler_horizon/error.hpp"
#include "euler_horizon/series.hpp"
#include "gen.hpp"

using eh::poly::Int;

TEST_CASE("expansion of 1/(1-2Y) follows powers of two") {
  const auto s = eh::series_expand(eh::parse_expression("1/(1-2*Y)"), 3);
  Int expected = 1;
  for (int m = 0; m <= 3; ++m, expected *= 2) CHECK(s.coeff(0, m) == expected);
  CHECK(s.support().size() == 3);
}

TEST_CASE("polynomial input is read off directly") {
  const auto s = eh::series_expand(eh::parse_expression("1-Y"), 5);
  CHECK(s.coeff(0, 1) == -1);
  CHECK(s.support().size() == 1);
  const auto t = eh::series_expand(eh::parse_expression("(1+Y)*(1+X*Y)"), 2);
  CHECK(t.coeff(0, 1) == 1);
  CHECK(t.coeff(1, 1) == 1);
  CHECK(t.coeff(1, 2) == 1);
  CHECK(t.support().size() == 3);
}

TEST_CASE("degenerate and invalid expansion requests") {
  CHECK_THROWS_AS(eh::series_expand(eh::parse_expression("1"), 4), eh::Error);
  CHECK_THROWS_AS(eh::series_expand(eh::parse_expression("1+Y"), 0), eh::Error);
}

TEST_CASE("series of W times series of 1/W is 1") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto w = gen::rational();
    const int M = gen::uniform(1, 10);
    const auto prod = eh::series_expand(w, M) * eh::series_expand(w.inverse(), M);
    CHECK(prod.is_one());
  }
}

TEST_CASE("binomial power examples") {
  const auto s = eh::TruncatedSeries::from_poly(eh::parse_expression("1+Y").num(), 4);
  const auto r = eh::series_mul_binomial_power(s, 0, 1, -1);
  CHECK(r.coeff(0, 0) == 1);
  for (int m = 1; m <= 4; ++m) CHECK(r.coeff(0, m) == 2);
  CHECK(eh::series_mul_binomial_power(s, 3, 2, 0) == s);
  const auto one = eh::TruncatedSeries(3);
  const auto sq = eh::series_mul_binomial_power(one, 0, 1, 2);
  CHECK(sq.coeff(0, 1) == -2);
  CHECK(sq.coeff(0, 2) == 1);
  CHECK(sq.coeff(0, 3) == 0);
  CHECK_THROWS_AS(eh::series_mul_binomial_power(one, 1, 0, 1), eh::Error);
}

TEST_CASE("binomial power with e then -e is the identity") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto w = gen::rational();
    const int M = gen::uniform(2, 10);
    const auto s = eh::series_expand(w, M);
    const int n = gen::uniform(0, 4);
    const int m = gen::uniform(1, 4);
    const Int e = gen::uniform(-6, 6);
    CHECK(eh::series_mul_binomial_power(eh::series_mul_binomial_power(s, n, m, e), n, m, -e) == s);
  }
}
