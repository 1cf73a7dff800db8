#include <doctest.h>

#include <numeric>

#include "euler_horizon/error.hpp"
#include "euler_horizon/expansion.hpp"
#include "euler_horizon/newton.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using eh::BinomialFactors;
using eh::Slope;
using eh::poly::Int;
using eh::poly::Monomial;

namespace {

eh::CycloExpansion peel_of(const eh::BivariateRational& w, int M) {
  return eh::peel(eh::series_expand(w, M), eh::slope_max(w));
}

BinomialFactors log_oracle(const eh::BivariateRational& w, int M) {
  const Slope slope = eh::slope_max(w);
  return oracle::log_factors(eh::series_expand(w, M), static_cast<int>(slope.num() * M / slope.den()));
}

// Peels in lexicographic order on (n, m) instead of row by row.
BinomialFactors peel_lex(const eh::BivariateRational& w, int M) {
  auto s = eh::series_expand(w, M);
  const Slope slope = eh::slope_max(w);
  const int N = static_cast<int>(slope.num() * M / slope.den());
  BinomialFactors out;
  for (int n = 0; n <= N; ++n)
    for (int m = 1; m <= M; ++m) {
      const Int a = s.coeff(n, m);
      if (a == 0) continue;
      out[{n, m}] = -a;
      s = eh::series_mul_binomial_power(s, n, m, a);
    }
  CHECK(s.is_one());
  return out;
}

}  // namespace

TEST_CASE("peel examples") {
  CHECK(peel_of(eh::parse_expression("(1+Y)*(1+X*Y)"), 12).c ==
        BinomialFactors{{{0, 1}, -1}, {{1, 1}, -1}, {{0, 2}, 1}, {{2, 2}, 1}});
  const auto e = peel_of(eh::parse_expression("1+Y-X^2*Y"), 12).c;
  CHECK(e.at({0, 1}) == -1);
  CHECK(e.at({2, 1}) == 1);
  CHECK(e.at({0, 2}) == 1);
  CHECK(e.at({2, 2}) == -1);
  const auto g = peel_of(eh::parse_expression("1/(1-2*Y)"), 6).c;
  CHECK(g.at({0, 1}) == -2);
  CHECK(g.at({0, 2}) == -1);
  CHECK(g.at({0, 3}) == -2);
  CHECK(g.at({0, 4}) == -3);
  const auto b = peel_of(eh::parse_expression("1+Y+X*Y^2"), 8).c;
  CHECK(b.at({0, 1}) == -1);
  CHECK(b.at({0, 2}) == 1);
  CHECK(b.at({1, 2}) == -1);
  CHECK(b.at({1, 3}) == 1);
  CHECK(b.at({2, 5}) == -1);
  CHECK(b.at({3, 7}) == 1);
}

TEST_CASE("peel matches the logarithm oracle") {
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = gen::rational(3, 2, 2);
    const int M = gen::uniform(2, 7);
    CHECK(peel_of(w, M).c == log_oracle(w, M));
  }
}

TEST_CASE("peel is independent of the processing order") {
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = gen::rational(3, 3, 3);
    const int M = gen::uniform(2, 9);
    CHECK(peel_of(w, M).c == peel_lex(w, M));
  }
}

TEST_CASE("factors are stable when the truncation doubles") {
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = gen::rational(3, 3, 3);
    const int M = gen::uniform(2, 8);
    const auto small = peel_of(w, M).c;
    BinomialFactors big = peel_of(w, 2 * M).c;
    std::erase_if(big, [&](const auto& kv) { return kv.first.m > M; });
    CHECK(small == big);
  }
}

TEST_CASE("naive binomial product agrees with reconstruction") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto w = gen::rational(3, 2, 2);
    const int M = gen::uniform(2, 8);
    const auto s = eh::series_expand(w, M);
    const Slope slope = eh::slope_max(w);
    const int N = static_cast<int>(slope.num() * M / slope.den());
    const auto prod = oracle::naive_product(eh::peel(s, slope).c, M, N);
    for (int m = 0; m <= M; ++m)
      for (int n = 0; n <= N; ++n) CHECK(prod[m][n] == mpq_class(s.coeff(n, m)));
  }
}

TEST_CASE("reconstruction returns the series") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto w = gen::rational();
    const int M = gen::uniform(1, 10);
    const auto s = eh::series_expand(w, M);
    const auto e = eh::peel(s, eh::slope_max(w));
    CHECK(e.ydeg_bound == M);
    CHECK(eh::reconstruct(e.c, M) == s);
  }
}

TEST_CASE("peel rejects a slope bound that is too small") {
  const auto s = eh::series_expand(eh::parse_expression("1+Y-X^2*Y"), 4);
  try {
    eh::peel(s, Slope(1, 1));
    FAIL("expected BoundOverflow");
  } catch (const eh::Error& e) {
    CHECK(e.code() == eh::ErrorCode::BoundOverflow);
  }
}

TEST_CASE("strip pairs") {
  const auto e = peel_of(eh::parse_expression("1+Y+X*Y^2"), 15);
  const auto pairs = eh::strip_pairs(e, Slope(1, 2));
  REQUIRE_FALSE(pairs.empty());
  for (const auto& p : pairs) CHECK(p.m == 2 * p.n + 1);
  CHECK(pairs.front() == Monomial{0, 1});
  // Integer slope: the strip has no lattice points.
  CHECK(eh::strip_pairs(peel_of(eh::parse_expression("1+Y-X^2*Y"), 10), Slope(2, 1)).empty());
}

TEST_CASE("strip pairs satisfy the defining inequality") {
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = gen::rational(3, 3, 3);
    const auto s = eh::series_expand(w, 12);
    eh::Abscissae ab;
    try {
      ab = eh::compute_alpha_beta(s, w);
    } catch (const eh::Error&) {
      continue;
    }
    const auto e = eh::peel(s, eh::slope_max(w));
    const long k = ab.beta.num();
    const long l = ab.beta.den();
    std::size_t expected = 0;
    for (const auto& [mono, c] : e.c)
      if (mono.n * l < k * mono.m && k * mono.m < (mono.n + 1) * l) ++expected;
    const auto pairs = eh::strip_pairs(e, ab.beta);
    CHECK(pairs.size() == expected);
    for (const auto& p : pairs) CHECK(e.c.count(p) == 1);
  }
}

TEST_CASE("progression detection and strip verdicts") {
  const auto b = peel_of(eh::parse_expression("1+Y+X*Y^2"), 21);
  const auto rep = eh::detect_progressions(b, Slope(1, 2));
  bool found = false;
  for (const auto& line : rep.lines)
    if (line.in_strip && line.extrapolated_infinite) {
      found = true;
      CHECK(line.period >= 1);
      CHECK(line.run >= 3);
    }
  CHECK(found);
  CHECK(eh::assess_strip(b, Slope(1, 2), false).verdict == eh::StripVerdict::ExtrapolatedInfinite);

  const auto a = peel_of(eh::parse_expression("1+X^3*Y^3+X^4*Y^3+X^6*Y^5+X^7*Y^5+X^10*Y^8"), 24);
  CHECK(eh::assess_strip(a, Slope(7, 5), false).verdict == eh::StripVerdict::ExtrapolatedInfinite);

  const auto f = peel_of(eh::parse_expression("1+Y-X^2*Y"), 12);
  CHECK(eh::assess_strip(f, Slope(2, 1), false).verdict == eh::StripVerdict::ProvenFinite);
  const auto c = peel_of(eh::parse_expression("(1+Y)*(1+X*Y)"), 12);
  CHECK(eh::assess_strip(c, Slope(1, 1), true).verdict == eh::StripVerdict::ProvenFinite);
  CHECK(eh::to_string(eh::StripVerdict::Inconclusive) == "inconclusive");
}

TEST_CASE("too short a truncation for a fractional slope") {
  const auto a = peel_of(eh::parse_expression("1+X^3*Y^3+X^4*Y^3+X^6*Y^5+X^7*Y^5+X^10*Y^8"), 6);
  try {
    eh::detect_progressions(a, Slope(7, 5));
    FAIL("expected TruncationInsufficient");
  } catch (const eh::Error& e) {
    CHECK(e.code() == eh::ErrorCode::TruncationInsufficient);
  }
}
