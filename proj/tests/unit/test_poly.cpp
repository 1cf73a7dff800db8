#include <doctest.h>

#include "euler_horizon/error.hpp"
#include "euler_horizon/poly.hpp"
#include "euler_horizon/rational.hpp"
#include "gen.hpp"

using eh::ErrorCode;
using eh::poly::Int;
using eh::poly::SparsePoly;
using eh::poly::UPoly;

namespace {

SparsePoly P(const char* text) { return eh::parse_expression(text).num(); }

// Determinant by cofactor expansion; independent of the Bareiss code path.
Int det(std::vector<std::vector<Int>> a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Int total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (a[0][col] == 0) continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(a[r][c]);
      minor.push_back(row);
    }
    const Int term = a[0][col] * det(minor);
    total += (col % 2 == 0) ? term : Int(-term);
  }
  return total;
}

Int sylvester_det(const UPoly& p, const UPoly& q) {
  const int dp = p.degree();
  const int dq = q.degree();
  const int n = dp + dq;
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < dq; ++i)
    for (int t = 0; t <= dp; ++t) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + t)] = p.coeff(dp - t);
  for (int i = 0; i < dp; ++i)
    for (int t = 0; t <= dq; ++t) m[static_cast<std::size_t>(dq + i)][static_cast<std::size_t>(i + t)] = q.coeff(dq - t);
  return det(m);
}

ErrorCode code_of(const char* text) {
  try {
    eh::parse_expression(text);
  } catch (const eh::Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("univariate arithmetic and exact division") {
  const UPoly a{1, 2, 1};  // (1+T)^2
  const UPoly b{1, 1};
  CHECK(a == b * b);
  CHECK(*eh::poly::divide_exact(a, b) == b);
  CHECK_FALSE(eh::poly::divide_exact(UPoly{1, 0, 1}, b).has_value());
  CHECK(a.derivative() == UPoly{2, 2});
  CHECK(a.eval(3) == 16);
  CHECK(eh::poly::to_string(UPoly{1, -2, 0, 3}) == "1 - 2*T + 3*T^3");
}

TEST_CASE("univariate gcd") {
  const UPoly f = UPoly{1, 1} * UPoly{2, -3, 1};
  const UPoly g = UPoly{1, 1} * UPoly{5, 0, 7};
  CHECK(eh::poly::gcd(f, g) == UPoly{1, 1});
  CHECK(eh::poly::gcd(UPoly{6, 12}, UPoly{4, 8}) == UPoly{2, 4});
  CHECK(eh::poly::gcd(UPoly{}, UPoly{-3, -6}) == UPoly{3, 6});
  for (int trial = 0; trial < 30; ++trial) {
    const UPoly c = gen::upoly(gen::uniform(0, 2), 4);
    const UPoly x = gen::upoly(gen::uniform(0, 3), 4) * c;
    const UPoly y = gen::upoly(gen::uniform(0, 3), 4) * c;
    const UPoly g = eh::poly::gcd(x, y);
    REQUIRE(eh::poly::divide_exact(x, g).has_value());
    REQUIRE(eh::poly::divide_exact(y, g).has_value());
    CHECK(eh::poly::divide_exact(g, c.primitive()).has_value());
  }
}

TEST_CASE("bivariate product and gcd") {
  const SparsePoly a = P("(1+Y)*(1+X*Y)");
  CHECK(eh::poly::to_string(a) == "1 + Y + X*Y + X*Y^2");
  const SparsePoly f = P("1-X*Y^2");
  const SparsePoly extra = SparsePoly::constant(1) + SparsePoly::term(1, 2, 0);  // 1 + X^2
  const SparsePoly g = eh::poly::gcd(a * f, P("(1+X*Y)*(1-X*Y^2)") * extra);
  // Leading term -X^2*Y^3 is flipped to a positive coefficient.
  CHECK(g == -P("(1+X*Y)*(1-X*Y^2)"));
  CHECK(*eh::poly::divide_exact(a * f, f) == a);
  CHECK_FALSE(eh::poly::divide_exact(a, f).has_value());
}

TEST_CASE("resultant examples") {
  CHECK(eh::poly::resultant_in_y(P("1+Y"), P("1-Y")) == UPoly{2});
  CHECK(eh::poly::resultant_in_y(P("1+Y"), P("1+Y^2")) == UPoly{2});
  const UPoly r = eh::poly::resultant_in_y(P("1-X*Y"), P("1-X*Y^2"));
  // Shared root y = 1 at x = 1: both vanish there.
  CHECK(r.eval(1) == 0);
  CHECK(r.eval(0) == 0);
  CHECK(r.degree() == 2);
  CHECK(r == UPoly{0, -1, 1});
  CHECK_THROWS_AS(eh::poly::resultant_in_y(P("1+Y"), P("1+X")), eh::Error);
  try {
    eh::poly::resultant_in_y(P("(1+Y)*(1+X*Y)"), P("(1+Y)*(1-X*Y)"));
    FAIL("expected ZeroResultant");
  } catch (const eh::Error& e) {
    CHECK(e.code() == ErrorCode::ZeroResultant);
  }
}

TEST_CASE("resultant agrees with the numeric Sylvester determinant") {
  for (int trial = 0; trial < 20; ++trial) {
    SparsePoly p = gen::one_plus(4, 3, 3, 3);
    SparsePoly q = gen::one_plus(4, 3, 3, 3);
    UPoly r;
    try {
      r = eh::poly::resultant_in_y(p, q);
    } catch (const eh::Error& e) {
      CHECK(e.code() == ErrorCode::ZeroResultant);
      continue;
    }
    const Int x0 = gen::uniform(-5, 5);
    const UPoly ps = p.specialize_x(x0);
    const UPoly qs = q.specialize_x(x0);
    // The determinant formula needs the generic degrees; skip degenerate specializations.
    if (ps.degree() != p.degree_y() || qs.degree() != q.degree_y()) continue;
    CHECK(r.eval(x0) == sylvester_det(ps, qs));
  }
}

TEST_CASE("parser examples") {
  const auto w = eh::parse_expression("(1+Y)*(1+X*Y)");
  CHECK(w.num() == P("1+Y+X*Y+X*Y^2"));
  CHECK(w.den().is_one());
  CHECK(eh::parse_expression("1").is_degenerate());
  const auto g = eh::parse_expression("1 + 2*Y/(1-2*Y)");
  CHECK(g.num().is_one());
  CHECK(g.den() == SparsePoly::constant(1) - SparsePoly::term(2, 0, 1));
  CHECK(eh::parse_expression("(1-Y^2)/(1-Y)").num() == P("1+Y"));
  CHECK(eh::parse_expression("-(-1-Y)").num() == P("1+Y"));
  CHECK(eh::parse_expression(" ( 1 + X * Y ) ^ 2 ").num() == P("1+2*X*Y+X^2*Y^2"));
}

TEST_CASE("parser errors") {
  CHECK(code_of("1+") == ErrorCode::SyntaxError);
  CHECK(code_of("2X") == ErrorCode::SyntaxError);
  CHECK(code_of("1+Z") == ErrorCode::SyntaxError);
  CHECK(code_of("(1+Y") == ErrorCode::SyntaxError);
  CHECK(code_of("Y^999") == ErrorCode::SyntaxError);
  CHECK(code_of("1/(X-X)") == ErrorCode::DivisionByZeroPoly);
  CHECK(code_of("Y") == ErrorCode::NormalizationError);
  CHECK(code_of("1+X") == ErrorCode::NormalizationError);
  CHECK(code_of("2+Y") == ErrorCode::NormalizationError);
  CHECK(code_of("(2+Y)/(2+3*Y)") == ErrorCode::NormalizationError);
  CHECK(code_of("Y-Y") == ErrorCode::NormalizationError);
}

TEST_CASE("serialize-parse-serialize is the identity on canonical text") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = gen::rational();
    const std::string text = eh::to_string(w);
    const auto back = eh::parse_expression(text);
    CHECK(back == w);
    CHECK(eh::to_string(back) == text);
  }
}
