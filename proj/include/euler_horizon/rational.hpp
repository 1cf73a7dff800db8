#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "euler_horizon/poly.hpp"

namespace eh {

// W = P/Q with P, Q coprime in Z[X, Y] and P(X, 0) = Q(X, 0) = 1.
class BivariateRational {
 public:
  BivariateRational() : num_(poly::SparsePoly::constant(1)), den_(poly::SparsePoly::constant(1)) {}

  // Cancels the common factor and fixes signs. Throws DivisionByZeroPoly or
  // NormalizationError.
  static BivariateRational normalize(const poly::SparsePoly& num, const poly::SparsePoly& den);

  const poly::SparsePoly& num() const noexcept { return num_; }
  const poly::SparsePoly& den() const noexcept { return den_; }

  // W = 1: no monomial with positive Y-degree.
  bool is_degenerate() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  int degree_y() const noexcept { return std::max(num_.degree_y(), den_.degree_y()); }

  BivariateRational inverse() const;

  friend bool operator==(const BivariateRational&, const BivariateRational&) = default;

 private:
  BivariateRational(poly::SparsePoly n, poly::SparsePoly d) : num_(std::move(n)), den_(std::move(d)) {}
  poly::SparsePoly num_;
  poly::SparsePoly den_;
};

// Largest exponent accepted after '^'.
inline constexpr unsigned kMaxExponent = 256;

// Grammar:
//   expr   := sign? term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' uint)?
//   base   := 'X' | 'Y' | uint | '(' expr ')'
// Whitespace is ignored; implicit multiplication is rejected.
BivariateRational parse_expression(std::string_view text);

// Canonical text: "P" when Q = 1, otherwise "(P)/(Q)".
std::string to_string(const BivariateRational& w);

}  // namespace eh
