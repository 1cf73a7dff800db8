#pragma once

#include <vector>

#include "euler_horizon/poly.hpp"
#include "euler_horizon/rational.hpp"
#include "euler_horizon/slope.hpp"

namespace eh {

// Power series in X, Y known exactly modulo Y^(M+1). Row m holds the
// coefficient of Y^m as a polynomial in X.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  // The series 1 with bound M.
  explicit TruncatedSeries(int ydeg_bound);

  int ydeg_bound() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  const poly::UPoly& row(int m) const { return rows_.at(static_cast<std::size_t>(m)); }
  poly::UPoly& row(int m) { return rows_.at(static_cast<std::size_t>(m)); }
  const std::vector<poly::UPoly>& rows() const noexcept { return rows_; }

  poly::Int coeff(int n, int m) const;
  void set(int n, int m, const poly::Int& c);
  // Nonzero coefficients with m >= 1, ordered by (m, n).
  std::vector<poly::Monomial> support() const;
  bool is_one() const;

  // Reduces the bound to M' <= M.
  TruncatedSeries truncated(int ydeg_bound) const;

  static TruncatedSeries from_poly(const poly::SparsePoly& p, int ydeg_bound);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<poly::UPoly> rows_;
};

// Expansion of W modulo Y^(M+1); 1/Q is formed as the sum of (1-Q)^k.
// Throws DegenerateInput for W = 1 and InvalidArgument for M < 1.
TruncatedSeries series_expand(const BivariateRational& w, int ydeg_bound);

// s * (1 - X^n Y^m)^e at the same bound.
TruncatedSeries series_mul_binomial_power(const TruncatedSeries& s, int n, int m, const poly::Int& e);
void series_mul_binomial_power_inplace(TruncatedSeries& s, int n, int m, const poly::Int& e);

// Largest n/m over monomials with m >= 1 of both parts of w.
Slope slope_max(const BivariateRational& w);

}  // namespace eh
