#pragma once

#include <map>

#include "euler_horizon/poly.hpp"
#include "euler_horizon/rational.hpp"

namespace eh {

// Exponents e(a, b) of the product of (1 - X^a Y^b)^e, keyed by Monomial{a, b}.
using BinomialFactors = std::map<poly::Monomial, poly::Int>;

struct CycloFactorization {
  bool is_cyclotomic = false;
  BinomialFactors factors;
  // What is left of the numerator and denominator after trial division.
  poly::SparsePoly residual_num;
  poly::SparsePoly residual_den;
};

CycloFactorization is_cyclotomic_bivariate(const BivariateRational& w);

// Univariate version; the keys of `factors` are (0, d) for (1 - T^d).
struct UnivariateCyclo {
  bool is_cyclotomic = false;
  BinomialFactors factors;
};
// Requires N(0) = D(0) = 1.
UnivariateCyclo is_cyclotomic_univariate(const poly::UPoly& num, const poly::UPoly& den);

// Phi_d scaled to constant term 1, i.e. 1 - T for d = 1.
poly::UPoly cyclotomic_poly(int d);
int moebius(int n);
int euler_phi(int n);

// Exact product of (1 - X^a Y^b)^e over the positive and negative exponents.
BivariateRational expand_factors(const BinomialFactors& factors);

}  // namespace eh
