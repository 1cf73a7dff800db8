#pragma once

#include <vector>

#include "euler_horizon/poly.hpp"
#include "euler_horizon/rational.hpp"
#include "euler_horizon/series.hpp"
#include "euler_horizon/slope.hpp"

namespace eh {

struct Abscissae {
  Slope alpha;
  Slope beta;
  // Upper bounds from the monomials of P and Q.
  Slope alpha_bound;
  Slope beta_bound;
  // Set when the truncated value falls short of the bound.
  bool cancellation_possible = false;
};

// Throws DegenerateInput or TruncationInsufficient.
Abscissae compute_alpha_beta(const TruncatedSeries& s, const BivariateRational& w);

// Points of the set that are vertices of conv(A) + cone(A), sorted by (m, n).
// The origin must not be included.
std::vector<poly::Monomial> extremal_points(const std::vector<poly::Monomial>& points);

// The generating function u(T) = sum_j a(jk, jl) T^j of the coefficients on
// the ray of slope beta, as N/D with N(0) = D(0).
struct GhostRay {
  int k = 0;
  int l = 1;
  std::vector<poly::Int> terms;
  poly::UPoly num;
  poly::UPoly den;
  // False when no recurrence of order <= terms/2 fits; num is then the
  // polynomial truncation and den = 1.
  bool reconstructed = false;
};

// Throws ReconstructionAmbiguous if fewer than two ray terms are available.
GhostRay ghost(const TruncatedSeries& s, Slope beta);

// Minimal linear recurrence of an exact sequence (Berlekamp-Massey over Q).
// Returns the connection polynomial C with C(0) = 1 and the linear complexity L.
struct Recurrence {
  std::vector<mpq_class> connection;
  int length = 0;
};
Recurrence berlekamp_massey(const std::vector<poly::Int>& seq);

// Number of ray multiples needed by ghost().
inline constexpr int kGhostRayTerms = 8;

}  // namespace eh
