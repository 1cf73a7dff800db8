#pragma once

#include <string>
#include <vector>

#include "euler_horizon/cyclo.hpp"
#include "euler_horizon/series.hpp"
#include "euler_horizon/slope.hpp"

namespace eh {

// W = prod (1 - X^n Y^m)^c(n, m) modulo Y^(M+1).
struct CycloExpansion {
  BinomialFactors c;
  int ydeg_bound = 0;
};

// Throws BoundOverflow if a residual row outgrows the slope bound.
CycloExpansion peel(const TruncatedSeries& s, Slope slope_bound);

// Keys with beta*m - 1 < n < beta*m, ordered by (m, n).
std::vector<poly::Monomial> strip_pairs(const CycloExpansion& e, Slope beta);

// A line l*n - k*m = delta parallel to the beta-ray.
struct LineReport {
  long delta = 0;
  bool in_strip = false;
  int keys = 0;
  // Lattice points on the line with 1 <= m <= M.
  int slots = 0;
  // Smallest period (in ray steps) with a run of at least three hits ending
  // at the frontier; 0 if none.
  int period = 0;
  int run = 0;
  poly::Monomial run_start;
  bool extrapolated_infinite = false;
  // Keys strictly to the right of this line (larger delta).
  int keys_right = 0;
};

struct ProgressionReport {
  int k = 0;
  int l = 1;
  std::vector<LineReport> lines;
};

// Throws TruncationInsufficient if the strip contains lattice points but no
// strip line has three slots below the bound.
ProgressionReport detect_progressions(const CycloExpansion& e, Slope beta);

enum class StripVerdict { ProvenFinite, ExtrapolatedInfinite, Inconclusive };
std::string to_string(StripVerdict v);

struct StripAssessment {
  StripVerdict verdict = StripVerdict::Inconclusive;
  std::vector<poly::Monomial> pairs;
  ProgressionReport progressions;
  std::string detail;
};

StripAssessment assess_strip(const CycloExpansion& e, Slope beta, bool w_cyclotomic);

// Multiplies the factors back out modulo Y^(M+1).
TruncatedSeries reconstruct(const BinomialFactors& c, int ydeg_bound);

}  // namespace eh
