#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "euler_horizon/poly.hpp"
#include "euler_horizon/rational.hpp"
#include "euler_horizon/slope.hpp"

namespace eh {

struct LocalRoot {
  std::complex<double> y;
  int multiplicity = 1;
  // -ln|y| / ln p
  double re_s = 0;
};

struct LocalZeroRecord {
  std::int64_t p = 0;
  std::vector<LocalRoot> roots;  // sorted by (|y|, arg y)
  double max_re_s = -std::numeric_limits<double>::infinity();
  double margin = -std::numeric_limits<double>::infinity();
  // Y-degree of gcd(P(p,.), Q(p,.)) divided out before root finding.
  int shared_degree = 0;
};

// Precomputed data reused across primes.
class LocalZeroContext {
 public:
  LocalZeroContext(const BivariateRational& w, Slope beta);
  const BivariateRational& w() const noexcept { return w_; }
  Slope beta() const noexcept { return beta_; }
  // Res_Y(P, Q), absent when either part is free of Y.
  const std::optional<poly::UPoly>& resultant() const noexcept { return resultant_; }

 private:
  BivariateRational w_;
  Slope beta_;
  std::optional<poly::UPoly> resultant_;
};

// Roots of W(p, y) = 0 in y. Throws InvalidArgument if P(p, .) is constant,
// AllRootsCancelled or RootFindingDiverged.
LocalZeroRecord local_roots(const LocalZeroContext& ctx, std::int64_t p);
LocalZeroRecord local_roots(const BivariateRational& w, std::int64_t p, Slope beta);

// Exact squarefree decomposition: pairs (factor, multiplicity).
std::vector<std::pair<poly::UPoly, int>> squarefree_decomposition(const poly::UPoly& f);

struct BlockTrend {
  std::int64_t lo = 0;  // block [lo, 2*lo)
  int count = 0;
  int positive = 0;
  double max_margin = -std::numeric_limits<double>::infinity();
};

struct ScanSummary {
  std::int64_t prime_bound = 0;
  double margin_tol = 1e-6;
  int count_scanned = 0;
  int count_with_zero_right_of_beta = 0;
  double density = 0;
  std::vector<BlockTrend> trend;
  std::vector<std::int64_t> skipped;
  // Primes with margin above the tolerance, in increasing order.
  std::vector<std::int64_t> positive_primes;

  int top_block_positive() const { return trend.empty() ? 0 : trend.back().positive; }
};

// Scans all primes up to bound. If records is non-null it receives one record
// per scanned prime, in increasing order of p. Throws RootFindingDiverged if
// 1% or more of the primes had to be skipped.
ScanSummary scan_primes(const BivariateRational& w, Slope beta, std::int64_t bound, double margin_tol = 1e-6,
                        std::vector<LocalZeroRecord>* records = nullptr);

struct CommonZeroPrimes {
  std::vector<poly::Int> primes;
  // Candidates that failed verification.
  std::vector<poly::Int> rejected;
  // False if a cofactor of the trailing resultant coefficient could not be
  // factored.
  bool complete = true;
};

// Primes p at which P(p, .) and Q(p, .) share a complex root.
CommonZeroPrimes common_zero_primes(const BivariateRational& w);

}  // namespace eh
