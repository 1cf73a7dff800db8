#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "euler_horizon/analytic.hpp"
#include "euler_horizon/cyclo.hpp"
#include "euler_horizon/expansion.hpp"
#include "euler_horizon/local_zeros.hpp"
#include "euler_horizon/newton.hpp"
#include "euler_horizon/rational.hpp"

namespace eh {

struct RunConfig {
  int ydeg_bound = 24;
  std::int64_t prime_bound = 10'000;
  double margin_tol = 1e-6;
  double density_threshold = 0.1;
  std::optional<std::string> zeros_file;

  // Throws InvalidArgument unless M >= 4 and prime_bound >= 100.
  void validate() const;
};

enum class Obstruction { None, Point, Line };
std::string to_string(Obstruction o);

enum class ScanVerdict { Positive, Absent, Ambiguous };
std::string to_string(ScanVerdict v);

struct Evidence {
  std::string predicate;
  std::string status;
  std::string detail;
};

struct CaseReport {
  std::string expr;
  BivariateRational w;
  std::optional<int> case_id;
  std::vector<int> candidates;  // filled when case_id is unset
  Abscissae abscissae;
  GhostRay ghost;
  std::optional<bool> ghost_cyclotomic;
  CycloFactorization w_cyclo;
  CycloExpansion expansion;
  StripAssessment strip;
  ScanSummary scan;
  ScanVerdict scan_verdict = ScanVerdict::Ambiguous;
  Obstruction obstructing = Obstruction::None;
  std::vector<Evidence> evidence;
  std::vector<std::string> warnings;
  int ydeg_bound = 0;  // effective truncation
  std::int64_t prime_bound = 0;
  // Scan records of primes with margin above the tolerance.
  std::vector<LocalZeroRecord> exceptional;
};

// Runs the full pipeline. A report with unset case_id is returned rather than
// thrown; callers map it to Inconclusive.
CaseReport classify(const BivariateRational& w, const RunConfig& config, const std::string& expr = {});

struct ObstructionSummary {
  Obstruction set = Obstruction::None;
  std::string text;
  std::string continuation;  // half-plane of meromorphic continuation
  std::vector<std::string> notes;
};
ObstructionSummary obstructing_description(const CaseReport& r);

// Atlas for a decided report. Throws Inconclusive when the case is unset.
SingularityAtlas atlas_for(const CaseReport& r, double T, const std::vector<double>& zeros);

}  // namespace eh
