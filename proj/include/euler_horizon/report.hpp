#pragma once

#include <string>
#include <vector>

#include "euler_horizon/analytic.hpp"
#include "euler_horizon/classifier.hpp"
#include "euler_horizon/local_zeros.hpp"

namespace eh {

// Pretty-printed JSON (two-space indent, fixed key order).
std::string report_json(const CaseReport& r);
std::string atlas_json(const SingularityAtlas& a);

std::string expansion_csv(const CycloExpansion& e);
std::string zeros_csv(const std::vector<LocalZeroRecord>& records, Slope beta);
std::string atlas_csv(const SingularityAtlas& a);

// Shortest round-trip decimal for a finite double.
std::string format_double(double v);

}  // namespace eh
