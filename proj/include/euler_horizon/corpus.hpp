#pragma once

#include <optional>
#include <string>
#include <vector>

#include "euler_horizon/classifier.hpp"

namespace eh {

struct CorpusEntry {
  std::string id;
  std::string expr;
  bool supported = true;
  int expected_case = 0;
  Slope expected_beta;
  // Factors c(n, m) that the expansion must contain.
  std::vector<std::pair<poly::Monomial, long>> key_factors;
  // When set, the expansion must equal exactly this factor list.
  bool factors_exact = false;
  std::string notes;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* find_corpus_entry(const std::string& id);

struct CorpusResult {
  std::string id;
  bool passed = false;
  std::optional<int> got_case;
  std::string got_beta;
  std::string message;
  double seconds = 0;
};

// Throws InvalidArgument for unknown or unsupported ids.
CorpusResult run_corpus_entry(const CorpusEntry& e, const RunConfig& config, CaseReport* report = nullptr);

}  // namespace eh
