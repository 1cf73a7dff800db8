#include "euler_horizon/corpus.hpp"

#include <chrono>

#include "euler_horizon/error.hpp"

namespace eh {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> v;
    v.push_back({"ex51", "(1+Y)*(1+X*Y)", true, 1, Slope(1, 1),
                 {{{0, 1}, -1}, {{1, 1}, -1}, {{0, 2}, 1}, {{2, 2}, 1}}, true,
                 "finite product zeta(s)zeta(s-1)/(zeta(2s)zeta(2s-2))"});
    v.push_back({"ex52a", "1+2*Y/(1-2*Y)", true, 2, Slope(0, 1), {{{0, 1}, -2}}, false,
                 "W = 1/(1-2Y); ghost 1/(1-2T) is not cyclotomic"});
    v.push_back({"ex53a", "1+X^3*Y^3+X^4*Y^3+X^6*Y^5+X^7*Y^5+X^10*Y^8", true, 3, Slope(7, 5),
                 {{{3, 3}, -1}, {{4, 3}, -1}}, false,
                 "ghost 1+X^7*Y^5; case 3 rests on the extrapolated strip progression"});
    v.push_back({"ex53b", "1+Y+X*Y^2", true, 3, Slope(1, 2),
                 {{{0, 1}, -1}, {{0, 2}, 1}, {{1, 2}, -1}, {{1, 3}, 1}, {{2, 5}, -1}, {{3, 7}, 1}}, false,
                 "obstructing point 1/2; strip line 2n-m=-1 is fully occupied"});
    v.push_back({"ex54a", "1+(X+X^2+X^3+X^4)*Y+X^5*Y^2", true, 4, Slope(4, 1),
                 {{{1, 1}, -1}, {{2, 1}, -1}, {{3, 1}, -1}, {{4, 1}, -1}}, false,
                 "local zeros right of Re s = 4 for a positive proportion of primes"});
    v.push_back({"ex55", "1+Y-X^2*Y", true, 5, Slope(2, 1),
                 {{{0, 1}, -1}, {{2, 1}, 1}, {{0, 2}, 1}, {{2, 2}, -1}}, false,
                 "local roots y = 1/(p^2-1) stay left of Re s = 2"});
    CorpusEntry b;
    b.id = "ex52b";
    b.supported = false;
    b.notes = "unsupported: 14-monomial polynomial whose coefficients are not available";
    v.push_back(b);
    CorpusEntry d;
    d.id = "ex54b";
    d.supported = false;
    d.notes = "unsupported: contains the Laurent term Y^-2, outside W(X,0) = 1 polynomial input";
    v.push_back(d);
    return v;
  }();
  return entries;
}

const CorpusEntry* find_corpus_entry(const std::string& id) {
  for (const CorpusEntry& e : corpus())
    if (e.id == id) return &e;
  return nullptr;
}

CorpusResult run_corpus_entry(const CorpusEntry& e, const RunConfig& config, CaseReport* report) {
  if (!e.supported) throw Error(ErrorCode::InvalidArgument, "corpus entry " + e.id + " is not supported");
  CorpusResult res;
  res.id = e.id;
  const auto start = std::chrono::steady_clock::now();
  CaseReport r = classify(parse_expression(e.expr), config, e.expr);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.got_case = r.case_id;
  res.got_beta = r.abscissae.beta.to_string();

  std::string msg;
  if (r.case_id != e.expected_case)
    msg += "case " + (r.case_id ? std::to_string(*r.case_id) : std::string("unset")) + " != " +
           std::to_string(e.expected_case) + "; ";
  if (r.abscissae.beta != e.expected_beta) msg += "beta " + res.got_beta + " != " + e.expected_beta.to_string() + "; ";
  for (const auto& [mono, c] : e.key_factors) {
    auto it = r.expansion.c.find(mono);
    if (it == r.expansion.c.end() || it->second != c)
      msg += "factor (" + std::to_string(mono.n) + "," + std::to_string(mono.m) + ") mismatch; ";
  }
  if (e.factors_exact && r.expansion.c.size() != e.key_factors.size()) msg += "unexpected extra factors; ";
  res.passed = msg.empty();
  res.message = res.passed ? "ok" : msg;
  if (report) *report = std::move(r);
  return res;
}

}  // namespace eh
