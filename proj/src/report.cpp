#include "euler_horizon/report.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>
#include <sstream>

namespace eh {

using nlohmann::ordered_json;

std::string format_double(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  if (v == 0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

ordered_json int_value(const poly::Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ordered_json slope_json(Slope s) { return {{"num", s.num()}, {"den", s.den()}}; }

ordered_json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

ordered_json factors_json(const BinomialFactors& f, const char* key) {
  ordered_json arr = ordered_json::array();
  for (const auto& [mono, e] : f) arr.push_back({{"n", mono.n}, {"m", mono.m}, {key, int_value(e)}});
  return arr;
}

}  // namespace

std::string report_json(const CaseReport& r) {
  ordered_json j;
  j["expr"] = r.expr;
  j["normalized"] = {{"num", poly::to_string(r.w.num())}, {"den", poly::to_string(r.w.den())}};
  j["alpha"] = slope_json(r.abscissae.alpha);
  j["beta"] = slope_json(r.abscissae.beta);
  j["cancellation_possible"] = r.abscissae.cancellation_possible;

  ordered_json g;
  g["direction"] = {r.ghost.k, r.ghost.l};
  g["ray_num"] = poly::to_string(r.ghost.num, 'T');
  g["ray_den"] = poly::to_string(r.ghost.den, 'T');
  g["cyclotomic"] = r.ghost_cyclotomic ? ordered_json(*r.ghost_cyclotomic) : ordered_json(nullptr);
  g["reconstructed"] = r.ghost.reconstructed;
  ordered_json terms = ordered_json::array();
  for (const auto& t : r.ghost.terms) terms.push_back(int_value(t));
  g["terms"] = terms;
  j["ghost"] = g;

  j["w_cyclotomic"] = {{"flag", r.w_cyclo.is_cyclotomic}, {"factors", factors_json(r.w_cyclo.factors, "e")}};
  j["expansion"] = {{"truncation", r.ydeg_bound}, {"c", factors_json(r.expansion.c, "c")}};

  ordered_json strip;
  strip["verdict"] = to_string(r.strip.verdict);
  strip["predicate"] = "c(n,m) != 0 with n/m < beta < (n+1)/m";
  ordered_json pairs = ordered_json::array();
  for (const auto& p : r.strip.pairs) pairs.push_back({p.n, p.m});
  strip["pairs"] = pairs;
  ordered_json lines = ordered_json::array();
  for (const LineReport& lr : r.strip.progressions.lines) {
    if (!lr.in_strip && !lr.extrapolated_infinite) continue;
    lines.push_back({{"delta", lr.delta},
                     {"in_strip", lr.in_strip},
                     {"direction", {r.strip.progressions.k, r.strip.progressions.l}},
                     {"slots", lr.slots},
                     {"keys", lr.keys},
                     {"period", lr.period},
                     {"run", lr.run},
                     {"run_start", {lr.run_start.n, lr.run_start.m}},
                     {"extrapolated_infinite", lr.extrapolated_infinite},
                     {"keys_right", lr.keys_right}});
  }
  strip["lines"] = lines;
  strip["detail"] = r.strip.detail;
  j["strip"] = strip;

  ordered_json scan;
  scan["bound"] = r.scan.prime_bound;
  scan["margin_tol"] = r.scan.margin_tol;
  scan["count_scanned"] = r.scan.count_scanned;
  scan["count_with_zero_right_of_beta"] = r.scan.count_with_zero_right_of_beta;
  scan["density"] = r.scan.density;
  scan["verdict"] = to_string(r.scan_verdict);
  ordered_json trend = ordered_json::array();
  for (const BlockTrend& b : r.scan.trend)
    trend.push_back({{"lo", b.lo}, {"hi", 2 * b.lo}, {"count", b.count}, {"positive", b.positive},
                     {"max_margin", number_or_null(b.max_margin)}});
  scan["trend"] = trend;
  scan["skipped"] = r.scan.skipped;
  j["scan"] = scan;

  j["case"] = r.case_id ? ordered_json(*r.case_id) : ordered_json(nullptr);
  j["candidates"] = r.candidates;
  const ObstructionSummary o = obstructing_description(r);
  j["obstructing"] = {{"set", to_string(o.set)},
                      {"description", o.text},
                      {"continuation", o.continuation},
                      {"notes", o.notes}};
  ordered_json ev = ordered_json::array();
  for (const Evidence& e : r.evidence) ev.push_back({{"predicate", e.predicate}, {"status", e.status}, {"detail", e.detail}});
  j["evidence"] = ev;
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

std::string atlas_json(const SingularityAtlas& a) {
  ordered_json j;
  j["sigma_min"] = a.sigma_min;
  j["T"] = a.T;
  j["n_pm"] = a.n_pm;
  j["estimate"] = {{"c1", a.c1}, {"c2", a.c2}, {"note", "c1*T*log(T) + c2*T, estimate only"}};
  j["accumulation"] = a.accumulation;
  ordered_json entries = ordered_json::array();
  for (const AtlasEntry& e : a.entries) {
    ordered_json x = {{"re", e.s.real()},
                      {"im", e.s.imag()},
                      {"kind", to_string(e.kind)},
                      {"multiplicity", e.multiplicity},
                      {"source", to_string(e.source)},
                      {"conditional", e.conditional},
                      {"merged", e.merged}};
    if (e.source == AtlasSource::LocalFactor) x["prime"] = e.prime;
    entries.push_back(x);
  }
  j["entries"] = entries;
  j["warnings"] = a.warnings;
  return j.dump(2) + "\n";
}

std::string expansion_csv(const CycloExpansion& e) {
  std::ostringstream os;
  os << "n,m,c\n";
  for (const auto& [mono, c] : e.c) os << mono.n << ',' << mono.m << ',' << c.get_str() << '\n';
  return os.str();
}

std::string zeros_csv(const std::vector<LocalZeroRecord>& records, Slope beta) {
  std::ostringstream os;
  os << "p,root_re,root_im,re_s,margin\n";
  const double b = beta.to_double();
  for (const LocalZeroRecord& rec : records)
    for (const LocalRoot& r : rec.roots)
      for (int k = 0; k < r.multiplicity; ++k)
        os << rec.p << ',' << format_double(r.y.real()) << ',' << format_double(r.y.imag()) << ','
           << format_double(r.re_s) << ',' << format_double(r.re_s - b) << '\n';
  return os.str();
}

std::string atlas_csv(const SingularityAtlas& a) {
  std::ostringstream os;
  os << "re,im,kind,multiplicity,source,conditional_flag\n";
  for (const AtlasEntry& e : a.entries) {
    std::string source = to_string(e.source);
    if (e.source == AtlasSource::LocalFactor) source += "(" + std::to_string(e.prime) + ")";
    os << format_double(e.s.real()) << ',' << format_double(e.s.imag()) << ',' << to_string(e.kind) << ','
       << e.multiplicity << ',' << source << ',' << (e.conditional ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace eh
