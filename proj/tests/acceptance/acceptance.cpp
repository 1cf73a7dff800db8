// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--zeros FILE] [--zeros-long FILE] [--expect-fail N[,N...]]
//
// Exit status is 0 when the failing criteria are exactly the expected ones.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "euler_horizon/analytic.hpp"
#include "euler_horizon/classifier.hpp"
#include "euler_horizon/corpus.hpp"
#include "euler_horizon/cyclo.hpp"
#include "euler_horizon/error.hpp"
#include "euler_horizon/expansion.hpp"
#include "euler_horizon/local_zeros.hpp"
#include "euler_horizon/newton.hpp"
#include "euler_horizon/primes.hpp"
#include "gen.hpp"
#include "oracles.hpp"

namespace {

using eh::Slope;
using eh::poly::Monomial;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;
constexpr double kApery = 1.2020569031595942854;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

eh::CycloExpansion peel_of(const eh::BivariateRational& w, int M) {
  return eh::peel(eh::series_expand(w, M), eh::slope_max(w));
}

std::string factors_text(const std::map<Monomial, long>& f) {
  std::ostringstream o;
  bool first = true;
  for (const auto& [k, v] : f) {
    o << (first ? "" : " ") << "(" << k.n << "," << k.m << "," << (v > 0 ? "+" : "") << v << ")";
    first = false;
  }
  return o.str();
}

// 1. Corpus classification.
void corpus_cases(Outcome& o) {
  const auto start = Clock::now();
  eh::RunConfig config;
  for (const auto& e : eh::corpus()) {
    if (!e.supported) continue;
    eh::CaseReport r;
    const auto res = eh::run_corpus_entry(e, config, &r);
    o.require(res.passed, e.id + ": " + res.message);
    o.detail << " " << e.id << "=" << (r.case_id ? std::to_string(*r.case_id) : "?");
    if (e.id == "ex53b")
      o.require(r.obstructing == eh::Obstruction::Point && r.abscissae.beta == Slope(1, 2), "ex53b point 1/2");
    if (e.id == "ex54a")
      o.require(r.obstructing == eh::Obstruction::Line && r.abscissae.beta == Slope(4, 1), "ex54a line Re s = 4");
    if (e.id == "ex55") o.require(r.abscissae.beta == Slope(2, 1), "ex55 beta = 2");
    if (e.id == "ex52a") o.require(r.abscissae.beta == Slope(0, 1), "ex52a beta = 0");
    if (e.id == "ex53a") {
      o.require(r.abscissae.beta == Slope(7, 5), "ex53a beta = 7/5");
      // Ghost 1 + X^7 Y^5: u(T) = 1 + T on the ray (7, 5).
      o.require(r.ghost.k == 7 && r.ghost.l == 5 && r.ghost.num == eh::poly::UPoly{1, 1} && r.ghost.den.is_one(),
                "ex53a ghost 1 + X^7*Y^5");
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.detail << " total " << secs << " s";
  o.require(secs < 10, "corpus runtime under 10 s");
}

// 2. Cyclotomic example: exact factors and the numeric identity.
void example51(Outcome& o) {
  const auto w = eh::parse_expression("(1+Y)*(1+X*Y)");
  const eh::BinomialFactors expected{{{0, 1}, -1}, {{1, 1}, -1}, {{0, 2}, 1}, {{2, 2}, 1}};
  o.require(peel_of(w, 24).c == expected, "peel factors");
  const double z2 = kPi * kPi / 6;
  const double z4 = std::pow(kPi, 4) / 90;
  const double z6 = std::pow(kPi, 6) / 945;
  const double closed = kApery * z2 / (z6 * z4);
  const auto v = eh::euler_eval(w, Slope(2, 1), 3.0, 100000);
  const double rel = std::abs(v.value - closed) / closed;
  o.detail << " rel.err " << rel << " tail " << v.tail_bound;
  o.require(rel < 1e-4, "relative error below 1e-4");
}

// 3. Strip example expansion pattern.
void example53b(Outcome& o) {
  const auto w = eh::parse_expression("1+Y+X*Y^2");
  const int M = 21;
  const auto s = eh::series_expand(w, M);
  const auto e = eh::peel(s, eh::slope_max(w));
  // Independent route for the same factors.
  o.require(e.c == oracle::log_factors(s, M / 2), "brute-force peel agreement");

  std::map<Monomial, long> reference{{{0, 1}, -1}, {{1, 2}, -1}, {{1, 3}, -1}, {{0, 2}, 1}, {{2, 4}, 1}};
  for (int m = 1; m <= 4; ++m) {
    reference[{2 * m, 4 * m + 1}] = -1;
    reference[{2 * m + 1, 4 * m + 3}] = 1;
    reference[{4 * m, 8 * m + 2}] = 1;
  }
  std::erase_if(reference, [&](const auto& kv) { return kv.first.m > M; });
  std::map<Monomial, long> computed;
  for (const auto& [k, c] : e.c)
    if (2 * (k.n + 1) >= k.m && k.m <= M) computed[k] = c.get_si();

  std::map<Monomial, long> missing;
  std::map<Monomial, long> differing;
  std::map<Monomial, long> extra;
  for (const auto& [k, v] : reference) {
    const auto it = computed.find(k);
    if (it == computed.end()) {
      missing[k] = v;
    } else if (it->second != v) {
      differing[k] = it->second;
    }
  }
  for (const auto& [k, v] : computed)
    if (!reference.count(k)) extra[k] = v;
  if (!differing.empty()) o.detail << " computed-where-sign/value-differs: " << factors_text(differing);
  if (!missing.empty()) o.detail << " reference-but-absent: " << factors_text(missing);
  if (!extra.empty()) o.detail << " computed-not-reference: " << factors_text(extra);
  o.require(differing.empty() && missing.empty() && extra.empty(), "computed factors equal the reference family");

  const auto rep = eh::detect_progressions(e, Slope(1, 2));
  bool found = false;
  for (const auto& line : rep.lines) found = found || (line.in_strip && line.extrapolated_infinite);
  o.require(found && rep.k == 1 && rep.l == 2, "strip progression along (1,2)");
  o.detail << " progression " << (found ? "detected" : "absent") << " along (" << rep.k << "," << rep.l << ")";
}

// 4. Finite strip with no local zeros to the right of the frontier.
void example55(Outcome& o) {
  const auto w = eh::parse_expression("1+Y-X^2*Y");
  eh::RunConfig config;
  const auto r = eh::classify(w, config);
  o.require(eh::strip_pairs(r.expansion, Slope(2, 1)).empty(), "strip pairs empty");
  o.require(r.strip.verdict == eh::StripVerdict::ProvenFinite, "proven finite");
  std::vector<eh::LocalZeroRecord> recs;
  const auto scan = eh::scan_primes(w, Slope(2, 1), 10000, 1e-6, &recs);
  o.require(scan.density == 0, "density 0");
  double worst = 0;
  for (const auto& rec : recs) {
    const double p = static_cast<double>(rec.p);
    const double closed = std::log(p * p - 1) / std::log(p);
    worst = std::max(worst, std::abs(rec.max_re_s - closed));
    o.require(closed < 2 && rec.max_re_s < 2, "Re s below 2 at p = " + std::to_string(rec.p));
  }
  o.detail << " density " << scan.density << " over " << scan.count_scanned << " primes, max closed-form deviation "
           << worst;
  o.require(worst < 1e-9, "closed-form agreement");
  o.require(r.case_id == 5 && r.obstructing == eh::Obstruction::None, "case 5, no obstruction");
}

// 5. Local zeros to the right of the frontier.
void example54a(Outcome& o) {
  const auto w = eh::parse_expression("1+(X+X^2+X^3+X^4)*Y+X^5*Y^2");
  std::vector<eh::LocalZeroRecord> recs;
  const auto scan = eh::scan_primes(w, Slope(4, 1), 10000, 1e-6, &recs);
  o.require(scan.density > 0.9, "density above 0.9");
  o.require(scan.top_block_positive() > 0, "positive margins in the top dyadic block");
  // Root of 32 y^2 + 30 y + 1 nearest the origin.
  const double y = (-30 + std::sqrt(900.0 - 128.0)) / 64;
  const double closed_margin = -std::log(std::abs(y)) / std::log(2.0) - 4;
  const double margin2 = recs.front().margin;
  o.detail << " density " << scan.density << ", top block " << scan.top_block_positive() << "/" << scan.trend.back().count
           << ", p=2 margin " << margin2 << " (closed form " << closed_margin << ")";
  o.require(recs.front().p == 2 && std::abs(margin2 - 0.85) <= 0.01, "p=2 margin 0.85 +- 0.01");
  o.require(std::abs(margin2 - closed_margin) < 1e-9, "p=2 closed form");
}

// 6. Reconstruction invariant on random inputs.
void reconstruction(Outcome& o) {
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = gen::rational(4, 3, 4);
    const auto s24 = eh::series_expand(w, 24);
    const Slope slope = eh::slope_max(w);
    const auto e24 = eh::peel(s24, slope);
    const int N = static_cast<int>(slope.num() * 24 / slope.den());
    const auto prod = oracle::naive_product(e24.c, 24, N);
    bool exact = true;
    for (int m = 0; m <= 24 && exact; ++m)
      for (int n = 0; n <= N && exact; ++n) exact = prod[m][n] == mpq_class(s24.coeff(n, m));
    o.require(exact, "product equals W mod Y^25 for " + eh::to_string(w));
    auto upper = e24.c;
    std::erase_if(upper, [](const auto& kv) { return kv.first.m > 12; });
    o.require(eh::peel(eh::series_expand(w, 12), slope).c == upper, "M=12 vs M=24 for " + eh::to_string(w));
    ++checked;
  }
  o.detail << " " << checked << " inputs";
}

// 7. Cyclotomic recognition.
void cyclotomic(Outcome& o) {
  int round_trips = 0;
  while (round_trips < 50) {
    const auto f = gen::binomial_product(4, 4, 4);
    const auto w = eh::expand_factors(f);
    if (w.is_degenerate()) continue;
    const auto r = eh::is_cyclotomic_bivariate(w);
    o.require(r.is_cyclotomic && r.factors == f, "round trip for " + eh::to_string(w));
    ++round_trips;
  }
  o.require(!eh::is_cyclotomic_bivariate(eh::parse_expression("1+Y+X*Y^2")).is_cyclotomic, "1+Y+X*Y^2");
  o.require(!eh::is_cyclotomic_bivariate(eh::parse_expression("1+2*Y")).is_cyclotomic, "1+2*Y");
  o.require(!eh::is_cyclotomic_univariate(eh::poly::UPoly{1}, eh::poly::UPoly{1, -2}).is_cyclotomic, "1/(1-2T)");
  o.detail << " " << round_trips << " products";
}

// 8. Atlas count and growth for the cyclotomic example.
void atlas(Outcome& o, const std::string& zeros_path, const std::string& long_path) {
  const auto w = eh::parse_expression("(1+Y)*(1+X*Y)");
  eh::RunConfig config;
  const auto r = eh::classify(w, config);
  const auto zeros = eh::load_zeros(zeros_path);
  auto count_below = [](const std::vector<double>& z, double t) {
    long n = 0;
    for (double g : z) n += g < t;
    return n;
  };
  const auto a = eh::atlas_for(r, 50, zeros);
  const long expected = 2 + 2 * count_below(zeros, 50) + 2 * count_below(zeros, 100);
  o.detail << " N(50 atlas) " << a.n_pm << " expected " << expected;
  o.require(a.n_pm == expected, "N+- recount");
  o.require(a.warnings.empty(), "zeros table covers T = 50");

  const auto long_zeros = eh::load_zeros(long_path);
  o.detail << "; N/(T log T):";
  for (double T : {25.0, 50.0, 100.0, 200.0}) {
    const auto g = eh::atlas_for(r, T, long_zeros);
    const double ratio = static_cast<double>(g.n_pm) / (T * std::log(T));
    const double estimate = g.c1 * T * std::log(T) + g.c2 * T;
    o.detail << " " << ratio << " (est. " << estimate << " vs " << g.n_pm << ")";
    o.require(g.warnings.empty(), "zeros table covers T");
    o.require(std::isfinite(ratio) && ratio <= g.c1, "ratio bounded by c1");
  }
}

// 9. Common-zero primes.
void common_zeros(Outcome& o) {
  for (const auto& e : eh::corpus()) {
    if (!e.supported) continue;
    const auto r = eh::common_zero_primes(eh::parse_expression(e.expr));
    o.require(r.complete && r.primes.empty(), e.id + " has no common-zero primes");
  }
  const auto planted = eh::common_zero_primes(eh::parse_expression("(1-X*Y)/(1-5*Y)"));
  o.require(planted.complete && planted.primes == std::vector<eh::poly::Int>{5}, "planted prime 5");
  o.detail << " planted: [";
  for (const auto& p : planted.primes) o.detail << p.get_str();
  o.detail << "]";
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string zeros = EH_DATA_DIR "/zeta_zeros_100.txt";
  std::string zeros_long = EH_DATA_DIR "/zeta_zeros_1000.txt";
  if (const char* env = std::getenv("EULER_HORIZON_ZEROS")) zeros = env;
  std::set<int> expect_fail;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--zeros") {
      zeros = argv[i + 1];
    } else if (flag == "--zeros-long") {
      zeros_long = argv[i + 1];
    } else if (flag == "--expect-fail") {
      expect_fail = parse_list(argv[i + 1]);
    } else {
      std::cerr << "unknown flag " << flag << "\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"corpus classification", corpus_cases},
      {"cyclotomic example identity", example51},
      {"strip example expansion pattern", example53b},
      {"finite strip without right zeros", example55},
      {"local zeros right of the frontier", example54a},
      {"reconstruction invariant", reconstruction},
      {"cyclotomic oracle", cyclotomic},
      {"atlas count and growth", [&](Outcome& o) { atlas(o, zeros, zeros_long); }},
      {"common-zero primes", common_zeros},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    const auto start = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= 60) o.require(false, "runtime under 60 s");
    if (!o.pass) failed.insert(id);
    std::printf("criterion %d %s: %s (%.2f s)%s\n", id, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL", secs,
                o.detail.str().c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed.size(), criteria.size());
  if (failed != expect_fail) {
    std::printf("failing set differs from the expected set\n");
    return 1;
  }
  if (!failed.empty()) std::printf("all failures are listed as expected\n");
  return 0;
}
