#include "euler_horizon/expansion.hpp"

#include <algorithm>
#include <map>

#include "euler_horizon/error.hpp"

namespace eh {

using poly::Int;
using poly::Monomial;

CycloExpansion peel(const TruncatedSeries& s, Slope slope_bound) {
  if (s.ydeg_bound() < 1 || !s.row(0).is_one())
    throw Error(ErrorCode::InvalidArgument, "peel needs a series with constant term 1");
  CycloExpansion out;
  out.ydeg_bound = s.ydeg_bound();
  TruncatedSeries residual = s;
  for (int m = 1; m <= residual.ydeg_bound(); ++m) {
    const int width = static_cast<int>((static_cast<__int128>(slope_bound.num()) * m) / slope_bound.den());
    if (residual.row(m).degree() > width)
      throw Error(ErrorCode::BoundOverflow, "residual row " + std::to_string(m) + " exceeds the slope bound");
    // A factor (1 - X^n Y^m)^a touches row m only at X^n, so the whole row can
    // be read up front.
    const std::vector<Int> row = residual.row(m).coeffs();
    for (std::size_t n = 0; n < row.size(); ++n) {
      const Int a = row[n];
      if (a == 0) continue;
      out.c[{static_cast<int>(n), m}] = -a;
      series_mul_binomial_power_inplace(residual, static_cast<int>(n), m, a);
    }
  }
  return out;
}

TruncatedSeries reconstruct(const BinomialFactors& c, int ydeg_bound) {
  TruncatedSeries s(ydeg_bound);
  for (const auto& [mono, e] : c)
    if (mono.m <= ydeg_bound) series_mul_binomial_power_inplace(s, mono.n, mono.m, e);
  return s;
}

std::vector<Monomial> strip_pairs(const CycloExpansion& e, Slope beta) {
  std::vector<Monomial> out;
  const __int128 k = beta.num();
  const __int128 l = beta.den();
  for (const auto& [mono, c] : e.c) {
    if (c == 0) continue;
    const __int128 km = k * mono.m;
    if (static_cast<__int128>(mono.n) * l < km && static_cast<__int128>(mono.n + 1) * l > km) out.push_back(mono);
  }
  return out;
}

std::string to_string(StripVerdict v) {
  switch (v) {
    case StripVerdict::ProvenFinite: return "proven-finite";
    case StripVerdict::ExtrapolatedInfinite: return "extrapolated-infinite";
    case StripVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// Lattice points (n, m) with l*n - k*m = delta, n >= 0, 1 <= m <= M, ordered
// along the ray direction.
std::vector<Monomial> line_slots(long delta, int k, int l, int bound) {
  std::vector<Monomial> out;
  for (int m = 1; m <= bound; ++m) {
    const long t = delta + static_cast<long>(k) * m;
    if (t < 0 || t % l != 0) continue;
    out.push_back({static_cast<int>(t / l), m});
  }
  return out;
}

}  // namespace

ProgressionReport detect_progressions(const CycloExpansion& e, Slope beta) {
  ProgressionReport rep;
  if (beta.num() == 0) {
    rep.k = 0;
    rep.l = 1;
  } else {
    rep.k = static_cast<int>(beta.num());
    rep.l = static_cast<int>(beta.den());
  }
  const int k = rep.k;
  const int l = rep.l;
  const int bound = e.ydeg_bound;

  std::map<long, int> keys_on_line;
  for (const auto& [mono, c] : e.c)
    if (c != 0) ++keys_on_line[static_cast<long>(l) * mono.n - static_cast<long>(k) * mono.m];

  // Strip lines always get a report so that their slot count is visible.
  for (long d = -(l - 1); d <= -1; ++d) keys_on_line.try_emplace(d, 0);

  int best_strip_slots = 0;
  for (const auto& [delta, nkeys] : keys_on_line) {
    LineReport lr;
    lr.delta = delta;
    lr.in_strip = delta > -l && delta < 0;
    lr.keys = nkeys;
    const std::vector<Monomial> slots = line_slots(delta, k, l, bound);
    lr.slots = static_cast<int>(slots.size());
    if (lr.in_strip) best_strip_slots = std::max(best_strip_slots, lr.slots);
    std::vector<bool> hit(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
      auto it = e.c.find(slots[i]);
      hit[i] = it != e.c.end() && it->second != 0;
    }
    const int nslots = lr.slots;
    for (int period = 1; period <= nslots / 3 && lr.period == 0; ++period) {
      // Each residue class ends at one of the last `period` slots.
      for (int last = nslots - 1; last >= nslots - period; --last) {
        int run = 0;
        int i = last;
        while (i >= 0 && hit[static_cast<std::size_t>(i)]) {
          ++run;
          i -= period;
        }
        if (run >= 3 && run > lr.run) {
          lr.period = period;
          lr.run = run;
          lr.run_start = slots[static_cast<std::size_t>(i + period)];
        }
      }
    }
    lr.extrapolated_infinite = lr.period != 0;
    for (const auto& [d2, n2] : keys_on_line)
      if (d2 > delta) lr.keys_right += n2;
    rep.lines.push_back(lr);
  }
  if (l >= 2 && best_strip_slots < 3)
    throw Error(ErrorCode::TruncationInsufficient,
                "no strip line has three lattice points with m <= " + std::to_string(bound));
  return rep;
}

StripAssessment assess_strip(const CycloExpansion& e, Slope beta, bool w_cyclotomic) {
  StripAssessment a;
  a.pairs = strip_pairs(e, beta);
  if (beta.den() == 1) {
    a.verdict = StripVerdict::ProvenFinite;
    a.detail = "beta is an integer, so no lattice point lies strictly inside the strip";
    a.progressions.k = static_cast<int>(beta.num());
    a.progressions.l = 1;
    return a;
  }
  if (w_cyclotomic) {
    a.verdict = StripVerdict::ProvenFinite;
    a.detail = "W is a finite binomial product, so the expansion terminates";
    a.progressions.k = static_cast<int>(beta.num());
    a.progressions.l = static_cast<int>(beta.den());
    return a;
  }
  a.progressions = detect_progressions(e, beta);
  for (const LineReport& lr : a.progressions.lines) {
    if (lr.in_strip && lr.extrapolated_infinite) {
      a.verdict = StripVerdict::ExtrapolatedInfinite;
      a.detail = "strip line delta=" + std::to_string(lr.delta) + " carries a run of " + std::to_string(lr.run) +
                 " hits with period " + std::to_string(lr.period) + " reaching the frontier";
      return a;
    }
  }
  a.verdict = StripVerdict::Inconclusive;
  a.detail = a.pairs.empty() ? "no strip pairs below the truncation bound"
                             : "strip pairs present but no progression reaches the frontier";
  return a;
}

}  // namespace eh
