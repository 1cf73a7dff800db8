#include "euler_horizon/classifier.hpp"

#include <algorithm>
#include <sstream>

#include "euler_horizon/error.hpp"

namespace eh {

void RunConfig::validate() const {
  if (ydeg_bound < 4) throw Error(ErrorCode::InvalidArgument, "Y-degree bound must be at least 4");
  if (prime_bound < 100) throw Error(ErrorCode::InvalidArgument, "prime bound must be at least 100");
  if (!(margin_tol >= 0)) throw Error(ErrorCode::InvalidArgument, "margin tolerance must be non-negative");
  if (!(density_threshold >= 0 && density_threshold <= 1))
    throw Error(ErrorCode::InvalidArgument, "density threshold must lie in [0, 1]");
}

std::string to_string(Obstruction o) {
  switch (o) {
    case Obstruction::None: return "none";
    case Obstruction::Point: return "point";
    case Obstruction::Line: return "line";
  }
  return "none";
}

std::string to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::Positive: return "positive";
    case ScanVerdict::Absent: return "absent";
    case ScanVerdict::Ambiguous: return "ambiguous";
  }
  return "ambiguous";
}

namespace {

Obstruction obstruction_for(int case_id) {
  switch (case_id) {
    case 2:
    case 4: return Obstruction::Line;
    case 3: return Obstruction::Point;
    default: return Obstruction::None;
  }
}

std::string poly_text(const poly::UPoly& p) { return poly::to_string(p, 'T'); }

}  // namespace

CaseReport classify(const BivariateRational& w, const RunConfig& config, const std::string& expr) {
  config.validate();
  if (w.is_degenerate()) throw Error(ErrorCode::DegenerateInput, "W = 1 has no Euler factor to classify");
  CaseReport r;
  r.expr = expr.empty() ? to_string(w) : expr;
  r.w = w;
  r.prime_bound = config.prime_bound;
  const int M = std::max(config.ydeg_bound, 2 * w.degree_y());
  r.ydeg_bound = M;
  if (M != config.ydeg_bound)
    r.warnings.push_back("truncation raised to " + std::to_string(M) + " (twice the Y-degree of W)");

  const TruncatedSeries series = series_expand(w, M);
  r.abscissae = compute_alpha_beta(series, w);
  const Slope beta = r.abscissae.beta;
  if (r.abscissae.cancellation_possible)
    r.warnings.push_back("coefficient cancellation: truncated abscissae fall below the monomial bound");

  // Ghost ray.
  const int l = beta.num() == 0 ? 1 : static_cast<int>(beta.den());
  const int ray_bound = kGhostRayTerms * l;
  r.ghost = ray_bound > M ? ghost(series_expand(w, ray_bound), beta) : ghost(series, beta);
  if (r.ghost.reconstructed) {
    const UnivariateCyclo uc = is_cyclotomic_univariate(r.ghost.num, r.ghost.den);
    r.ghost_cyclotomic = uc.is_cyclotomic;
    r.evidence.push_back({"ghost-cyclotomic", uc.is_cyclotomic ? "true" : "false",
                          "u(T) = (" + poly_text(r.ghost.num) + ")/(" + poly_text(r.ghost.den) + ")"});
  } else {
    r.evidence.push_back({"ghost-cyclotomic", "unknown", "no recurrence fits the available ray terms"});
  }

  r.w_cyclo = is_cyclotomic_bivariate(w);
  r.evidence.push_back({"w-cyclotomic", r.w_cyclo.is_cyclotomic ? "true" : "false",
                        r.w_cyclo.is_cyclotomic ? std::to_string(r.w_cyclo.factors.size()) + " binomial factors"
                                                : "residual " + poly::to_string(r.w_cyclo.residual_num) + " / " +
                                                      poly::to_string(r.w_cyclo.residual_den)});

  r.expansion = peel(series, r.abscissae.beta_bound);
  try {
    r.strip = assess_strip(r.expansion, beta, r.w_cyclo.is_cyclotomic);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TruncationInsufficient) throw;
    r.strip.pairs = strip_pairs(r.expansion, beta);
    r.strip.verdict = StripVerdict::Inconclusive;
    r.strip.detail = e.what();
    r.warnings.push_back(e.what());
  }
  r.evidence.push_back({"strip-progression", to_string(r.strip.verdict),
                        r.strip.detail + "; " + std::to_string(r.strip.pairs.size()) + " strip pairs with m <= " +
                            std::to_string(M)});

  std::vector<LocalZeroRecord> records;
  r.scan = scan_primes(w, beta, config.prime_bound, config.margin_tol, &records);
  for (auto& rec : records)
    if (rec.margin > config.margin_tol) r.exceptional.push_back(std::move(rec));
  const bool dense = r.scan.density > config.density_threshold;
  const int top = r.scan.top_block_positive();
  if (dense && top > 0) {
    r.scan_verdict = ScanVerdict::Positive;
  } else if (!dense && top == 0) {
    r.scan_verdict = ScanVerdict::Absent;
  } else {
    r.scan_verdict = ScanVerdict::Ambiguous;
  }
  {
    std::ostringstream d;
    d << "density " << r.scan.density << " over " << r.scan.count_scanned << " primes <= " << config.prime_bound
      << ", " << top << " positive in the top dyadic block";
    r.evidence.push_back({"scan-zero-right-of-beta", to_string(r.scan_verdict), d.str()});
  }
  if (!r.scan.skipped.empty())
    r.warnings.push_back(std::to_string(r.scan.skipped.size()) + " primes skipped by the root finder");

  const bool finite = r.strip.verdict == StripVerdict::ProvenFinite;
  if (r.w_cyclo.is_cyclotomic) {
    r.case_id = 1;
  } else if (r.ghost_cyclotomic.has_value() && !*r.ghost_cyclotomic) {
    r.case_id = 2;
  } else if (r.ghost_cyclotomic.has_value() && r.strip.verdict == StripVerdict::ExtrapolatedInfinite) {
    r.case_id = 3;
  } else if (r.ghost_cyclotomic.has_value() && finite && r.scan_verdict == ScanVerdict::Positive) {
    r.case_id = 4;
  } else if (r.ghost_cyclotomic.has_value() && finite && r.scan_verdict == ScanVerdict::Absent) {
    r.case_id = 5;
  } else {
    // The ghost is unknown or cyclotomic here.
    const bool infinite = r.strip.verdict == StripVerdict::ExtrapolatedInfinite;
    if (!r.ghost_cyclotomic.has_value()) r.candidates.push_back(2);
    if (!finite) r.candidates.push_back(3);
    if (!infinite && r.scan_verdict != ScanVerdict::Absent) r.candidates.push_back(4);
    if (!infinite && r.scan_verdict != ScanVerdict::Positive) r.candidates.push_back(5);
  }
  if (r.case_id) r.obstructing = obstruction_for(*r.case_id);
  return r;
}

ObstructionSummary obstructing_description(const CaseReport& r) {
  ObstructionSummary s;
  const std::string b = r.abscissae.beta.to_string();
  s.continuation = "Re s > " + b;
  if (!r.case_id) {
    std::ostringstream t;
    t << "undecided; candidate cases";
    for (int c : r.candidates) t << ' ' << c;
    s.text = t.str();
    for (const Evidence& e : r.evidence)
      if (e.status == "unknown" || e.status == "inconclusive" || e.status == "ambiguous")
        s.notes.push_back("evidence gap: " + e.predicate + " (" + e.detail + ")");
    return s;
  }
  s.set = obstruction_for(*r.case_id);
  switch (*r.case_id) {
    case 1:
      s.text = "no obstructing point; D is a finite product of zeta functions";
      s.continuation = "entire plane, finite zeta product";
      break;
    case 2:
      s.text = "every point of Re s = " + b + " is obstructing (ghost not cyclotomic)";
      break;
    case 3:
      s.text = "s = " + b + " is an obstructing point";
      s.notes.push_back("continuation across Re s = " + b + " depends on the location of zeta zeros");
      break;
    case 4:
      s.text = "every point of Re s = " + b + " is obstructing (local zeros right of the line)";
      break;
    case 5:
      s.text = "no point of Re s = " + b + " is obstructing";
      break;
    default: break;
  }
  return s;
}

SingularityAtlas atlas_for(const CaseReport& r, double T, const std::vector<double>& zeros) {
  if (!r.case_id) throw Error(ErrorCode::Inconclusive, "atlas needs a decided case");
  AtlasInput in;
  in.beta = r.abscissae.beta;
  if (*r.case_id == 1) {
    for (const auto& [mono, e] : r.w_cyclo.factors) in.factors.push_back({mono.m, mono.n, -e.get_si()});
  } else {
    const ZetaFactorForm form = make_factor_form(r.expansion, r.abscissae.beta);
    for (const ZetaFactor& f : form.factors)
      if (Slope(f.n + 1, f.m) > r.abscissae.beta) in.factors.push_back(f);
    if (*r.case_id == 5) {
      for (const LocalZeroRecord& rec : r.exceptional)
        for (const LocalRoot& root : rec.roots)
          if (root.re_s > r.abscissae.beta.to_double()) in.lattices.push_back({rec.p, root.y, root.multiplicity});
    } else {
      in.frontier_only = true;
    }
  }
  return build_atlas(in, T, zeros);
}

}  // namespace eh
