#include "euler_horizon/local_zeros.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "euler_horizon/error.hpp"
#include "euler_horizon/primes.hpp"
#include "euler_horizon/roots.hpp"

namespace eh {

using poly::Int;
using poly::UPoly;

LocalZeroContext::LocalZeroContext(const BivariateRational& w, Slope beta) : w_(w), beta_(beta) {
  if (w.num().degree_y() >= 1 && w.den().degree_y() >= 1) resultant_ = poly::resultant_in_y(w.num(), w.den());
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f_in) {
  std::vector<std::pair<UPoly, int>> out;
  if (f_in.degree() < 1) return out;
  const UPoly f = f_in.primitive();
  const UPoly df = f.derivative();
  const UPoly a0 = poly::gcd(f, df);
  UPoly b = *poly::divide_exact(f, a0);
  UPoly c = *poly::divide_exact(df, a0);
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const UPoly a = poly::gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = *poly::divide_exact(b, a);
    c = *poly::divide_exact(d, a);
    d = c - b.derivative();
  }
  return out;
}

namespace {

double mpz_to_double(const Int& v) { return v.get_d(); }

}  // namespace

LocalZeroRecord local_roots(const LocalZeroContext& ctx, std::int64_t p) {
  const Int x0(static_cast<long>(p));
  const UPoly pp = ctx.w().num().specialize_x(x0);
  if (pp.degree() < 1) throw Error(ErrorCode::InvalidArgument, "P(p, Y) is constant at p = " + std::to_string(p));
  LocalZeroRecord rec;
  rec.p = p;
  UPoly f = pp;
  if (!ctx.w().den().is_one()) {
    const UPoly qp = ctx.w().den().specialize_x(x0);
    const UPoly g = poly::gcd(pp, qp);
    if (g.degree() > 0) {
      if (ctx.resultant() && ctx.resultant()->eval(x0) != 0)
        throw Error(ErrorCode::Internal, "shared local root at a prime not dividing the resultant");
      rec.shared_degree = g.degree();
      f = *poly::divide_exact(pp, g);
      if (f.degree() < 1)
        throw Error(ErrorCode::AllRootsCancelled, "every root of P(p, Y) is shared with Q at p = " + std::to_string(p));
    }
  }
  const double lnp = std::log(static_cast<double>(p));
  for (const auto& [factor, mult] : squarefree_decomposition(f)) {
    std::vector<std::complex<double>> a;
    a.reserve(factor.coeffs().size());
    for (const Int& c : factor.coeffs()) a.emplace_back(mpz_to_double(c), 0.0);
    for (const auto& y : polynomial_roots(a)) {
      LocalRoot r;
      r.y = y;
      r.multiplicity = mult;
      r.re_s = -std::log(std::abs(y)) / lnp;
      rec.roots.push_back(r);
    }
  }
  std::sort(rec.roots.begin(), rec.roots.end(), [](const LocalRoot& u, const LocalRoot& v) {
    const double au = std::abs(u.y);
    const double av = std::abs(v.y);
    if (au != av) return au < av;
    return std::arg(u.y) < std::arg(v.y);
  });
  for (const LocalRoot& r : rec.roots) rec.max_re_s = std::max(rec.max_re_s, r.re_s);
  rec.margin = rec.max_re_s - ctx.beta().to_double();
  return rec;
}

LocalZeroRecord local_roots(const BivariateRational& w, std::int64_t p, Slope beta) {
  return local_roots(LocalZeroContext(w, beta), p);
}

namespace {

struct PrimeOutcome {
  std::int64_t p = 0;
  bool skipped = false;
  LocalZeroRecord rec;
};

PrimeOutcome scan_one(const LocalZeroContext& ctx, std::int64_t p) {
  PrimeOutcome out;
  out.p = p;
  out.rec.p = p;
  if (ctx.w().num().specialize_x(Int(static_cast<long>(p))).degree() < 1) return out;
  try {
    out.rec = local_roots(ctx, p);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::AllRootsCancelled) return out;
    if (e.code() != ErrorCode::RootFindingDiverged) throw;
    out.skipped = true;
  }
  return out;
}

}  // namespace

ScanSummary scan_primes(const BivariateRational& w, Slope beta, std::int64_t bound, double margin_tol,
                        std::vector<LocalZeroRecord>* records) {
  if (bound < 2) throw Error(ErrorCode::InvalidArgument, "prime bound below 2");
  const LocalZeroContext ctx(w, beta);
  const std::vector<std::int64_t> primes = primes_up_to(bound);

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(8, std::thread::hardware_concurrency()));
  const std::size_t chunk = (primes.size() + workers - 1) / workers;
  std::vector<std::future<std::vector<PrimeOutcome>>> jobs;
  for (std::size_t start = 0; start < primes.size(); start += chunk) {
    const std::size_t stop = std::min(primes.size(), start + chunk);
    jobs.push_back(std::async(std::launch::async, [&ctx, &primes, start, stop] {
      std::vector<PrimeOutcome> part;
      part.reserve(stop - start);
      for (std::size_t i = start; i < stop; ++i) part.push_back(scan_one(ctx, primes[i]));
      return part;
    }));
  }

  ScanSummary s;
  s.prime_bound = bound;
  s.margin_tol = margin_tol;
  for (auto& job : jobs) {
    for (PrimeOutcome& o : job.get()) {
      if (o.skipped) {
        s.skipped.push_back(o.p);
        continue;
      }
      ++s.count_scanned;
      std::int64_t lo = 1;
      while (lo * 2 <= o.p) lo *= 2;
      if (s.trend.empty() || s.trend.back().lo != lo) s.trend.push_back({lo, 0, 0, -std::numeric_limits<double>::infinity()});
      BlockTrend& blk = s.trend.back();
      ++blk.count;
      blk.max_margin = std::max(blk.max_margin, o.rec.margin);
      if (o.rec.margin > margin_tol) {
        ++blk.positive;
        ++s.count_with_zero_right_of_beta;
        s.positive_primes.push_back(o.p);
      }
      if (records) records->push_back(std::move(o.rec));
    }
  }
  const std::size_t total = s.skipped.size() + static_cast<std::size_t>(s.count_scanned);
  if (total > 0 && s.skipped.size() * 100 >= total && !s.skipped.empty())
    throw Error(ErrorCode::RootFindingDiverged, std::to_string(s.skipped.size()) + " primes skipped by the root finder");
  s.density = s.count_scanned == 0 ? 0.0 : static_cast<double>(s.count_with_zero_right_of_beta) / s.count_scanned;
  return s;
}

CommonZeroPrimes common_zero_primes(const BivariateRational& w) {
  CommonZeroPrimes out;
  if (w.num().degree_y() < 1 || w.den().degree_y() < 1) return out;
  const UPoly res = poly::resultant_in_y(w.num(), w.den());
  Int trailing = 0;
  for (const Int& c : res.coeffs())
    if (c != 0) {
      trailing = abs(c);
      break;
    }
  // Prime integer roots of Res divide its trailing nonzero coefficient.
  std::vector<Int> candidates;
  Int rest = trailing;
  for (unsigned long d = 2; d <= 1'000'000 && Int(d) * d <= rest; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d) == 0) continue;
    candidates.emplace_back(d);
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
  }
  if (rest > 1) {
    if (mpz_probab_prime_p(rest.get_mpz_t(), 30) != 0) {
      candidates.push_back(rest);
    } else {
      out.complete = false;
    }
  }
  for (const Int& p : candidates) {
    const UPoly g = poly::gcd(w.num().specialize_x(p), w.den().specialize_x(p));
    if (res.eval(p) == 0 && g.degree() > 0) {
      out.primes.push_back(p);
    } else {
      out.rejected.push_back(p);
    }
  }
  return out;
}

}  // namespace eh
