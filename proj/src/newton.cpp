#include "euler_horizon/newton.hpp"

#include <algorithm>
#include <optional>

#include "euler_horizon/error.hpp"

namespace eh {

using poly::Int;
using poly::Monomial;
using poly::UPoly;

namespace {

struct Maxima {
  std::optional<Slope> beta;
  std::optional<Slope> alpha;
};

Maxima maxima_up_to(const TruncatedSeries& s, int mmax) {
  Maxima out;
  for (int m = 1; m <= mmax; ++m) {
    const UPoly& row = s.row(m);
    if (row.is_zero()) continue;
    const int n = row.degree();
    const Slope b(n, m);
    const Slope a(n + 1, m);
    if (!out.beta || b > *out.beta) out.beta = b;
    if (!out.alpha || a > *out.alpha) out.alpha = a;
  }
  return out;
}

Slope alpha_bound_of(const BivariateRational& w) {
  std::optional<Slope> best;
  for (const auto* p : {&w.num(), &w.den()})
    for (const auto& [mono, c] : p->terms()) {
      if (mono.m == 0) continue;
      const Slope s(mono.n + 1, mono.m);
      if (!best || s > *best) best = s;
    }
  return best.value_or(Slope(0, 1));
}

}  // namespace

Abscissae compute_alpha_beta(const TruncatedSeries& s, const BivariateRational& w) {
  if (w.is_degenerate()) throw Error(ErrorCode::DegenerateInput, "W = 1 has no abscissae");
  const int bound = s.ydeg_bound();
  const Maxima full = maxima_up_to(s, bound);
  if (!full.beta) throw Error(ErrorCode::DegenerateInput, "series has no terms with positive Y-degree");

  Abscissae r;
  r.beta = *full.beta;
  r.alpha = *full.alpha;
  r.beta_bound = slope_max(w);
  r.alpha_bound = alpha_bound_of(w);
  if (r.beta > r.beta_bound || r.alpha > r.alpha_bound)
    throw Error(ErrorCode::Internal, "series exceeds the mediant bound");
  if (r.beta == r.beta_bound && r.alpha == r.alpha_bound) return r;

  r.cancellation_possible = true;
  const Maxima half = maxima_up_to(s, bound / 2);
  if (!half.beta || *half.beta != r.beta || *half.alpha != r.alpha)
    throw Error(ErrorCode::TruncationInsufficient,
                "truncated abscissae still moving at Y-degree " + std::to_string(bound));
  return r;
}

std::vector<Monomial> extremal_points(const std::vector<Monomial>& points) {
  std::vector<Monomial> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Monomial> out;
  for (const Monomial& a : pts) {
    if (a.n == 0 && a.m == 0) throw Error(ErrorCode::InvalidArgument, "origin in support set");
    // Look for a functional f with f(a) = 1 and f(b) > 1 for every other b.
    // f = f0 + t*g where f0(a) = 1 and g(a) = 0; each b cuts an open half-line of t.
    const mpq_class f0n = a.m != 0 ? mpq_class(0) : mpq_class(1, a.n);
    const mpq_class f0m = a.m != 0 ? mpq_class(1, a.m) : mpq_class(0);
    const Int gn = a.m;
    const Int gm = -a.n;
    std::optional<mpq_class> lo;
    std::optional<mpq_class> hi;
    bool feasible = true;
    for (const Monomial& b : pts) {
      if (b == a) continue;
      const mpq_class f0b = f0n * b.n + f0m * b.m;
      const Int gb = gn * b.n + gm * b.m;
      if (gb == 0) {
        if (f0b <= 1) feasible = false;
      } else {
        mpq_class t = (1 - f0b) / mpq_class(gb);
        if (gb > 0) {
          if (!lo || t > *lo) lo = t;
        } else {
          if (!hi || t < *hi) hi = t;
        }
      }
      if (!feasible) break;
    }
    if (feasible && lo && hi && !(*lo < *hi)) feasible = false;
    if (feasible) out.push_back(a);
  }
  return out;
}

Recurrence berlekamp_massey(const std::vector<Int>& seq) {
  std::vector<mpq_class> c{1};
  std::vector<mpq_class> b{1};
  int length = 0;
  int shift = 1;
  mpq_class last_disc = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    mpq_class d = seq[i];
    for (int j = 1; j <= length && j < static_cast<int>(c.size()); ++j)
      d += c[static_cast<std::size_t>(j)] * seq[i - static_cast<std::size_t>(j)];
    if (d == 0) {
      ++shift;
      continue;
    }
    const mpq_class coef = d / last_disc;
    std::vector<mpq_class> t = c;
    if (c.size() < b.size() + static_cast<std::size_t>(shift)) c.resize(b.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t j = 0; j < b.size(); ++j) c[j + static_cast<std::size_t>(shift)] -= coef * b[j];
    if (2 * length <= static_cast<int>(i)) {
      length = static_cast<int>(i) + 1 - length;
      b = std::move(t);
      last_disc = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return {std::move(c), length};
}

GhostRay ghost(const TruncatedSeries& s, Slope beta) {
  GhostRay g;
  if (beta.num() == 0) {
    g.k = 0;
    g.l = 1;
  } else {
    g.k = static_cast<int>(beta.num());
    g.l = static_cast<int>(beta.den());
  }
  const int count = s.ydeg_bound() / g.l + 1;
  if (count < 2) throw Error(ErrorCode::ReconstructionAmbiguous, "fewer than two ray terms available");
  for (int j = 0; j < count; ++j) g.terms.push_back(s.coeff(j * g.k, j * g.l));

  const Recurrence rec = berlekamp_massey(g.terms);
  if (2 * rec.length > count) {
    g.num = UPoly(g.terms);
    g.den = UPoly::constant(1);
    g.reconstructed = false;
    return g;
  }
  // Clear denominators of the connection polynomial.
  Int scale = 1;
  for (const mpq_class& q : rec.connection) scale = lcm(scale, Int(q.get_den()));
  std::vector<Int> den;
  for (const mpq_class& q : rec.connection) {
    mpq_class v = q * scale;
    den.push_back(v.get_num());
  }
  UPoly d(den);
  UPoly n = (d * UPoly(g.terms)).truncated(rec.length);
  const UPoly common = poly::gcd(n, d);
  if (!common.is_zero() && common.degree() > 0) {
    n = *poly::divide_exact(n, common);
    d = *poly::divide_exact(d, common);
  }
  const Int c = ::gcd(n.content(), d.content()) * (d.coeff(0) < 0 ? -1 : 1);
  g.num = n.divexact(c);
  g.den = d.divexact(c);
  g.reconstructed = true;
  return g;
}

}  // namespace eh
