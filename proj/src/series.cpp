#include "euler_horizon/series.hpp"

#include <algorithm>
#include <utility>

#include "euler_horizon/error.hpp"

namespace eh {

using poly::Int;
using poly::UPoly;

namespace {

UPoly shifted(const UPoly& p, int k) {
  if (p.is_zero() || k == 0) return p;
  std::vector<Int> c(static_cast<std::size_t>(k), Int(0));
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return UPoly(std::move(c));
}

// Coefficients of (1 - T)^e up to T^kmax: b_k = (-1)^k binom(e, k).
std::vector<Int> binomial_series(const Int& e, int kmax) {
  std::vector<Int> b(static_cast<std::size_t>(kmax) + 1);
  b[0] = 1;
  for (int k = 1; k <= kmax; ++k) {
    Int num = -b[static_cast<std::size_t>(k - 1)] * (e - (k - 1));
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
    b[static_cast<std::size_t>(k)] = std::move(num);
  }
  return b;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int ydeg_bound) {
  if (ydeg_bound < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation bound");
  rows_.resize(static_cast<std::size_t>(ydeg_bound) + 1);
  rows_[0] = UPoly::constant(1);
}

Int TruncatedSeries::coeff(int n, int m) const {
  if (m < 0 || m > ydeg_bound() || n < 0) return 0;
  return rows_[static_cast<std::size_t>(m)].coeff(n);
}

void TruncatedSeries::set(int n, int m, const Int& c) {
  if (m < 0 || m > ydeg_bound() || n < 0) throw Error(ErrorCode::InvalidArgument, "coefficient index out of range");
  UPoly& r = rows_[static_cast<std::size_t>(m)];
  r += UPoly::monomial(c - r.coeff(n), n);
}

std::vector<poly::Monomial> TruncatedSeries::support() const {
  std::vector<poly::Monomial> out;
  for (int m = 1; m <= ydeg_bound(); ++m) {
    const auto& cs = rows_[static_cast<std::size_t>(m)].coeffs();
    for (std::size_t n = 0; n < cs.size(); ++n)
      if (cs[n] != 0) out.push_back({static_cast<int>(n), m});
  }
  return out;
}

bool TruncatedSeries::is_one() const {
  if (rows_.empty() || !rows_[0].is_one()) return false;
  return std::all_of(rows_.begin() + 1, rows_.end(), [](const UPoly& r) { return r.is_zero(); });
}

TruncatedSeries TruncatedSeries::truncated(int ydeg_bound) const {
  if (ydeg_bound > this->ydeg_bound()) throw Error(ErrorCode::InvalidArgument, "cannot extend a truncated series");
  TruncatedSeries t;
  t.rows_.assign(rows_.begin(), rows_.begin() + ydeg_bound + 1);
  return t;
}

TruncatedSeries TruncatedSeries::from_poly(const poly::SparsePoly& p, int ydeg_bound) {
  TruncatedSeries s(ydeg_bound);
  s.rows_[0] = UPoly{};
  for (const auto& [mono, c] : p.terms())
    if (mono.m <= ydeg_bound) s.rows_[static_cast<std::size_t>(mono.m)] += UPoly::monomial(c, mono.n);
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int bound = std::min(a.ydeg_bound(), b.ydeg_bound());
  TruncatedSeries r(bound);
  r.rows_[0] = UPoly{};
  for (int i = 0; i <= bound; ++i) {
    const UPoly& ai = a.rows_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; i + j <= bound; ++j) {
      const UPoly& bj = b.rows_[static_cast<std::size_t>(j)];
      if (!bj.is_zero()) r.rows_[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return r;
}

TruncatedSeries series_expand(const BivariateRational& w, int ydeg_bound) {
  if (ydeg_bound < 1) throw Error(ErrorCode::InvalidArgument, "truncation bound must be at least 1");
  if (w.is_degenerate()) throw Error(ErrorCode::DegenerateInput, "W = 1 has no monomial with positive Y-degree");
  const TruncatedSeries one(ydeg_bound);
  TruncatedSeries inv_q = one;
  if (!w.den().is_one()) {
    const TruncatedSeries gap = TruncatedSeries::from_poly(poly::SparsePoly::constant(1) - w.den(), ydeg_bound);
    TruncatedSeries power = one;
    // (1-Q)^k is divisible by Y^k, so k <= M suffices.
    for (int k = 1; k <= ydeg_bound; ++k) {
      power = power * gap;
      if (power.support().empty() && power.row(0).is_zero()) break;
      for (int m = 0; m <= ydeg_bound; ++m) inv_q.row(m) += power.row(m);
    }
  }
  return TruncatedSeries::from_poly(w.num(), ydeg_bound) * inv_q;
}

void series_mul_binomial_power_inplace(TruncatedSeries& s, int n, int m, const Int& e) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "binomial factor needs positive Y-degree");
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  if (e == 0) return;
  const int bound = s.ydeg_bound();
  const int kmax = bound / m;
  if (kmax == 0) return;
  const std::vector<Int> b = binomial_series(e, kmax);
  // Descending rows: row r only reads rows below r, which are still unmodified.
  for (int r = bound; r >= m; --r) {
    UPoly add;
    for (int k = 1; k * m <= r; ++k) {
      const UPoly& src = s.row(r - k * m);
      if (src.is_zero()) continue;
      add += shifted(src, k * n) * b[static_cast<std::size_t>(k)];
    }
    if (!add.is_zero()) s.row(r) += add;
  }
}

TruncatedSeries series_mul_binomial_power(const TruncatedSeries& s, int n, int m, const Int& e) {
  TruncatedSeries r = s;
  series_mul_binomial_power_inplace(r, n, m, e);
  return r;
}

Slope slope_max(const BivariateRational& w) {
  Slope best(0, 1);
  bool any = false;
  for (const auto* p : {&w.num(), &w.den()}) {
    for (const auto& [mono, c] : p->terms()) {
      if (mono.m == 0) continue;
      const Slope s(mono.n, mono.m);
      if (!any || s > best) best = s;
      any = true;
    }
  }
  return best;
}

}  // namespace eh
