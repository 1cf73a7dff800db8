#include "euler_horizon/cyclo.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "euler_horizon/error.hpp"

namespace eh {

using poly::Int;
using poly::Monomial;
using poly::SparsePoly;
using poly::UPoly;

int moebius(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "moebius of non-positive integer");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

UPoly one_minus_power(int e) {
  UPoly p = UPoly::constant(1);
  return p - UPoly::monomial(1, e);
}

// Divisors d with their Moebius weight mu(n/d).
std::vector<std::pair<int, int>> weighted_divisors(int n) {
  std::vector<std::pair<int, int>> out;
  for (int e = 1; e <= n; ++e)
    if (n % e == 0) {
      const int mu = moebius(n / e);
      if (mu != 0) out.emplace_back(e, mu);
    }
  return out;
}

// Records Phi_d(M)^mult, with M = X^a Y^b, as binomial exponents.
void add_cyclotomic(BinomialFactors& f, int d, int a, int b, const Int& mult) {
  if (d == 1) {
    f[{a, b}] += mult;
    return;
  }
  for (auto [e, mu] : weighted_divisors(d)) f[{a * e, b * e}] += mult * mu;
}

void drop_zeros(BinomialFactors& f) {
  std::erase_if(f, [](const auto& kv) { return kv.second == 0; });
}

SparsePoly substitute(const UPoly& u, int a, int b) {
  SparsePoly s;
  for (int i = 0; i <= u.degree(); ++i) s.add_term({a * i, b * i}, u.coeff(i));
  return s;
}

// Primitive edge directions (a, b) of the Newton polygon, with b > 0, and the
// lattice length of each edge.
std::map<std::pair<int, int>, int> edge_directions(const SparsePoly& p, bool& horizontal) {
  std::vector<std::pair<long, long>> pts;
  for (const auto& [mono, c] : p.terms()) pts.emplace_back(mono.n, mono.m);
  std::sort(pts.begin(), pts.end());
  auto cross = [](auto o, auto a, auto b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long, long>> hull;
  if (pts.size() >= 2) {
    std::vector<std::pair<long, long>> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& q : pts) {
      while (k >= 2 && cross(h[k - 2], h[k - 1], q) <= 0) --k;
      h[k++] = q;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
      while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
      h[k++] = pts[i - 1];
    }
    h.resize(k - 1);
    hull = std::move(h);
  } else {
    hull = pts;
  }
  std::map<std::pair<int, int>, int> dirs;
  horizontal = false;
  if (hull.size() < 2) return dirs;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& u = hull[i];
    const auto& v = hull[(i + 1) % hull.size()];
    long dx = v.first - u.first;
    long dy = v.second - u.second;
    if (hull.size() == 2 && i == 1) break;
    const long g = std::gcd(dx, dy);
    dx /= g;
    dy /= g;
    if (dy < 0 || (dy == 0 && dx < 0)) {
      dx = -dx;
      dy = -dy;
    }
    if (dy == 0) {
      horizontal = true;
      continue;
    }
    if (dx < 0) continue;
    auto& len = dirs[{static_cast<int>(dx), static_cast<int>(dy)}];
    len = std::max(len, static_cast<int>(std::abs(g)));
  }
  return dirs;
}

// Strips factors Phi_d(X^a Y^b) from p; returns the remainder.
SparsePoly strip_binomials(SparsePoly p, BinomialFactors& f, int sign) {
  bool progress = true;
  while (progress && !p.is_constant()) {
    progress = false;
    bool horizontal = false;
    const auto dirs = edge_directions(p, horizontal);
    for (const auto& [dir, len] : dirs) {
      const auto [a, b] = dir;
      for (int d = 1; euler_phi(d) <= len; ++d) {
        const SparsePoly cand = substitute(cyclotomic_poly(d), a, b);
        Int mult = 0;
        for (;;) {
          auto q = poly::divide_exact(p, cand);
          if (!q) break;
          p = std::move(*q);
          ++mult;
        }
        if (mult != 0) {
          add_cyclotomic(f, d, a, b, mult * sign);
          progress = true;
        }
      }
      if (progress) break;
    }
  }
  return p;
}

}  // namespace

UPoly cyclotomic_poly(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  if (d == 1) return one_minus_power(1);
  UPoly num = UPoly::constant(1);
  UPoly den = UPoly::constant(1);
  for (auto [e, mu] : weighted_divisors(d)) (mu > 0 ? num : den) = (mu > 0 ? num : den) * one_minus_power(e);
  return *poly::divide_exact(num, den);
}

BivariateRational expand_factors(const BinomialFactors& factors) {
  SparsePoly num = SparsePoly::constant(1);
  SparsePoly den = SparsePoly::constant(1);
  for (const auto& [mono, e] : factors) {
    if (e == 0) continue;
    if (!Int(abs(e)).fits_uint_p() || abs(e) > 4096)
      throw Error(ErrorCode::BoundOverflow, "binomial exponent too large to expand");
    const SparsePoly b = SparsePoly::binomial(mono.n, mono.m);
    if (e > 0) {
      num = num * b.pow(static_cast<unsigned>(e.get_ui()));
    } else {
      const Int ne = -e;
      den = den * b.pow(static_cast<unsigned>(ne.get_ui()));
    }
  }
  return BivariateRational::normalize(num, den);
}

CycloFactorization is_cyclotomic_bivariate(const BivariateRational& w) {
  CycloFactorization out;
  out.residual_num = strip_binomials(w.num(), out.factors, +1);
  out.residual_den = strip_binomials(w.den(), out.factors, -1);
  drop_zeros(out.factors);
  out.is_cyclotomic = out.residual_num.is_one() && out.residual_den.is_one();
  if (out.is_cyclotomic && !(expand_factors(out.factors) == w))
    throw Error(ErrorCode::Internal, "cyclotomic factorization does not reproduce W");
  return out;
}

UnivariateCyclo is_cyclotomic_univariate(const UPoly& num, const UPoly& den) {
  if (num.coeff(0) != 1 || den.coeff(0) != 1)
    throw Error(ErrorCode::InvalidArgument, "ray series parts must have constant term 1");
  UnivariateCyclo out;
  bool ok = true;
  for (auto [poly_ptr, sign] : {std::pair{&num, 1}, std::pair{&den, -1}}) {
    UPoly f = *poly_ptr;
    const int deg = f.degree();
    for (int d = 1; f.degree() > 0 && d <= 2 * deg * deg + 2; ++d) {
      if (euler_phi(d) > deg) continue;
      const UPoly phi = cyclotomic_poly(d);
      Int mult = 0;
      for (;;) {
        auto q = poly::divide_exact(f, phi);
        if (!q) break;
        f = std::move(*q);
        ++mult;
      }
      if (mult != 0) add_cyclotomic(out.factors, d, 0, 1, mult * sign);
    }
    if (!f.is_one()) ok = false;
  }
  drop_zeros(out.factors);
  out.is_cyclotomic = ok;
  if (!ok) out.factors.clear();
  return out;
}

}  // namespace eh
