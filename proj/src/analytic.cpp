#include "euler_horizon/analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "euler_horizon/error.hpp"
#include "euler_horizon/primes.hpp"

namespace eh {

namespace {

constexpr double kPi = std::numbers::pi;

// B_2k / (2k)! for k = 1..20.
const std::array<double, 20>& bernoulli_over_factorial() {
  static const std::array<double, 20> table = [] {
    const std::array<double, 20> b = {
        1.0 / 6,
        -1.0 / 30,
        1.0 / 42,
        -1.0 / 30,
        5.0 / 66,
        -691.0 / 2730,
        7.0 / 6,
        -3617.0 / 510,
        43867.0 / 798,
        -174611.0 / 330,
        854513.0 / 138,
        -236364091.0 / 2730,
        8553103.0 / 6,
        -23749461029.0 / 870,
        8615841276005.0 / 14322,
        -7709321041217.0 / 510,
        2577687858367.0 / 6,
        -26315271553053477373.0 / 1919190,
        2929993913841559.0 / 6,
        -261082718496449122051.0 / 13530,
    };
    std::array<double, 20> out{};
    for (int k = 1; k <= 20; ++k) out[static_cast<std::size_t>(k - 1)] = b[static_cast<std::size_t>(k - 1)] / std::tgamma(2.0 * k + 1);
    return out;
  }();
  return table;
}

Complex log1m(Complex x) {
  // log(1 - x) with a short series for small |x|.
  if (std::abs(x) < 1e-4) return -x * (1.0 + x * (0.5 + x / 3.0));
  return std::log(1.0 - x);
}

struct MonomialTerm {
  int n;
  int m;
  double c;
};

std::vector<MonomialTerm> monomials(const poly::SparsePoly& p) {
  std::vector<MonomialTerm> out;
  for (const auto& [mono, c] : p.terms()) out.push_back({mono.n, mono.m, c.get_d()});
  return out;
}

Complex eval_at(const std::vector<MonomialTerm>& terms, double lnp, Complex s, double* magnitude) {
  Complex v = 0;
  double mag = 0;
  for (const auto& t : terms) {
    const Complex term = t.c * std::exp((static_cast<double>(t.n) - static_cast<double>(t.m) * s) * lnp);
    v += term;
    mag += std::abs(term);
  }
  if (magnitude) *magnitude = mag;
  return v;
}

}  // namespace

Complex zeta(Complex s) {
  if (std::abs(s - 1.0) < 1e-14) throw Error(ErrorCode::PoleAtOne, "zeta has a pole at s = 1");
  const int n_terms = 20 + static_cast<int>(std::ceil(std::abs(s)));
  const double big_n = n_terms;
  Complex sum = 0;
  for (int k = n_terms - 1; k >= 1; --k) sum += std::exp(-s * std::log(static_cast<double>(k)));
  const Complex n_pow = std::exp(-s * std::log(big_n));  // N^-s
  sum += n_pow * big_n / (s - 1.0) + 0.5 * n_pow;
  const auto& b = bernoulli_over_factorial();
  Complex rising = s;               // s (s+1) ... (s+2k-2)
  Complex power = n_pow / big_n;    // N^(-s-2k+1)
  for (int k = 1; k <= 20; ++k) {
    const Complex term = b[static_cast<std::size_t>(k - 1)] * rising * power;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    rising *= (s + (2.0 * k - 1)) * (s + 2.0 * k);
    power /= big_n * big_n;
  }
  return sum;
}

EulerValue euler_eval(const BivariateRational& w, Slope alpha, Complex s, std::int64_t prime_bound) {
  const double sigma = s.real();
  if (sigma <= alpha.to_double())
    throw Error(ErrorCode::ConvergenceDomain, "Euler product needs Re s > alpha = " + alpha.to_string());
  if (prime_bound < 2) throw Error(ErrorCode::InvalidArgument, "prime bound below 2");
  EulerValue out;
  out.value = 1;
  if (w.is_degenerate()) return out;

  const auto num = monomials(w.num());
  const auto den = monomials(w.den());
  for (std::int64_t p : primes_up_to(prime_bound)) {
    const double lnp = std::log(static_cast<double>(p));
    double mag = 0;
    const Complex pv = eval_at(num, lnp, s, &mag);
    if (std::abs(pv) <= 1e-14 * mag) {
      out.value = 0;
      out.local_zero = true;
      out.zero_prime = p;
      return out;
    }
    out.value *= pv / eval_at(den, lnp, s, nullptr);
  }

  // |W_p - 1| <= A_p / (1 - B_p) with A_p from P - Q and B_p from Q - 1; both
  // decrease in p once m*sigma > n + 1 for every monomial.
  const double big_b = static_cast<double>(prime_bound);
  const double lnb = std::log(big_b);
  const poly::SparsePoly diff = w.num() - w.den();
  double b_at_bound = 0;
  bool bounded = true;
  for (const auto& [mono, c] : w.den().terms()) {
    if (mono.m == 0) continue;
    if (mono.m * sigma <= mono.n + 1) bounded = false;
    b_at_bound += std::abs(c.get_d()) * std::pow(big_b, mono.n - mono.m * sigma);
  }
  double sum = 0;
  double a_at_bound = 0;
  for (const auto& [mono, c] : diff.terms()) {
    const double eps = mono.m * sigma - mono.n - 1;
    if (eps <= 0) {
      bounded = false;
      break;
    }
    const double mag = std::abs(c.get_d());
    a_at_bound += mag * std::pow(big_b, mono.n - mono.m * sigma);
    sum += mag * 1.26 * (1 + eps) * std::pow(big_b, -eps) / (eps * lnb);
  }
  if (!bounded || b_at_bound >= 1) {
    out.tail_bound = std::numeric_limits<double>::infinity();
    return out;
  }
  const double e_max = a_at_bound / (1 - b_at_bound);
  if (e_max >= 1) {
    out.tail_bound = std::numeric_limits<double>::infinity();
    return out;
  }
  out.tail_bound = std::expm1((sum / (1 - b_at_bound)) / (1 - e_max));
  return out;
}

ZetaFactorForm make_factor_form(const CycloExpansion& e, Slope beta) {
  ZetaFactorForm form;
  form.ydeg_bound = e.ydeg_bound;
  for (const auto& [mono, c] : e.c) {
    if (c == 0) continue;
    if (!c.fits_slong_p()) throw Error(ErrorCode::BoundOverflow, "expansion exponent exceeds machine range");
    form.factors.push_back({mono.m, mono.n, -c.get_si()});
  }
  const std::int64_t next = static_cast<std::int64_t>(e.ydeg_bound) + 1;
  const std::int64_t top = static_cast<std::int64_t>((static_cast<__int128>(beta.num()) * next) / beta.den());
  form.remainder_start = Slope(top + 1, next);
  return form;
}

Complex factored_eval(const ZetaFactorForm& form, const BivariateRational& w, Complex s, std::int64_t prime_bound) {
  if (s.real() <= form.remainder_start.to_double())
    throw Error(ErrorCode::DomainError,
                "remainder product needs Re s > " + form.remainder_start.to_string());
  Complex log_value = 0;
  for (const ZetaFactor& f : form.factors) {
    const Complex arg = static_cast<double>(f.m) * s - static_cast<double>(f.n);
    if (std::abs(arg - 1.0) < 1e-12)
      throw Error(ErrorCode::FactorPole, "zeta(" + std::to_string(f.m) + "s-" + std::to_string(f.n) + ") has its pole here");
    log_value += static_cast<double>(f.exponent) * std::log(zeta(arg));
  }
  const auto num = monomials(w.num());
  const auto den = monomials(w.den());
  for (std::int64_t p : primes_up_to(prime_bound)) {
    const double lnp = std::log(static_cast<double>(p));
    Complex lr = std::log(eval_at(num, lnp, s, nullptr) / eval_at(den, lnp, s, nullptr));
    for (const ZetaFactor& f : form.factors) {
      const double size = std::exp((f.n - f.m * s.real()) * lnp);
      if (std::abs(static_cast<double>(f.exponent)) * size < 1e-18) continue;
      const Complex x = std::exp((static_cast<double>(f.n) - static_cast<double>(f.m) * s) * lnp);
      lr += static_cast<double>(f.exponent) * log1m(x);
    }
    log_value += lr;
  }
  return std::exp(log_value);
}

std::vector<double> load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingZerosFile, "cannot read zeros file '" + path + "'");
  std::vector<double> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double v = 0;
    if (!(ss >> v)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw Error(ErrorCode::InvalidArgument, "bad ordinate on line " + std::to_string(lineno) + " of " + path);
    }
    if (!(v > 0)) throw Error(ErrorCode::InvalidArgument, "ordinates must be positive (line " + std::to_string(lineno) + ")");
    out.push_back(v);
  }
  if (out.size() < 100) throw Error(ErrorCode::InvalidArgument, "zeros file needs at least 100 ordinates");
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(AtlasKind k) {
  switch (k) {
    case AtlasKind::Pole: return "pole";
    case AtlasKind::Zero: return "zero";
    case AtlasKind::Accumulation: return "accumulation";
  }
  return "pole";
}

std::string to_string(AtlasSource s) {
  switch (s) {
    case AtlasSource::ZetaPole: return "zeta-pole";
    case AtlasSource::ZetaNontrivialZero: return "zeta-nontrivial-zero";
    case AtlasSource::ZetaTrivialZero: return "zeta-trivial-zero";
    case AtlasSource::LocalFactor: return "local-factor";
    case AtlasSource::Frontier: return "frontier";
  }
  return "frontier";
}

namespace {

struct RawEntry {
  Complex s;
  long order;  // zero order; negative for poles
  AtlasSource source;
  std::int64_t prime;
  bool conditional;
};

}  // namespace

SingularityAtlas build_atlas(const AtlasInput& in, double T, const std::vector<double>& zeros) {
  if (T < 0) throw Error(ErrorCode::InvalidArgument, "T must be non-negative");
  SingularityAtlas atlas;
  const double beta = in.beta.to_double();
  atlas.sigma_min = beta;
  atlas.T = T;
  const Slope b = in.beta;
  std::vector<RawEntry> raw;

  for (const ZetaFactor& f : in.factors) {
    if (f.exponent == 0 || f.m < 1) continue;
    // Exact comparisons against beta = k/l.
    const auto right_of_beta = [&](std::int64_t num2, std::int64_t den2) {
      return Slope(num2, den2) > b;
    };
    if (right_of_beta(f.n + 1, f.m))
      raw.push_back({Complex(static_cast<double>(f.n + 1) / f.m, 0), -f.exponent, AtlasSource::ZetaPole, 0, false});
    if (in.frontier_only) continue;
    for (std::int64_t k = 1; right_of_beta(f.n - 2 * k, f.m); ++k)
      raw.push_back({Complex(static_cast<double>(f.n - 2 * k) / f.m, 0), f.exponent, AtlasSource::ZetaTrivialZero, 0, false});
    if (!right_of_beta(2 * f.n + 1, 2 * f.m) || T <= 0) continue;
    atlas.c1 += std::abs(static_cast<double>(f.exponent)) * f.m / kPi;
    atlas.c2 += std::abs(static_cast<double>(f.exponent)) * (f.m / kPi) * (std::log(f.m / (2 * kPi)) - 1);
    if (zeros.empty())
      throw Error(ErrorCode::MissingZerosFile, "nontrivial zero ordinates are required for this atlas");
    const double limit = f.m * T;
    if (limit > zeros.back()) {
      std::ostringstream w;
      w << "zeros table ends at " << zeros.back() << " but ordinates up to " << limit << " are needed";
      atlas.warnings.push_back(w.str());
    }
    const double re = (f.n + 0.5) / f.m;
    for (double g : zeros) {
      if (g >= limit) break;
      raw.push_back({Complex(re, g / f.m), f.exponent, AtlasSource::ZetaNontrivialZero, 0, true});
      raw.push_back({Complex(re, -g / f.m), f.exponent, AtlasSource::ZetaNontrivialZero, 0, true});
    }
  }

  if (!in.frontier_only) {
    for (const auto& lat : in.lattices) {
      const double lnp = std::log(static_cast<double>(lat.p));
      const double re = -std::log(std::abs(lat.y)) / lnp;
      if (!(re > beta)) continue;
      atlas.c2 += lat.multiplicity * lnp / kPi;
      const double arg = std::arg(lat.y);
      // Im s = -(arg y + 2 pi k) / ln p; real points are kept even for T = 0.
      const auto k_lo = static_cast<std::int64_t>(std::floor((-T * lnp - arg) / (2 * kPi))) - 1;
      const auto k_hi = static_cast<std::int64_t>(std::ceil((T * lnp - arg) / (2 * kPi))) + 1;
      for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        double im = -(arg + 2 * kPi * static_cast<double>(k)) / lnp;
        if (std::abs(im) < 1e-15) im = 0;
        if (std::abs(im) < T || im == 0)
          raw.push_back({Complex(re, im), lat.multiplicity, AtlasSource::LocalFactor, lat.p, false});
      }
    }
  }

  std::sort(raw.begin(), raw.end(), [](const RawEntry& x, const RawEntry& y) {
    if (x.s.imag() != y.s.imag()) return x.s.imag() < y.s.imag();
    return x.s.real() < y.s.real();
  });
  std::vector<bool> used(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    RawEntry acc = raw[i];
    bool merged = false;
    for (std::size_t j = i + 1; j < raw.size() && raw[j].s.imag() - acc.s.imag() < 1e-9; ++j) {
      if (used[j] || std::abs(raw[j].s - acc.s) >= 1e-9) continue;
      used[j] = true;
      if (raw[j].source != acc.source || raw[j].prime != acc.prime) merged = true;
      acc.order += raw[j].order;
      acc.conditional = acc.conditional || raw[j].conditional;
    }
    if (acc.order == 0) {
      std::ostringstream w;
      w << "singularities cancel at s = " << acc.s.real() << (acc.s.imag() < 0 ? "-" : "+") << std::abs(acc.s.imag()) << "i";
      atlas.warnings.push_back(w.str());
      continue;
    }
    AtlasEntry e;
    e.s = acc.s;
    e.kind = acc.order > 0 ? AtlasKind::Zero : AtlasKind::Pole;
    e.multiplicity = static_cast<int>(std::abs(acc.order));
    e.source = acc.source;
    e.prime = acc.prime;
    e.conditional = acc.conditional;
    e.merged = merged;
    atlas.entries.push_back(e);
    atlas.n_pm += std::abs(acc.order);
  }
  if (in.frontier_only) {
    atlas.accumulation = true;
    AtlasEntry marker;
    marker.s = Complex(beta, 0);
    marker.kind = AtlasKind::Accumulation;
    marker.multiplicity = 0;
    marker.source = AtlasSource::Frontier;
    atlas.entries.push_back(marker);
    atlas.warnings.push_back("singularities accumulate at Re s = " + in.beta.to_string() +
                             "; only entries from the computed factors are listed");
  }
  return atlas;
}

}  // namespace eh
