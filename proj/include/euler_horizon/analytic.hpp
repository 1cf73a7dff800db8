#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "euler_horizon/expansion.hpp"
#include "euler_horizon/rational.hpp"
#include "euler_horizon/slope.hpp"

namespace eh {

using Complex = std::complex<double>;

// Riemann zeta by Euler-Maclaurin summation. Throws PoleAtOne.
Complex zeta(Complex s);

struct EulerValue {
  Complex value;
  // Bound on |D(s) / partial product - 1|; infinite when no bound applies.
  double tail_bound = 0;
  // Set when some local factor vanishes; value is then 0.
  bool local_zero = false;
  std::int64_t zero_prime = 0;
};

// Partial Euler product over p <= prime_bound. Throws ConvergenceDomain if
// Re s <= alpha.
EulerValue euler_eval(const BivariateRational& w, Slope alpha, Complex s, std::int64_t prime_bound);

// D(s) = prod zeta(m s - n)^(-c) times the Euler product of the remainder.
struct ZetaFactor {
  int m = 0;
  int n = 0;
  long exponent = 0;  // -c(n, m)
};

struct ZetaFactorForm {
  std::vector<ZetaFactor> factors;
  Slope remainder_start;  // the remainder converges for Re s > this
  int ydeg_bound = 0;
};

// Throws BoundOverflow if some exponent does not fit in a long.
ZetaFactorForm make_factor_form(const CycloExpansion& e, Slope beta);

// Throws DomainError (Re s <= remainder_start) or FactorPole.
Complex factored_eval(const ZetaFactorForm& form, const BivariateRational& w, Complex s, std::int64_t prime_bound);

// Ordinates of the nontrivial zeros, ascending. Throws MissingZerosFile if the
// path cannot be read, InvalidArgument with fewer than 100 entries.
std::vector<double> load_zeros(const std::string& path);

enum class AtlasKind { Pole, Zero, Accumulation };
enum class AtlasSource { ZetaPole, ZetaNontrivialZero, ZetaTrivialZero, LocalFactor, Frontier };

struct AtlasEntry {
  Complex s;
  AtlasKind kind = AtlasKind::Pole;
  int multiplicity = 0;
  AtlasSource source = AtlasSource::ZetaPole;
  std::int64_t prime = 0;  // for LocalFactor
  bool conditional = false;  // placement assumes Re rho = 1/2
  bool merged = false;       // coincides with an entry from another source
};

struct SingularityAtlas {
  double sigma_min = 0;  // beta
  double T = 0;
  std::vector<AtlasEntry> entries;  // sorted by (Im, Re)
  long n_pm = 0;
  double c1 = 0;
  double c2 = 0;
  bool accumulation = false;
  std::vector<std::string> warnings;
};

std::string to_string(AtlasKind k);
std::string to_string(AtlasSource s);

// Input to the atlas builder: the factors whose singularities are placed,
// and the local roots of exceptional primes.
struct AtlasInput {
  Slope beta;
  std::vector<ZetaFactor> factors;
  struct LocalLattice {
    std::int64_t p = 0;
    Complex y;
    int multiplicity = 1;
  };
  std::vector<LocalLattice> lattices;
  // Cases 2-4: only frontier entries, plus an accumulation marker at beta.
  bool frontier_only = false;
};

// zeros may be empty when no nontrivial images are needed; otherwise throws
// MissingZerosFile.
SingularityAtlas build_atlas(const AtlasInput& in, double T, const std::vector<double>& zeros);

}  // namespace eh
