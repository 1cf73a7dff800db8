#pragma once

#include <complex>
#include <vector>

namespace eh {

// All complex roots of sum_i a[i] z^i (a.back() != 0). Aberth-Ehrlich
// iteration started from the Newton polygon of log|a_i|; falls back to the
// companion matrix when the iteration does not settle. Throws
// RootFindingDiverged if both fail.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& a,
                                                   double tol = 1e-12, int max_iter = 200);

// Used by tests to exercise the fallback directly.
std::vector<std::complex<double>> companion_roots(const std::vector<std::complex<double>>& a);

}  // namespace eh
