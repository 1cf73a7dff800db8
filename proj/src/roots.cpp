#include "euler_horizon/roots.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>

#include "euler_horizon/error.hpp"

namespace eh {

using cd = std::complex<double>;

namespace {

// Radii from the upper convex hull of (i, log|a_i|).
std::vector<cd> initial_points(const std::vector<cd>& a) {
  const int d = static_cast<int>(a.size()) - 1;
  std::vector<std::pair<int, double>> pts;
  for (int i = 0; i <= d; ++i)
    if (std::abs(a[static_cast<std::size_t>(i)]) > 0) pts.emplace_back(i, std::log(std::abs(a[static_cast<std::size_t>(i)])));
  std::vector<std::pair<int, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& q = hull.back();
      const double cross = (q.first - o.first) * (p.second - o.second) - (q.second - o.second) * (p.first - o.first);
      if (cross >= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  std::vector<cd> z;
  z.reserve(static_cast<std::size_t>(d));
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int i = hull[h].first;
    const int j = hull[h + 1].first;
    const double r = std::exp((hull[h].second - hull[h + 1].second) / (j - i));
    // Offset per edge so circles of equal radius do not share points.
    const double offset = 0.4 + 2 * std::numbers::pi * static_cast<double>(h) / static_cast<double>(hull.size());
    for (int t = 0; t < j - i; ++t) z.push_back(std::polar(r, 2 * std::numbers::pi * t / (j - i) + offset));
  }
  return z;
}

}  // namespace

std::vector<cd> companion_roots(const std::vector<cd>& a) {
  const int d = static_cast<int>(a.size()) - 1;
  if (d < 1) return {};
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -a[static_cast<std::size_t>(i)] / a.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::RootFindingDiverged, "companion eigenvalue solver failed");
  std::vector<cd> out(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

std::vector<cd> polynomial_roots(const std::vector<cd>& a, double tol, int max_iter) {
  if (a.empty() || std::abs(a.back()) == 0) throw Error(ErrorCode::InvalidArgument, "leading coefficient is zero");
  // Roots at the origin.
  std::size_t low = 0;
  while (std::abs(a[low]) == 0) ++low;
  if (low > 0) {
    std::vector<cd> out(low, cd(0));
    const auto rest = polynomial_roots(std::vector<cd>(a.begin() + static_cast<std::ptrdiff_t>(low), a.end()), tol, max_iter);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  const int d = static_cast<int>(a.size()) - 1;
  if (d == 0) return {};
  if (d == 1) return {-a[0] / a[1]};

  std::vector<cd> z = initial_points(a);
  bool converged = false;
  for (int iter = 0; iter < max_iter && !converged; ++iter) {
    converged = true;
    for (int k = 0; k < d; ++k) {
      cd& zk = z[static_cast<std::size_t>(k)];
      cd p = a.back();
      cd dp = 0;
      double scale = std::abs(a.back());
      const double rz = std::abs(zk);
      for (int i = d - 1; i >= 0; --i) {
        dp = dp * zk + p;
        p = p * zk + a[static_cast<std::size_t>(i)];
        scale = scale * rz + std::abs(a[static_cast<std::size_t>(i)]);
      }
      // Residual at rounding level: the root cannot be resolved further.
      if (std::abs(p) <= 4 * std::numeric_limits<double>::epsilon() * scale) continue;
      const cd w = p / dp;
      cd s = 0;
      for (int j = 0; j < d; ++j)
        if (j != k) s += 1.0 / (zk - z[static_cast<std::size_t>(j)]);
      const cd step = w / (1.0 - w * s);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag()) || !std::isfinite(std::abs(s))) {
        converged = false;
        iter = max_iter;
        break;
      }
      zk -= step;
      if (std::abs(step) > tol * std::abs(zk)) converged = false;
    }
  }
  if (converged) return z;
  std::vector<cd> fallback = companion_roots(a);
  for (const cd& r : fallback)
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
      throw Error(ErrorCode::RootFindingDiverged, "root finder did not converge");
  return fallback;
}

}  // namespace eh
