#pragma once

// Test-only reference computations. Each one reaches its answer by a route
// that does not share code with the library path it checks: grid search
// instead of the closed-form MLE, trapezoid sums instead of Gauss rules,
// discretized half-lines instead of projection formulas.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

namespace oracle {

/// Max over phi = k / grid, k = 1..grid, of the T1 log-likelihood for
/// concordant slot `slot` (0-based), using 0 log 0 = 0.
inline double grid_search_t1_loglik(const std::array<std::int64_t, 3>& counts, int slot,
                                    int grid = 1'000'000) {
  double best = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= grid; ++k) {
    const double phi = static_cast<double>(k) / grid;
    double ll = 0.0;
    for (int i = 0; i < 3; ++i) {
      if (counts[i] == 0) continue;
      const double p = i == slot ? 1.0 - 2.0 * phi / 3.0 : phi / 3.0;
      ll += static_cast<double>(counts[i]) * std::log(p);
    }
    best = std::max(best, ll);
  }
  return best;
}

/// -(2/pi) * integral_0^{pi/2} exp(-x cos t) dt by the composite trapezoid
/// rule.
inline double struve_m0_trapezoid(double x, int panels = 1'000'000) {
  const double end = 0.5 * std::numbers::pi;
  const double h = end / panels;
  double sum = 0.5 * (std::exp(-x) + 1.0);
  for (int k = 1; k < panels; ++k) sum += std::exp(-x * std::cos(k * h));
  return -sum * h / end;
}

/// Squared distance from (z, zbar) to the half-line from the origin in
/// direction (dx, dy), by scanning `points` points over [0, length] and
/// then refining around the best grid point by ternary search.
inline double half_line_distance_sq(double z, double zbar, double dx, double dy,
                                    int points = 100'000, double length = 1e3) {
  auto dist = [&](double t) {
    const double ex = z - t * dx;
    const double ey = zbar - t * dy;
    return ex * ex + ey * ey;
  };
  const double h = length / (points - 1);
  int best = 0;
  double best_d = dist(0.0);
  for (int k = 1; k < points; ++k) {
    const double d = dist(k * h);
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  double lo = std::max(0.0, (best - 1) * h);
  double hi = std::min(length, (best + 1) * h);
  for (int iter = 0; iter < 200; ++iter) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (dist(m1) < dist(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return std::min(best_d, dist(0.5 * (lo + hi)));
}

inline double t1_null_distance_sq(double z, double zbar) {
  return half_line_distance_sq(z, zbar, 0.0, 1.0);
}

inline double t3_null_distance_sq(double z, double zbar, double alpha0) {
  const double c = std::cos(alpha0);
  const double s = std::sin(alpha0);
  return std::min({half_line_distance_sq(z, zbar, 0.0, 1.0),
                   half_line_distance_sq(z, zbar, c, -s),
                   half_line_distance_sq(z, zbar, -c, -s)});
}

/// Upper tail of chi^2_1 as 1 - 2 * integral_0^{sqrt(x)} phi(u) du with
/// composite Simpson.
inline double chisq1_upper_tail_simpson(double x, int panels = 200'000) {
  const double b = std::sqrt(x);
  const double h = b / panels;
  auto phi = [](double u) { return std::exp(-0.5 * u * u) / std::sqrt(2.0 * std::numbers::pi); };
  double sum = phi(0.0) + phi(b);
  for (int k = 1; k < panels; ++k) sum += (k % 2 ? 4.0 : 2.0) * phi(k * h);
  return 1.0 - 2.0 * sum * h / 3.0;
}

/// Trapezoid integral of f on [a, b].
template <typename F>
double trapezoid(F&& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double sum = 0.5 * (f(a) + f(b));
  for (int k = 1; k < panels; ++k) sum += f(a + k * h);
  return sum * h;
}

}  // namespace oracle
