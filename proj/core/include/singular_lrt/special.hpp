#pragma once

#include <span>

namespace slrt {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::span<const double> nodes;
  std::span<const double> weights;
};

/// 64-point rule, computed once by Newton iteration on P_64.
GaussLegendreRule gauss_legendre_64();

/// M0(x) = -(2/pi) * integral_0^{pi/2} exp(-x cos(theta)) dtheta, x >= 0.
/// Evaluated with the 64-point Gauss-Legendre rule; for large x the
/// boundary layer near theta = pi/2 gets its own graded panels.
double struve_m0(double x);

}  // namespace slrt
