#include "singular_lrt/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace slrt {

namespace {

constexpr int kOrder = 64;

struct Rule64 {
  std::array<double, kOrder> nodes{};
  std::array<double, kOrder> weights{};

  Rule64() {
    // Newton iteration on P_n from the Chebyshev-like initial guesses; the
    // rule is symmetric so only half the roots are solved for.
    for (int i = 0; i < kOrder / 2; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= kOrder; ++k) {
          const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = pk;
        }
        dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      nodes[i] = -x;
      nodes[kOrder - 1 - i] = x;
      weights[i] = w;
      weights[kOrder - 1 - i] = w;
    }
  }
};

const Rule64& rule64() {
  static const Rule64 rule;
  return rule;
}

template <typename F>
double gauss_legendre(F&& f, double a, double b) {
  const auto& r = rule64();
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < kOrder; ++i) sum += r.weights[i] * f(centre + half * r.nodes[i]);
  return sum * half;
}

}  // namespace

GaussLegendreRule gauss_legendre_64() {
  const auto& r = rule64();
  return {r.nodes, r.weights};
}

double struve_m0(double x) {
  if (!(x >= 0.0)) throw std::domain_error("struve_m0 requires x >= 0");
  if (std::isinf(x)) return 0.0;

  // With s = pi/2 - theta the integrand is exp(-x sin s), which has a
  // boundary layer of width ~1/x at s = 0.
  auto integrand = [x](double s) { return std::exp(-x * std::sin(s)); };
  const double end = 0.5 * std::numbers::pi;
  double integral = 0.0;
  if (x <= 8.0) {
    integral = gauss_legendre(integrand, 0.0, end);
  } else {
    double lo = 0.0;
    double hi = 2.0 / x;
    while (hi < end) {
      integral += gauss_legendre(integrand, lo, hi);
      lo = hi;
      hi *= 4.0;
    }
    integral += gauss_legendre(integrand, lo, end);
  }
  return -integral / end;
}

}  // namespace slrt
