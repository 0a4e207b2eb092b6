#include "singular_lrt/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "singular_lrt/geometry.hpp"
#include "singular_lrt/quadrature.hpp"

namespace slrt {

namespace {

constexpr int kSignScanPoints = 512;
constexpr QuadratureOptions kPieceOptions{1e-12, 1e-13, 4000};

}  // namespace

double total_variation(const DensitySpec& a, const DensitySpec& b) {
  validate(a);
  validate(b);
  const double cap = std::max(root_support_cap(a), root_support_cap(b));
  auto diff = [&](double r) { return root_density(r, a) - root_density(r, b); };

  // |f - g| has kinks where the densities cross; integrate between
  // crossings so each piece is smooth.
  std::vector<double> cuts{0.0};
  double prev_r = 0.0;
  double prev_d = diff(0.0);
  for (int k = 1; k <= kSignScanPoints; ++k) {
    const double r = cap * k / kSignScanPoints;
    const double d = diff(r);
    if ((prev_d < 0.0 && d > 0.0) || (prev_d > 0.0 && d < 0.0)) {
      double lo = prev_r;
      double hi = r;
      const bool lo_negative = prev_d < 0.0;
      for (int iter = 0; iter < 80 && hi - lo > 1e-15; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if ((diff(mid) < 0.0) == lo_negative) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      cuts.push_back(0.5 * (lo + hi));
    }
    prev_r = r;
    prev_d = d;
  }
  cuts.push_back(cap);

  double l1 = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    l1 += integrate([&](double r) { return std::abs(diff(r)); }, cuts[i], cuts[i + 1],
                    kPieceOptions)
              .value;
  }
  return std::clamp(0.5 * l1, 0.0, 1.0);
}

DensitySpec threshold_density(ThresholdModel model, double mu0) {
  if (model == ThresholdModel::T1) return T1Approx{mu0};
  return T3Approx{mu0, min_alpha0()};
}

double max_attainable_epsilon(ThresholdModel model) {
  return total_variation(threshold_density(model, 0.0), ChiSq{1});
}

double mu_threshold(double epsilon, ThresholdModel model) {
  auto distance = [model](double mu) {
    return total_variation(threshold_density(model, mu), ChiSq{1});
  };

  const double at_zero = distance(0.0);
  if (!(epsilon > 0.0 && epsilon < at_zero)) {
    std::ostringstream msg;
    msg << "epsilon must lie in the attainable interval (0, " << at_zero << ")";
    throw std::domain_error(msg.str());
  }

  double hi = 1.0;
  while (distance(hi) > epsilon) {
    hi *= 2.0;
    if (hi > 1e3) throw std::domain_error("epsilon too small to bracket mu threshold");
  }

  // Scan a grid for the first downward crossing of epsilon. When the
  // distance is monotone in mu (checked, not assumed, for T3) this is the
  // unique root; otherwise it is the smallest mu at which the distance
  // falls to epsilon.
  constexpr int kGrid = 32;
  double lo = 0.0;
  for (int k = 1; k <= kGrid; ++k) {
    const double mu = hi * k / kGrid;
    const double value = distance(mu);
    if (value <= epsilon) {
      hi = mu;
      break;
    }
    lo = mu;
  }

  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 100 && hi - lo > 1e-12; ++iter) {
    mid = 0.5 * (lo + hi);
    const double value = distance(mid);
    if (std::abs(value - epsilon) <= 1e-10) break;
    if (value > epsilon) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

std::vector<ThresholdRow> threshold_table(ThresholdModel model,
                                          std::span<const double> epsilons,
                                          std::span<const std::int64_t> ns) {
  if (epsilons.empty() || ns.empty()) {
    throw std::domain_error("threshold table needs at least one epsilon and one n");
  }
  for (auto n : ns) {
    if (n < 1) throw std::domain_error("sample sizes must be at least 1");
  }

  std::vector<ThresholdRow> rows;
  rows.reserve(epsilons.size());
  for (double eps : epsilons) {
    ThresholdRow row;
    row.epsilon = eps;
    row.mu_tilde = mu_threshold(eps, model);
    for (auto n : ns) {
      const double phi = phi_from_mu(row.mu_tilde, n);
      row.entries.push_back({n, phi, -std::log(phi)});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace slrt
