#pragma once

// Total variation distance from the finite-sample approximations to
// chi^2_1, and the thresholds mu~ beyond which chi^2_1 is within a given
// distance.

#include <cstdint>
#include <span>
#include <vector>

#include "singular_lrt/densities.hpp"

namespace slrt {

enum class ThresholdModel { T1, T3 };

/// delta(F, G) = (1/2) integral |f - g|.
double total_variation(const DensitySpec& a, const DensitySpec& b);

/// The approximate law of `model` at mu0; T3 uses alpha0 = arctan(1/3).
DensitySpec threshold_density(ThresholdModel model, double mu0);

/// delta at mu0 = 0: thresholds exist only for epsilon below this value.
double max_attainable_epsilon(ThresholdModel model);

/// mu~ with delta(F_{mu~}, chi^2_1) = epsilon.
double mu_threshold(double epsilon, ThresholdModel model);

struct ThresholdCell {
  std::int64_t n = 0;
  double phi_tilde = 0.0;
  double t_tilde = 0.0;
};

struct ThresholdRow {
  double epsilon = 0.0;
  double mu_tilde = 0.0;
  std::vector<ThresholdCell> entries;
};

std::vector<ThresholdRow> threshold_table(ThresholdModel model,
                                          std::span<const double> epsilons,
                                          std::span<const std::int64_t> ns);

}  // namespace slrt
