#pragma once

// Simulation study of p-value calibration: multinomial gene-tree counts are
// drawn at a null parameter, the likelihood ratio statistic is computed for
// each replicate and converted to a p-value under a reference law.

#include <cstdint>
#include <vector>

#include "singular_lrt/coalescent.hpp"
#include "singular_lrt/densities.hpp"
#include "singular_lrt/trinomial.hpp"

namespace slrt {

enum class Reference { Approx, ChiSq1 };

/// Where the reference law's mu0 (and alpha0) come from: the generating
/// phi0, or the constrained MLE of each replicate.
enum class MuSource { TrueParam, PluginMle };

struct ExperimentConfig {
  ModelId model = ModelId::t3();
  double phi0 = 1.0;
  std::int64_t n = 1000;
  std::int64_t replicates = 1000;
  std::uint64_t seed = 1;
  Reference reference = Reference::Approx;
  MuSource mu_source = MuSource::TrueParam;
  unsigned threads = 0;  ///< 0 = resolve_thread_count()
};

struct EcdfSeries {
  std::vector<double> sorted_pvalues;

  std::size_t size() const noexcept { return sorted_pvalues.size(); }
  /// Cumulative fraction at 0-based rank i, (i + 1) / N.
  double cumfrac(std::size_t i) const noexcept {
    return static_cast<double>(i + 1) / static_cast<double>(sorted_pvalues.size());
  }
  /// Fraction of p-values <= x.
  double at(double x) const;
};

/// Throws std::domain_error for an invalid configuration.
void validate(const ExperimentConfig& config);

/// Counts from n independent categorical draws (inverse CDF on uniforms).
TrinomialCounts multinomial_sample(const SimplexPoint& probs, std::int64_t n,
                                   std::uint64_t seed);
TrinomialCounts multinomial_sample(const GeneTreeProbs& probs, std::int64_t n,
                                   std::uint64_t seed);

/// Generating distribution of an experiment. T1(c) generates from tree c,
/// T3 from tree 1.
GeneTreeProbs generating_probs(const ExperimentConfig& config);

/// Reference law used for a replicate with constrained estimate phi_hat.
DensitySpec reference_density(const ExperimentConfig& config, double phi_hat);

/// p-value of one replicate's counts under the experiment's reference.
double replicate_pvalue(const ExperimentConfig& config, const TrinomialCounts& counts);

/// Replicate r uses the seed derive_seed(config.seed, r).
EcdfSeries run_experiment(const ExperimentConfig& config);

/// sup_i max(|p_(i) - i/N|, |p_(i) - (i-1)/N|) over 1-based ranks.
double sup_uniform_deviation(const EcdfSeries& ecdf);

}  // namespace slrt
