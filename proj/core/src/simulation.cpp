#include "singular_lrt/simulation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "singular_lrt/geometry.hpp"
#include "singular_lrt/parallel.hpp"
#include "singular_lrt/random.hpp"

namespace slrt {

double EcdfSeries::at(double x) const {
  if (sorted_pvalues.empty()) return 0.0;
  const auto it = std::upper_bound(sorted_pvalues.begin(), sorted_pvalues.end(), x);
  return static_cast<double>(it - sorted_pvalues.begin()) /
         static_cast<double>(sorted_pvalues.size());
}

void validate(const ExperimentConfig& config) {
  if (!(config.phi0 > 0.0 && config.phi0 <= 1.0)) {
    throw std::domain_error("phi0 must lie in (0, 1]");
  }
  if (config.n < 1) throw std::domain_error("n must be at least 1");
  if (config.replicates < 1) throw std::domain_error("replicates must be at least 1");
}

TrinomialCounts multinomial_sample(const SimplexPoint& probs, std::int64_t n,
                                   std::uint64_t seed) {
  require_on_simplex(probs);
  if (n < 1) throw std::domain_error("n must be at least 1");
  const double first = probs[0];
  const double second = probs[0] + probs[1];
  RandomStream rng(seed);
  std::array<std::int64_t, 3> counts{0, 0, 0};
  for (std::int64_t i = 0; i < n; ++i) {
    const double u = rng.uniform();
    ++counts[u < first ? 0 : (u < second ? 1 : 2)];
  }
  return TrinomialCounts(counts);
}

TrinomialCounts multinomial_sample(const GeneTreeProbs& probs, std::int64_t n,
                                   std::uint64_t seed) {
  return multinomial_sample(probs.probs, n, seed);
}

GeneTreeProbs generating_probs(const ExperimentConfig& config) {
  const int tree = config.model.is_t1() ? config.model.concordant_index() : 1;
  return gene_tree_probabilities_from_phi(config.phi0, tree);
}

DensitySpec reference_density(const ExperimentConfig& config, double phi_hat) {
  if (config.reference == Reference::ChiSq1) return ChiSq{1};
  const double phi = config.mu_source == MuSource::TrueParam ? config.phi0 : phi_hat;
  if (!(phi > 0.0)) {
    throw std::domain_error("reference density is undefined at phi = 0");
  }
  const double mu0 = mu_from_phi(phi, config.n);
  if (config.model.is_t1()) return T1Approx{mu0};
  return T3Approx{mu0, alpha_from_phi(phi)};
}

double replicate_pvalue(const ExperimentConfig& config, const TrinomialCounts& counts) {
  const auto ratio = likelihood_ratio(counts, config.model);
  if (ratio.lambda == 0.0) return 1.0;
  return pvalue(ratio.lambda, reference_density(config, ratio.null_fit.phi_hat));
}

EcdfSeries run_experiment(const ExperimentConfig& config) {
  validate(config);
  const auto probs = generating_probs(config);
  const auto replicates = static_cast<std::size_t>(config.replicates);
  const unsigned threads = resolve_thread_count(config.threads);

  using Key = std::array<std::int64_t, 3>;
  std::vector<Key> draws(replicates);
  parallel_for_chunks(replicates, threads, [&](std::size_t first, std::size_t last) {
    for (std::size_t r = first; r < last; ++r) {
      draws[r] = multinomial_sample(probs, config.n, derive_seed(config.seed, r)).values();
    }
  });

  // Replicates sharing a count vector share a p-value; evaluate each
  // distinct vector once.
  std::vector<Key> distinct = draws;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<double> distinct_p(distinct.size());
  parallel_for_chunks(distinct.size(), threads, [&](std::size_t first, std::size_t last) {
    for (std::size_t k = first; k < last; ++k) {
      distinct_p[k] = replicate_pvalue(config, TrinomialCounts(distinct[k]));
    }
  });

  EcdfSeries out;
  out.sorted_pvalues.resize(replicates);
  for (std::size_t r = 0; r < replicates; ++r) {
    const auto it = std::lower_bound(distinct.begin(), distinct.end(), draws[r]);
    out.sorted_pvalues[r] = distinct_p[static_cast<std::size_t>(it - distinct.begin())];
  }
  std::sort(out.sorted_pvalues.begin(), out.sorted_pvalues.end());
  return out;
}

double sup_uniform_deviation(const EcdfSeries& ecdf) {
  if (ecdf.sorted_pvalues.empty()) throw std::domain_error("empty p-value series");
  const double n = static_cast<double>(ecdf.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < ecdf.size(); ++i) {
    const double p = ecdf.sorted_pvalues[i];
    worst = std::max({worst, std::abs(p - static_cast<double>(i + 1) / n),
                      std::abs(p - static_cast<double>(i) / n)});
  }
  return worst;
}

}  // namespace slrt
