#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "singular_lrt/geometry.hpp"
#include "singular_lrt/simulation.hpp"

using namespace slrt;

TEST_SUITE("simulation") {

TEST_CASE("degenerate multinomial") {
  const auto c = multinomial_sample(SimplexPoint{1.0, 0.0, 0.0}, 50, 3);
  CHECK(c == TrinomialCounts(50, 0, 0));
  CHECK_THROWS_AS(multinomial_sample(SimplexPoint{0.5, 0.6, 0.0}, 10, 1), std::domain_error);
  CHECK_THROWS_AS(multinomial_sample(SimplexPoint{1.0, 0.0, 0.0}, 0, 1), std::domain_error);
}

TEST_CASE("multinomial marginals within four standard deviations") {
  const std::int64_t n = 3'000'000;
  const auto c = multinomial_sample(gene_tree_probabilities(BranchLength(0.0), 1), n, 99);
  CHECK(c.total() == n);
  const double sd = std::sqrt(n * (1.0 / 3.0) * (2.0 / 3.0));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(c[i] - 1'000'000.0) <= 4 * sd);
}

TEST_CASE("multinomial is deterministic in its seed") {
  const auto probs = gene_tree_probabilities(BranchLength(0.4), 2);
  CHECK(multinomial_sample(probs, 1000, 12) == multinomial_sample(probs, 1000, 12));
  CHECK_FALSE(multinomial_sample(probs, 1000, 12) == multinomial_sample(probs, 1000, 13));
}

TEST_CASE("config validation") {
  ExperimentConfig c;
  c.phi0 = 0.0;
  CHECK_THROWS_AS(run_experiment(c), std::domain_error);
  c.phi0 = 1.0;
  c.n = 0;
  CHECK_THROWS_AS(run_experiment(c), std::domain_error);
  c.n = 10;
  c.replicates = 0;
  CHECK_THROWS_AS(run_experiment(c), std::domain_error);
}

TEST_CASE("generating distribution and reference law") {
  ExperimentConfig c;
  c.model = ModelId::t1(3);
  c.phi0 = 0.6;
  c.n = 100;
  CHECK(generating_probs(c).concordant_index == 3);
  const auto ref = reference_density(c, 0.9);
  REQUIRE(std::holds_alternative<T1Approx>(ref));
  CHECK(std::get<T1Approx>(ref).mu0 == doctest::Approx(mu_from_phi(0.6, 100)));

  c.mu_source = MuSource::PluginMle;
  CHECK(std::get<T1Approx>(reference_density(c, 0.9)).mu0 ==
        doctest::Approx(mu_from_phi(0.9, 100)));

  c.model = ModelId::t3();
  const auto t3 = std::get<T3Approx>(reference_density(c, 0.9));
  CHECK(t3.alpha0 == doctest::Approx(alpha_from_phi(0.9)));

  c.reference = Reference::ChiSq1;
  CHECK(std::holds_alternative<ChiSq>(reference_density(c, 0.9)));
}

TEST_CASE("replicate p-values") {
  ExperimentConfig c;
  c.model = ModelId::t3();
  c.n = 1000;
  CHECK(replicate_pvalue(c, TrinomialCounts(400, 300, 300)) == 1.0);
  c.reference = Reference::ChiSq1;
  const double lambda = lr_statistic(TrinomialCounts(360, 340, 300), ModelId::t3());
  CHECK(replicate_pvalue(c, TrinomialCounts(360, 340, 300)) ==
        doctest::Approx(std::erfc(std::sqrt(lambda / 2))));
}

TEST_CASE("experiments are reproducible across thread counts") {
  ExperimentConfig c;
  c.model = ModelId::t1(1);
  c.phi0 = 0.97;
  c.n = 200;
  c.replicates = 5000;
  c.seed = 8;
  c.mu_source = MuSource::PluginMle;
  c.threads = 1;
  const auto a = run_experiment(c);
  c.threads = 3;
  const auto b = run_experiment(c);
  CHECK(a.sorted_pvalues == b.sorted_pvalues);
  CHECK(std::is_sorted(a.sorted_pvalues.begin(), a.sorted_pvalues.end()));
  CHECK(a.size() == 5000);
  CHECK(a.cumfrac(4999) == 1.0);
  c.seed = 9;
  CHECK(run_experiment(c).sorted_pvalues != a.sorted_pvalues);
}

TEST_CASE("small samples give step-shaped ECDFs") {
  ExperimentConfig c;
  c.model = ModelId::t3();
  c.n = 30;
  c.replicates = 20'000;
  c.seed = 4;
  const auto e = run_experiment(c);
  const std::set<double> distinct(e.sorted_pvalues.begin(), e.sorted_pvalues.end());
  // At most C(32, 2) = 496 count vectors exist for n = 30.
  CHECK(distinct.size() <= 496);
  CHECK(distinct.size() < e.size() / 20);
  // A visible jump: some single p-value carries at least 1% of the mass.
  double biggest = 0.0;
  for (double p : distinct) {
    const auto range = std::equal_range(e.sorted_pvalues.begin(), e.sorted_pvalues.end(), p);
    biggest = std::max(biggest, static_cast<double>(range.second - range.first) / e.size());
  }
  CHECK(biggest >= 0.01);
}

TEST_CASE("uniform deviation") {
  CHECK_THROWS_AS(sup_uniform_deviation(EcdfSeries{}), std::domain_error);
  CHECK(sup_uniform_deviation(EcdfSeries{{0.5}}) == 0.5);

  EcdfSeries grid;
  const int n = 1000;
  for (int i = 1; i <= n; ++i) grid.sorted_pvalues.push_back((i - 0.5) / n);
  CHECK(sup_uniform_deviation(grid) == doctest::Approx(0.5 / n));

  EcdfSeries uniform;
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1'000'000; ++i) uniform.sorted_pvalues.push_back(u(gen));
  std::sort(uniform.sorted_pvalues.begin(), uniform.sorted_pvalues.end());
  CHECK(sup_uniform_deviation(uniform) <= 0.002);
  CHECK(uniform.at(0.5) == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("chi-square 1 misbehaves in opposite directions at the two null points") {
  ExperimentConfig c;
  c.phi0 = 1.0;
  c.n = 1000;
  c.replicates = 20'000;
  c.seed = 5;
  c.reference = Reference::ChiSq1;
  c.model = ModelId::t3();
  const auto t3 = run_experiment(c);
  CHECK(t3.at(0.05) < 0.05);
  CHECK(t3.at(0.25) < 0.25);
  c.model = ModelId::t1(1);
  const auto t1 = run_experiment(c);
  CHECK(t1.at(0.05) > 0.05);
  CHECK(t1.at(0.25) > 0.25);
}

}
