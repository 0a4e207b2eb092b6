#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "singular_lrt/trinomial.hpp"

using namespace slrt;

namespace {

std::array<std::int64_t, 3> random_counts(std::mt19937_64& gen) {
  std::uniform_int_distribution<std::int64_t> draw(0, 400);
  std::array<std::int64_t, 3> c{};
  do {
    for (auto& v : c) v = draw(gen);
  } while (c[0] + c[1] + c[2] == 0);
  return c;
}

}  // namespace

TEST_SUITE("trinomial") {

TEST_CASE("unconstrained MLE is the relative frequency") {
  auto p = unconstrained_mle(TrinomialCounts(50, 25, 25));
  CHECK(p[0] == 0.5);
  CHECK(p[1] == 0.25);
  CHECK(p[2] == 0.25);
  p = unconstrained_mle(TrinomialCounts(100, 0, 0));
  CHECK(p == SimplexPoint{1.0, 0.0, 0.0});
  p = unconstrained_mle(TrinomialCounts(1, 1, 1));
  for (double v : p) CHECK(v == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("count validation") {
  CHECK_THROWS_AS(TrinomialCounts(0, 0, 0), std::domain_error);
  CHECK_THROWS_AS(TrinomialCounts(-1, 2, 3), std::domain_error);
  CHECK_THROWS_AS(ModelId::t1(0), std::domain_error);
  CHECK_THROWS_AS(ModelId::t1(4), std::domain_error);
}

TEST_CASE("T1 MLE interior point") {
  const TrinomialCounts counts(50, 25, 25);
  const auto fit = constrained_mle(counts, ModelId::t1(1));
  CHECK(fit.phi_hat == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(fit.probs[0] == doctest::Approx(0.5));
  CHECK(fit.probs[1] == doctest::Approx(0.25));
  CHECK(fit.probs[2] == doctest::Approx(0.25));
  CHECK_FALSE(fit.at_boundary);
  CHECK(std::abs(fit.loglik - log_likelihood(counts, fit.probs)) < 1e-10);
  CHECK(fit.loglik >= oracle::grid_search_t1_loglik(counts.values(), 0) - 1e-9);
}

TEST_CASE("T1 MLE clipped at the star tree") {
  const TrinomialCounts counts(20, 50, 30);
  const auto fit = constrained_mle(counts, ModelId::t1(1));
  CHECK(fit.phi_hat == 1.0);
  for (double p : fit.probs) CHECK(p == doctest::Approx(1.0 / 3.0));
  CHECK(fit.loglik >= oracle::grid_search_t1_loglik(counts.values(), 0) - 1e-9);
}

TEST_CASE("T3 MLE picks the best tree") {
  const TrinomialCounts counts(20, 50, 30);
  const auto fit = constrained_mle(counts, ModelId::t3());
  CHECK(fit.tree_index == 2);
  CHECK(fit.phi_hat == doctest::Approx(0.75));
  CHECK(fit.probs[0] == doctest::Approx(0.25));
  CHECK(fit.probs[1] == doctest::Approx(0.5));
  CHECK(fit.probs[2] == doctest::Approx(0.25));
  double best = -INFINITY;
  for (int slot = 0; slot < 3; ++slot) {
    best = std::max(best, oracle::grid_search_t1_loglik(counts.values(), slot, 100'000));
  }
  CHECK(fit.loglik >= best - 1e-9);
}

TEST_CASE("T3 tie goes to the smallest index") {
  const auto fit = constrained_mle(TrinomialCounts(10, 40, 40), ModelId::t3());
  CHECK(fit.tree_index == 2);
  CHECK(constrained_mle(TrinomialCounts(30, 30, 30), ModelId::t3()).tree_index == 1);
}

TEST_CASE("all mass on the concordant topology") {
  const TrinomialCounts counts(10, 0, 0);
  const auto fit = constrained_mle(counts, ModelId::t1(1));
  CHECK(fit.at_boundary);
  CHECK(fit.phi_hat == 0.0);
  CHECK(fit.loglik == 0.0);
  CHECK(lr_statistic(counts, ModelId::t1(1)) == 0.0);
  CHECK(lr_statistic(counts, ModelId::t3()) == 0.0);
  // Tree 2 cannot put mass 1 on topology 1; its best is the star tree.
  CHECK(lr_statistic(counts, ModelId::t1(2)) == doctest::Approx(20.0 * std::log(3.0)));
}

TEST_CASE("likelihood ratio examples") {
  CHECK(lr_statistic(TrinomialCounts(400, 300, 300), ModelId::t3()) == 0.0);

  // 2 (340 ln(34/32) + 300 ln(30/32)) to 20 digits.
  const TrinomialCounts counts(360, 340, 300);
  const auto t1 = likelihood_ratio(counts, ModelId::t1(1));
  CHECK(std::abs(t1.lambda - 2.5017) < 1e-3);
  CHECK(std::abs(t1.lambda - 2.5016301526329899511) < 1e-9);
  CHECK(t1.null_fit.phi_hat == doctest::Approx(0.96));

  const auto t3 = likelihood_ratio(counts, ModelId::t3());
  CHECK(t3.null_fit.tree_index == 1);
  CHECK(std::abs(t3.lambda - 2.5016301526329899511) < 1e-9);
  CHECK(std::abs(lr_statistic(counts, ModelId::t1(2)) - 5.46208355) < 1e-7);
  CHECK(std::abs(lr_statistic(counts, ModelId::t1(3)) - 5.661426785) < 1e-7);
}

TEST_CASE("lambda is nonnegative, nested and label invariant") {
  std::mt19937_64 gen(77);
  const std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = random_counts(gen);
    const TrinomialCounts counts(c);
    const double t3 = lr_statistic(counts, ModelId::t3());
    CHECK(t3 >= 0.0);
    for (int tree = 1; tree <= 3; ++tree) {
      const double t1 = lr_statistic(counts, ModelId::t1(tree));
      CHECK(t1 >= 0.0);
      CHECK(t3 <= t1 + 1e-9);
    }
    for (const auto& sigma : perms) {
      // Counts permuted so that new slot sigma[i] holds old slot i.
      std::array<std::int64_t, 3> moved{};
      for (int i = 0; i < 3; ++i) moved[sigma[i]] = c[i];
      const TrinomialCounts permuted(moved);
      CHECK(lr_statistic(permuted, ModelId::t3()) == doctest::Approx(t3).epsilon(1e-12));
      for (int tree = 1; tree <= 3; ++tree) {
        CHECK(lr_statistic(permuted, ModelId::t1(sigma[tree - 1] + 1)) ==
              doctest::Approx(lr_statistic(counts, ModelId::t1(tree))).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("closed-form MLE agrees with grid search") {
  std::mt19937_64 gen(4242);
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = random_counts(gen);
    const int tree = 1 + trial % 3;
    const auto fit = constrained_mle(TrinomialCounts(c), ModelId::t1(tree));
    const double grid = oracle::grid_search_t1_loglik(c, tree - 1);
    CHECK(fit.loglik >= grid - 1e-9);
    // The grid contains phi = 1 and is dense, so it also gets close.
    CHECK(fit.loglik - grid < 1e-3);
  }
}

}
