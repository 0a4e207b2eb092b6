#pragma once

// Null models T1 (a fixed species tree) and T3 (any of the three species
// trees) inside the trinomial model of gene-tree topology counts, their
// maximum likelihood fits and the likelihood ratio statistic.

#include <array>
#include <cstdint>

#include "singular_lrt/simplex.hpp"

namespace slrt {

class TrinomialCounts {
 public:
  TrinomialCounts(std::int64_t n1, std::int64_t n2, std::int64_t n3);
  explicit TrinomialCounts(const std::array<std::int64_t, 3>& counts);

  std::int64_t operator[](int slot) const noexcept { return counts_[slot]; }
  const std::array<std::int64_t, 3>& values() const noexcept { return counts_; }
  std::int64_t total() const noexcept { return counts_[0] + counts_[1] + counts_[2]; }

  friend bool operator==(const TrinomialCounts&, const TrinomialCounts&) = default;

 private:
  std::array<std::int64_t, 3> counts_;
};

class ModelId {
 public:
  enum class Kind { T1, T3 };

  static ModelId t1(int concordant_index);
  static ModelId t3() noexcept { return ModelId(Kind::T3, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_t1() const noexcept { return kind_ == Kind::T1; }
  /// 1-based concordant topology; only meaningful for T1.
  int concordant_index() const noexcept { return index_; }

  friend bool operator==(const ModelId&, const ModelId&) = default;

 private:
  ModelId(Kind kind, int index) noexcept : kind_(kind), index_(index) {}
  Kind kind_;
  int index_;
};

struct MleResult {
  double phi_hat = 1.0;
  int tree_index = 1;
  SimplexPoint probs{};
  double loglik = 0.0;
  /// Set when the supremum is only approached as phi -> 0+ (all mass on the
  /// concordant topology); phi_hat is then reported as 0.
  bool at_boundary = false;
};

struct LikelihoodRatio {
  double lambda = 0.0;
  MleResult null_fit;
};

/// Count-weighted log-likelihood with the 0 log 0 = 0 convention.
double log_likelihood(const TrinomialCounts& counts, const SimplexPoint& probs);

SimplexPoint unconstrained_mle(const TrinomialCounts& counts);
MleResult constrained_mle(const TrinomialCounts& counts, ModelId model);

LikelihoodRatio likelihood_ratio(const TrinomialCounts& counts, ModelId model);
double lr_statistic(const TrinomialCounts& counts, ModelId model);

}  // namespace slrt
