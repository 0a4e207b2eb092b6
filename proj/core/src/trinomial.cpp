#include "singular_lrt/trinomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slrt {

TrinomialCounts::TrinomialCounts(std::int64_t n1, std::int64_t n2, std::int64_t n3)
    : TrinomialCounts(std::array<std::int64_t, 3>{n1, n2, n3}) {}

TrinomialCounts::TrinomialCounts(const std::array<std::int64_t, 3>& counts)
    : counts_(counts) {
  for (auto c : counts_) {
    if (c < 0) throw std::domain_error("counts must be nonnegative");
  }
  if (total() < 1) throw std::domain_error("at least one observation is required");
}

ModelId ModelId::t1(int concordant_index) {
  checked_tree_slot(concordant_index);
  return ModelId(Kind::T1, concordant_index);
}

double log_likelihood(const TrinomialCounts& counts, const SimplexPoint& probs) {
  double ll = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (counts[i] == 0) continue;
    ll += static_cast<double>(counts[i]) * std::log(probs[i]);
  }
  return ll;
}

SimplexPoint unconstrained_mle(const TrinomialCounts& counts) {
  const double n = static_cast<double>(counts.total());
  return {counts[0] / n, counts[1] / n, counts[2] / n};
}

namespace {

// The T1 likelihood n_c log(1 - 2phi/3) + (n - n_c) log(phi/3) is concave
// in phi with stationary point 3 (n - n_c) / (2n); the constraint phi <= 1
// clips it.
MleResult fit_single_tree(const TrinomialCounts& counts, int tree_index) {
  const int slot = tree_index - 1;
  const std::int64_t n = counts.total();
  const std::int64_t concordant = counts[slot];
  const std::int64_t discordant = n - concordant;

  MleResult out;
  out.tree_index = tree_index;
  if (discordant == 0) {
    out.phi_hat = 0.0;
    out.at_boundary = true;
    out.probs = {0.0, 0.0, 0.0};
    out.probs[slot] = 1.0;
    out.loglik = 0.0;
    return out;
  }

  const double phi = std::min(1.0, 1.5 * static_cast<double>(discordant) / static_cast<double>(n));
  out.phi_hat = phi;
  out.probs = {phi / 3.0, phi / 3.0, phi / 3.0};
  out.probs[slot] = 1.0 - 2.0 * phi / 3.0;
  // Depends on the counts only through n_c, so trees with equal concordant
  // counts tie exactly.
  out.loglik = static_cast<double>(discordant) * std::log(phi / 3.0);
  if (concordant > 0) {
    out.loglik += static_cast<double>(concordant) * std::log(out.probs[slot]);
  }
  return out;
}

// Whether the relative frequencies lie on the closure of tree c's null
// curve: the two discordant counts agree and phi_hat <= 1.
bool on_null_curve(const TrinomialCounts& counts, int tree_index) {
  const int slot = tree_index - 1;
  const std::int64_t a = counts[(slot + 1) % 3];
  const std::int64_t b = counts[(slot + 2) % 3];
  return a == b && 3 * counts[slot] >= counts.total();
}

}  // namespace

MleResult constrained_mle(const TrinomialCounts& counts, ModelId model) {
  if (model.is_t1()) return fit_single_tree(counts, model.concordant_index());

  MleResult best = fit_single_tree(counts, 1);
  for (int tree = 2; tree <= 3; ++tree) {
    MleResult candidate = fit_single_tree(counts, tree);
    if (candidate.loglik > best.loglik) best = candidate;
  }
  return best;
}

LikelihoodRatio likelihood_ratio(const TrinomialCounts& counts, ModelId model) {
  LikelihoodRatio out;
  out.null_fit = constrained_mle(counts, model);

  const bool on_null = model.is_t1()
                           ? on_null_curve(counts, model.concordant_index())
                           : on_null_curve(counts, 1) || on_null_curve(counts, 2) ||
                                 on_null_curve(counts, 3);
  if (on_null) {
    out.lambda = 0.0;
    return out;
  }

  // 2 sum n_i log(phat_i / p0_i), summed termwise to avoid differencing two
  // large log-likelihoods.
  const double n = static_cast<double>(counts.total());
  double half = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (counts[i] == 0) continue;
    const double ni = static_cast<double>(counts[i]);
    half += ni * std::log(ni / (n * out.null_fit.probs[i]));
  }
  out.lambda = std::max(0.0, 2.0 * half);
  return out;
}

double lr_statistic(const TrinomialCounts& counts, ModelId model) {
  return likelihood_ratio(counts, model).lambda;
}

}  // namespace slrt
