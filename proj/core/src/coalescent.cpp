#include "singular_lrt/coalescent.hpp"

#include <cmath>
#include <stdexcept>

namespace slrt {

BranchLength::BranchLength(double t) : t_(t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw std::domain_error("branch length must be finite and nonnegative");
  }
}

double phi_from_branch_length(double t) {
  return std::exp(-BranchLength(t).value());
}

double branch_length_from_phi(double phi0) {
  if (!(phi0 > 0.0 && phi0 <= 1.0)) {
    throw std::domain_error("phi0 must lie in (0, 1]");
  }
  return -std::log(phi0);
}

GeneTreeProbs gene_tree_probabilities_from_phi(double phi0, int concordant_index) {
  if (!(phi0 > 0.0 && phi0 <= 1.0)) {
    throw std::domain_error("phi0 must lie in (0, 1]");
  }
  const int slot = checked_tree_slot(concordant_index);
  // Discordant trees need no coalescence on the internal branch, then a
  // 1/3 chance each among the three lineages at the root.
  const double discordant = phi0 / 3.0;
  GeneTreeProbs out;
  out.concordant_index = concordant_index;
  out.probs = {discordant, discordant, discordant};
  out.probs[slot] = (3.0 - 2.0 * phi0) / 3.0;
  return out;
}

GeneTreeProbs gene_tree_probabilities(BranchLength t, int concordant_index) {
  return gene_tree_probabilities_from_phi(std::exp(-t.value()), concordant_index);
}

}  // namespace slrt
