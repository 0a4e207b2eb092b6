#pragma once

// Rooted gene-tree topology probabilities for a three-taxon species tree
// with one lineage sampled per species.

#include "singular_lrt/simplex.hpp"

namespace slrt {

/// Internal branch length of the species tree, in coalescent units.
class BranchLength {
 public:
  explicit BranchLength(double t);
  double value() const noexcept { return t_; }

 private:
  double t_;
};

/// Probabilities of the three rooted gene-tree topologies. Slot
/// `concordant_index` (1-based) holds the topology matching the species
/// tree; the other two slots are equal.
struct GeneTreeProbs {
  SimplexPoint probs{};
  int concordant_index = 1;

  double concordant() const noexcept { return probs[concordant_index - 1]; }
  double discordant() const noexcept { return probs[concordant_index % 3]; }
};

double phi_from_branch_length(double t);
double branch_length_from_phi(double phi0);

GeneTreeProbs gene_tree_probabilities(BranchLength t, int concordant_index);

/// Same distribution parameterized by phi0 = exp(-t), phi0 in (0, 1].
GeneTreeProbs gene_tree_probabilities_from_phi(double phi0, int concordant_index);

}  // namespace slrt
