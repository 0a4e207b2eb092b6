#include "singular_lrt/simplex.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace slrt {

int checked_tree_slot(int index) {
  if (index < 1 || index > 3) {
    throw std::domain_error("tree index must be 1, 2 or 3, got " + std::to_string(index));
  }
  return index - 1;
}

void require_on_simplex(const SimplexPoint& p, double tol) {
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < -tol) {
      throw std::domain_error("simplex coordinates must be finite and nonnegative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw std::domain_error("simplex coordinates must sum to 1");
  }
}

}  // namespace slrt
