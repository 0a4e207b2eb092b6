#pragma once

#include <array>

namespace slrt {

/// Point of the closed 2-simplex, (p1, p2, p3) with p_i >= 0 and sum 1.
using SimplexPoint = std::array<double, 3>;

/// Validates a 1-based topology index and returns it 0-based.
int checked_tree_slot(int index);

/// Throws std::domain_error unless p lies on the closed simplex within tol.
void require_on_simplex(const SimplexPoint& p, double tol = 1e-9);

}  // namespace slrt
