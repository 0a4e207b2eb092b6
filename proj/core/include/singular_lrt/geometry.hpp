#pragma once

// Planar picture of the trinomial simplex used by the finite-sample
// approximations: an isometry of the simplex onto R^2 that sends the star
// tree (1/3, 1/3, 1/3) to the origin, followed by Fisher-information scaling
// at the true parameter. In these coordinates the sampling distribution is
// approximately N((0, mu0), I) and the T3 null space is the union of the
// vertical half-line {x = 0, y >= 0} and the two half-lines
// y = -tan(alpha0) |x|. T1 keeps only the vertical half-line.
//
// The null segments are extended to half-lines, which is accurate as long
// as the true parameter is many standard deviations from the simplex
// boundary.

#include <cstdint>
#include <vector>

#include "singular_lrt/simplex.hpp"

namespace slrt {

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

/// Diagonal of sqrt(n) I(theta0)^{1/2} in planar coordinates.
struct FisherScaling {
  double x = 0.0;
  double y = 0.0;
};

struct TransformParams {
  double phi0 = 1.0;
  std::int64_t n = 1;
  double mu0 = 0.0;     ///< distance to the singularity in standard deviations
  double alpha0 = 0.0;  ///< angle of the discordant null branches below the x-axis
  double beta0 = 0.0;   ///< (pi/2 - alpha0) / 2
};

enum class NullShape { T1, T3 };

PlanePoint simplex_to_plane(const SimplexPoint& p);

FisherScaling fisher_scaling(double phi0, std::int64_t n);

double mu_from_phi(double phi0, std::int64_t n);
double alpha_from_phi(double phi0);
TransformParams transform_params(double phi0, std::int64_t n);

/// Inverts mu_from_phi by bisection on (0, 1].
double phi_from_mu(double mu0, std::int64_t n);

/// Smallest attainable alpha0 (the phi0 -> 0 limit), arctan(1/3).
double min_alpha0() noexcept;

/// Squared distance from (z, zbar) to the half-line {x = 0, y >= 0}.
double distance_sq_t1(double z, double zbar) noexcept;

/// Squared distance from (z, zbar) to the T3 null half-lines.
double distance_sq_t3(double z, double zbar, double alpha0) noexcept;

/// Monte Carlo draws of the approximating statistic: (Z, Zbar) ~
/// N((0, mu0), I) mapped through the matching squared distance. Draws are
/// grouped in fixed blocks, each with its own generator seeded from
/// (seed, block), so the output depends only on the arguments.
std::vector<double> sample_lambda_tilde(NullShape shape, double mu0, double alpha0,
                                        std::size_t count, std::uint64_t seed,
                                        unsigned threads = 0);
std::vector<double> sample_lambda_tilde(NullShape shape, const TransformParams& params,
                                        std::size_t count, std::uint64_t seed,
                                        unsigned threads = 0);

}  // namespace slrt
