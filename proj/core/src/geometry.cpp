#include "singular_lrt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "singular_lrt/parallel.hpp"
#include "singular_lrt/random.hpp"

namespace slrt {

namespace {

void require_phi(double phi0) {
  if (!(phi0 > 0.0 && phi0 <= 1.0)) throw std::domain_error("phi0 must lie in (0, 1]");
}

void require_n(std::int64_t n) {
  if (n < 1) throw std::domain_error("sample size must be at least 1");
}

constexpr std::size_t kSampleBlock = std::size_t{1} << 16;

}  // namespace

PlanePoint simplex_to_plane(const SimplexPoint& p) {
  require_on_simplex(p);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const double inv_sqrt6 = 1.0 / std::sqrt(6.0);
  const double sqrt_two_thirds = std::sqrt(2.0 / 3.0);
  return {inv_sqrt2 * (p[2] - p[1]), sqrt_two_thirds * p[0] - inv_sqrt6 * (p[1] + p[2])};
}

FisherScaling fisher_scaling(double phi0, std::int64_t n) {
  require_phi(phi0);
  require_n(n);
  const double three_n = 3.0 * static_cast<double>(n);
  return {std::sqrt(three_n / phi0), std::sqrt(three_n / (phi0 * (3.0 - 2.0 * phi0)))};
}

double mu_from_phi(double phi0, std::int64_t n) {
  require_phi(phi0);
  require_n(n);
  return std::sqrt(2.0 * static_cast<double>(n)) * (1.0 - phi0) /
         std::sqrt(phi0 * (3.0 - 2.0 * phi0));
}

double alpha_from_phi(double phi0) {
  require_phi(phi0);
  return std::atan(1.0 / std::sqrt(3.0 * (3.0 - 2.0 * phi0)));
}

double min_alpha0() noexcept { return std::atan(1.0 / 3.0); }

TransformParams transform_params(double phi0, std::int64_t n) {
  TransformParams out;
  out.phi0 = phi0;
  out.n = n;
  out.mu0 = mu_from_phi(phi0, n);
  out.alpha0 = alpha_from_phi(phi0);
  out.beta0 = 0.5 * (0.5 * std::numbers::pi - out.alpha0);
  return out;
}

double phi_from_mu(double mu0, std::int64_t n) {
  if (!(mu0 >= 0.0) || !std::isfinite(mu0)) {
    throw std::domain_error("mu0 must be finite and nonnegative");
  }
  require_n(n);
  if (mu0 == 0.0) return 1.0;
  // mu_from_phi decreases from +inf at phi -> 0 to 0 at phi = 1.
  double lo = 0.0;
  double hi = 1.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-16; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mu_from_phi(mid, n) > mu0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double distance_sq_t1(double z, double zbar) noexcept {
  return z * z + (zbar < 0.0 ? zbar * zbar : 0.0);
}

double distance_sq_t3(double z, double zbar, double alpha0) noexcept {
  const double sign = z >= 0.0 ? 1.0 : -1.0;
  const double s = std::sin(alpha0);
  const double side = z + sign * zbar / std::tan(alpha0);
  return std::min(distance_sq_t1(z, zbar), s * s * side * side);
}

std::vector<double> sample_lambda_tilde(NullShape shape, double mu0, double alpha0,
                                        std::size_t count, std::uint64_t seed,
                                        unsigned threads) {
  if (count == 0) throw std::domain_error("sample count must be positive");
  if (!(mu0 >= 0.0) || !std::isfinite(mu0)) {
    throw std::domain_error("mu0 must be finite and nonnegative");
  }
  if (shape == NullShape::T3 && !(alpha0 > 0.0 && alpha0 < 0.5 * std::numbers::pi)) {
    throw std::domain_error("alpha0 must lie in (0, pi/2)");
  }

  std::vector<double> out(count);
  const std::size_t blocks = (count + kSampleBlock - 1) / kSampleBlock;
  parallel_for_chunks(blocks, resolve_thread_count(threads),
                      [&](std::size_t first, std::size_t last) {
    for (std::size_t b = first; b < last; ++b) {
      RandomStream rng(derive_seed(seed, b));
      const std::size_t end = std::min(count, (b + 1) * kSampleBlock);
      for (std::size_t i = b * kSampleBlock; i < end; ++i) {
        double z, w;
        rng.normal_pair(z, w);
        const double zbar = mu0 + w;
        out[i] = shape == NullShape::T1 ? distance_sq_t1(z, zbar)
                                        : distance_sq_t3(z, zbar, alpha0);
      }
    }
  });
  return out;
}

std::vector<double> sample_lambda_tilde(NullShape shape, const TransformParams& params,
                                        std::size_t count, std::uint64_t seed,
                                        unsigned threads) {
  return sample_lambda_tilde(shape, params.mu0, params.alpha0, count, seed, threads);
}

}  // namespace slrt
