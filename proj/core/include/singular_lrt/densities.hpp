#pragma once

// Reference distributions for the likelihood ratio statistic near the
// star-tree singularity (T3) and the star-tree boundary point (T1), with
// chi-square references for comparison.
//
// Every distribution here is that of a squared distance Lambda = R^2.
// Integrals are done in r = sqrt(lambda), where the density
// 2 r f(r^2) is bounded, which removes the lambda^{-1/2} pole at 0.

#include <string>
#include <variant>
#include <vector>

namespace slrt {

/// Approximate T1 law: Z^2 + [Zbar < 0] Zbar^2, Z ~ N(0,1), Zbar ~ N(mu0,1).
struct T1Approx {
  double mu0 = 0.0;
};

/// Approximate T3 law; alpha0 must lie in (0, pi/2).
struct T3Approx {
  double mu0 = 0.0;
  double alpha0 = 0.0;
};

struct ChiSq {
  int dof = 1;
};

/// (1/2) chi^2_1 + (1/2) chi^2_2, the T1 law at the boundary point.
struct SingularityMixtureT1 {};

using DensitySpec = std::variant<T1Approx, T3Approx, ChiSq, SingularityMixtureT1>;

/// Throws std::domain_error if the parameters are out of range.
void validate(const DensitySpec& spec);

std::string describe(const DensitySpec& spec);

double pdf(double lambda, const DensitySpec& spec);

/// Density of sqrt(Lambda) at r >= 0, i.e. 2 r pdf(r^2), finite at r = 0.
double root_density(double r, const DensitySpec& spec);

/// Upper end of the integration range in r; the mass beyond it is below
/// 1e-12.
double root_support_cap(const DensitySpec& spec);

/// Upper tail probability P(Lambda >= lambda).
double pvalue(double lambda, const DensitySpec& spec);
double cdf(double lambda, const DensitySpec& spec);

/// CDF tabulated on an equispaced grid in r = sqrt(lambda), built from
/// cumulative panel integrals. Between nodes the CDF is interpolated with
/// cubic Hermite segments using the exact density as the slope.
class CdfTable {
 public:
  CdfTable(const DensitySpec& spec, int intervals = 8192);

  double operator()(double lambda) const;
  double r_max() const noexcept { return r_max_; }

 private:
  DensitySpec spec_;
  double r_max_;
  double step_;
  std::vector<double> cdf_;
  std::vector<double> slope_;
};

/// Kolmogorov-Smirnov distance between the empirical law of `sorted`
/// (nondecreasing) and the distribution described by `table`.
double ks_distance(const std::vector<double>& sorted, const CdfTable& table);

}  // namespace slrt
