#include "singular_lrt/densities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "singular_lrt/quadrature.hpp"
#include "singular_lrt/special.hpp"

namespace slrt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
const double kSqrt2OverPi = std::sqrt(2.0 / std::numbers::pi);

// Mass of every supported law beyond cap = mu0 + 12 in r is below
// P(chi^2_2 > 144) = exp(-72): the distance to the null set never exceeds
// the distance from the sample point to the mean (0, mu0).
constexpr double kTailRadius = 12.0;

constexpr QuadratureOptions kTailOptions{1e-11, 1e-12, 4000};

double t1_root_density(double r, double mu0) {
  const double gauss = std::exp(-0.5 * r * r);
  const double lower = kSqrt2OverPi * std::erfc(-mu0 * kInvSqrt2);
  const double struve_term =
      mu0 == 0.0 ? -r : r * std::exp(-0.5 * mu0 * mu0) * struve_m0(mu0 * r);
  return 0.5 * gauss * (lower - struve_term);
}

double t3_root_density(double r, double mu0, double alpha0) {
  const double beta0 = 0.5 * (0.5 * std::numbers::pi - alpha0);
  const double tan_beta = std::tan(beta0);
  const double tan_alpha = std::tan(alpha0);
  const double mc = mu0 * std::cos(alpha0);
  const double ms = mu0 * std::sin(alpha0);

  // Normal mass crossing the three outer tube boundaries at distance r.
  const double vertical =
      std::exp(-0.5 * r * r) * std::erfc((r * tan_beta - mu0) * kInvSqrt2);
  const double near_side =
      std::exp(-0.5 * (r - mc) * (r - mc)) * std::erfc((r * tan_beta + ms) * kInvSqrt2);
  const double far_side =
      std::exp(-0.5 * (r + mc) * (r + mc)) * std::erfc((r * tan_alpha + ms) * kInvSqrt2);
  return kInvSqrt2Pi * (vertical + near_side + far_side);
}

double chisq_root_density(double r, int dof) {
  return dof == 1 ? kSqrt2OverPi * std::exp(-0.5 * r * r) : r * std::exp(-0.5 * r * r);
}

double chisq_pvalue(double lambda, int dof) {
  return dof == 1 ? std::erfc(std::sqrt(0.5 * lambda)) : std::exp(-0.5 * lambda);
}

}  // namespace

void validate(const DensitySpec& spec) {
  std::visit(overloaded{
                 [](const T1Approx& s) {
                   if (!(s.mu0 >= 0.0) || !std::isfinite(s.mu0)) {
                     throw std::domain_error("mu0 must be finite and nonnegative");
                   }
                 },
                 [](const T3Approx& s) {
                   if (!(s.mu0 >= 0.0) || !std::isfinite(s.mu0)) {
                     throw std::domain_error("mu0 must be finite and nonnegative");
                   }
                   if (!(s.alpha0 > 0.0 && s.alpha0 < 0.5 * std::numbers::pi)) {
                     throw std::domain_error("alpha0 must lie in (0, pi/2)");
                   }
                 },
                 [](const ChiSq& s) {
                   if (s.dof != 1 && s.dof != 2) {
                     throw std::domain_error("only chi-square with 1 or 2 degrees of freedom");
                   }
                 },
                 [](const SingularityMixtureT1&) {},
             },
             spec);
}

std::string describe(const DensitySpec& spec) {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{
                 [&](const T1Approx& s) { os << "t1:" << s.mu0; },
                 [&](const T3Approx& s) { os << "t3:" << s.mu0 << ',' << s.alpha0; },
                 [&](const ChiSq& s) { os << "chisq:" << s.dof; },
                 [&](const SingularityMixtureT1&) { os << "mix"; },
             },
             spec);
  return os.str();
}

double root_density(double r, const DensitySpec& spec) {
  if (r < 0.0) return 0.0;
  return std::visit(overloaded{
                        [r](const T1Approx& s) { return t1_root_density(r, s.mu0); },
                        [r](const T3Approx& s) { return t3_root_density(r, s.mu0, s.alpha0); },
                        [r](const ChiSq& s) { return chisq_root_density(r, s.dof); },
                        [r](const SingularityMixtureT1&) {
                          return 0.5 * (chisq_root_density(r, 1) + chisq_root_density(r, 2));
                        },
                    },
                    spec);
}

double pdf(double lambda, const DensitySpec& spec) {
  if (!(lambda > 0.0)) throw std::domain_error("pdf requires lambda > 0");
  validate(spec);
  const double r = std::sqrt(lambda);
  return std::max(0.0, root_density(r, spec) / (2.0 * r));
}

double root_support_cap(const DensitySpec& spec) {
  return std::visit(overloaded{
                        [](const T1Approx& s) { return s.mu0 + kTailRadius; },
                        [](const T3Approx& s) { return s.mu0 + kTailRadius; },
                        [](const auto&) { return kTailRadius; },
                    },
                    spec);
}

double pvalue(double lambda, const DensitySpec& spec) {
  validate(spec);
  if (!(lambda > 0.0)) return 1.0;
  if (const auto* c = std::get_if<ChiSq>(&spec)) return chisq_pvalue(lambda, c->dof);
  if (std::holds_alternative<SingularityMixtureT1>(spec)) {
    return 0.5 * (chisq_pvalue(lambda, 1) + chisq_pvalue(lambda, 2));
  }

  const double r0 = std::sqrt(lambda);
  const double cap = root_support_cap(spec);
  if (r0 >= cap) return 0.0;
  const auto tail = integrate([&](double r) { return root_density(r, spec); }, r0, cap,
                              kTailOptions);
  return std::clamp(tail.value, 0.0, 1.0);
}

double cdf(double lambda, const DensitySpec& spec) {
  return 1.0 - pvalue(lambda, spec);
}

CdfTable::CdfTable(const DensitySpec& spec, int intervals)
    : spec_(spec), r_max_(root_support_cap(spec)) {
  validate(spec);
  if (intervals < 2) throw std::domain_error("CdfTable needs at least 2 intervals");
  step_ = r_max_ / intervals;
  cdf_.resize(intervals + 1);
  slope_.resize(intervals + 1);
  auto density = [&](double r) { return root_density(r, spec_); };
  constexpr QuadratureOptions panel{1e-14, 1e-15, 200};
  cdf_[0] = 0.0;
  slope_[0] = density(0.0);
  for (int k = 1; k <= intervals; ++k) {
    const double a = (k - 1) * step_;
    const double b = k * step_;
    cdf_[k] = cdf_[k - 1] + integrate(density, a, b, panel).value;
    slope_[k] = density(b);
  }
}

double CdfTable::operator()(double lambda) const {
  if (!(lambda > 0.0)) return 0.0;
  const double r = std::sqrt(lambda);
  if (r >= r_max_) return std::min(1.0, cdf_.back());
  const auto k = static_cast<std::size_t>(r / step_);
  const double t = r / step_ - static_cast<double>(k);
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  const double value = h00 * cdf_[k] + h10 * step_ * slope_[k] + h01 * cdf_[k + 1] +
                       h11 * step_ * slope_[k + 1];
  return std::clamp(value, 0.0, 1.0);
}

double ks_distance(const std::vector<double>& sorted, const CdfTable& table) {
  if (sorted.empty()) throw std::domain_error("ks_distance needs at least one sample");
  const double n = static_cast<double>(sorted.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = table(sorted[i]);
    worst = std::max({worst, f - static_cast<double>(i) / n,
                      static_cast<double>(i + 1) / n - f});
  }
  return worst;
}

}  // namespace slrt
