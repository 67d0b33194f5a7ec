#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace cylwalk {

enum class FreeEnergyMethod { FiniteR, Integral, DensityClosedForm };

std::string_view to_string(FreeEnergyMethod method);

struct FreeEnergyReport {
  int nu = 1;
  std::optional<int> N;  // empty for the N -> infinity density
  double value = 0.0;
  FreeEnergyMethod method = FreeEnergyMethod::FiniteR;
  int r_used = 0;  // finite-r only
  double error_estimate = 0.0;
};

/// log(sum_k cos(theta_k)^N) evaluated in log space. Exactly-zero cosines
/// contribute nothing; throws Error(InvalidCount) if the sum is not positive.
double log_cos_power_sum(std::span<const double> angles, int N);

/// -(1/(nu r)) log Z(N, r, nu) from the product-of-cosine-sums closed form,
/// accumulated as a sum of logarithms.
FreeEnergyReport free_energy_finite(int N, int r, int nu);

/// The r -> infinity limit of free_energy_finite: the Riemann sum over
/// (m + eps)/r becomes an integral over t in [0, 1].
FreeEnergyReport free_energy_integral(int N, int nu);

struct DominatingTerm {
  int k = 0;
  bool negative = false;  // the dominating cosine is negative
};

/// Index k in [0, nu) maximising |cos(2 pi (k + t) / nu)|. Ties within
/// rounding go to a nonnegative cosine, then to the smallest k.
DominatingTerm dominating_term(int nu, double t);

/// Free energy per lattice site in the two-dimensional limit:
///   even nu: -log(2)/nu -     int_{-1/(2nu)}^{1/(2nu)} log cos(2 pi t) dt
///   odd nu:  -log(2)/nu - 2 * int_{-1/(4nu)}^{1/(4nu)} log cos(2 pi t) dt
FreeEnergyReport free_energy_density(int nu);

/// int_{-b}^{b} log cos(2 pi t) dt for 0 < b <= 1/4, with the logarithmic
/// singularity at b = 1/4 handled.
double log_cos_integral(double b, double* error = nullptr);

}  // namespace cylwalk
