#include "cylwalk/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "cylwalk/error.hpp"

namespace cylwalk {

using std::numbers::ln2;
using std::numbers::pi;

namespace {

constexpr double kQuadTol = 1e-12;

void require_nu(int nu) {
  if (nu < 1) throw Error(ErrorKind::BadDimensions, "nu must be positive, got " + std::to_string(nu));
}

double integrate(auto&& f, double lo, double hi, double& error) {
  static thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  double err = 0.0, l1 = 0.0;
  const double value = integrator.integrate(f, lo, hi, kQuadTol, &err, &l1);
  if (!std::isfinite(value)) throw Error(ErrorKind::QuadratureFailure, "non-finite integral");
  error += err;
  return value;
}

}  // namespace

std::string_view to_string(FreeEnergyMethod method) {
  switch (method) {
    case FreeEnergyMethod::FiniteR: return "finite-r";
    case FreeEnergyMethod::Integral: return "integral";
    case FreeEnergyMethod::DensityClosedForm: return "density-closed-form";
  }
  return "unknown";
}

double log_cos_power_sum(std::span<const double> angles, int N) {
  if (angles.empty()) throw Error(ErrorKind::InvalidCount, "empty cosine sum");
  if (N == 0) return std::log(static_cast<double>(angles.size()));

  double top = -std::numeric_limits<double>::infinity();
  for (double th : angles) top = std::max(top, N * std::log(std::abs(std::cos(th))));
  if (!std::isfinite(top)) throw Error(ErrorKind::InvalidCount, "all cosines vanish");

  double sum = 0.0;
  for (double th : angles) {
    const double c = std::cos(th);
    if (c == 0.0) continue;
    const double term = std::exp(N * std::log(std::abs(c)) - top);
    sum += (c < 0.0 && N % 2 == 1) ? -term : term;
  }
  if (!(sum > 0.0)) throw Error(ErrorKind::InvalidCount, "cosine power sum is not positive");
  return top + std::log(sum);
}

FreeEnergyReport free_energy_finite(int N, int r, int nu) {
  require_nu(nu);
  if (r < 1 || N < 0) throw Error(ErrorKind::BadDimensions, "need r >= 1 and N >= 0");
  const double eps = r % 2 == 0 ? 0.5 : 0.0;
  std::vector<double> angles(static_cast<std::size_t>(nu));
  double total = r * (N * ln2 - std::log(static_cast<double>(nu)));
  double magnitude = std::abs(total);
  for (int m = 0; m < r; ++m) {
    for (int l = 0; l < nu; ++l) angles[static_cast<std::size_t>(l)] = 2.0 * pi * (l + (m + eps) / r) / nu;
    const double term = log_cos_power_sum(angles, N);
    total += term;
    magnitude += std::abs(term);
  }
  FreeEnergyReport rep;
  rep.nu = nu;
  rep.N = N;
  rep.method = FreeEnergyMethod::FiniteR;
  rep.r_used = r;
  rep.value = -total / (static_cast<double>(nu) * r);
  rep.error_estimate = 4.0 * std::numeric_limits<double>::epsilon() * magnitude / (static_cast<double>(nu) * r);
  return rep;
}

FreeEnergyReport free_energy_integral(int N, int nu) {
  require_nu(nu);
  if (N < 0) throw Error(ErrorKind::BadDimensions, "N must be nonnegative");
  std::vector<double> angles(static_cast<std::size_t>(nu));
  auto integrand = [&](double t) {
    for (int k = 0; k < nu; ++k) angles[static_cast<std::size_t>(k)] = 2.0 * pi * (k + t) / nu;
    return log_cos_power_sum(angles, N);
  };
  // The cosine sum can only vanish at multiples of 1/4 (nu = 1, 2), so those
  // are made interval endpoints.
  double error = 0.0, integral = 0.0;
  for (int piece = 0; piece < 4; ++piece) integral += integrate(integrand, piece / 4.0, (piece + 1) / 4.0, error);

  FreeEnergyReport rep;
  rep.nu = nu;
  rep.N = N;
  rep.method = FreeEnergyMethod::Integral;
  rep.value = -((N * ln2 - std::log(static_cast<double>(nu))) + integral) / nu;
  rep.error_estimate = error / nu;
  return rep;
}

DominatingTerm dominating_term(int nu, double t) {
  require_nu(nu);
  std::vector<double> cosines(static_cast<std::size_t>(nu));
  double best = 0.0;
  for (int k = 0; k < nu; ++k) {
    cosines[static_cast<std::size_t>(k)] = std::cos(2.0 * pi * (k + t) / nu);
    best = std::max(best, std::abs(cosines[static_cast<std::size_t>(k)]));
  }
  constexpr double slack = 1e-12;  // |cos| <= 1, so an absolute slack; covers nu = 2, t = 1/2 where all vanish
  std::optional<int> negative_pick;
  for (int k = 0; k < nu; ++k) {
    const double c = cosines[static_cast<std::size_t>(k)];
    if (std::abs(c) < best - slack) continue;
    if (c >= -slack) return {k, false};
    if (!negative_pick) negative_pick = k;
  }
  return {*negative_pick, true};
}

double log_cos_integral(double b, double* error) {
  if (!(b > 0.0 && b <= 0.25)) throw Error(ErrorKind::QuadratureFailure, "half-width must lie in (0, 1/4]");
  // Symmetric in t; integrate over [0, b] in the distance d = b - t to the
  // possibly singular endpoint, where cos(2 pi (b - d)) = sin(2 pi d) for b = 1/4.
  const bool singular = b == 0.25;
  auto f = [&](double d) {
    const double c = singular ? std::sin(2.0 * pi * d) : std::cos(2.0 * pi * (b - d));
    return std::log(c);
  };
  double err = 0.0;
  const double value = 2.0 * integrate(f, 0.0, b, err);
  if (error) *error = 2.0 * err;
  return value;
}

FreeEnergyReport free_energy_density(int nu) {
  require_nu(nu);
  double err = 0.0, integral = 0.0;
  if (nu % 2 == 0) {
    integral = log_cos_integral(1.0 / (2.0 * nu), &err);
  } else {
    integral = 2.0 * log_cos_integral(1.0 / (4.0 * nu), &err);
    err *= 2.0;
  }
  FreeEnergyReport rep;
  rep.nu = nu;
  rep.method = FreeEnergyMethod::DensityClosedForm;
  rep.value = -ln2 / nu - integral;
  rep.error_estimate = err;
  return rep;
}

}  // namespace cylwalk
