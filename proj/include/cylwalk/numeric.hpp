#pragma once

#include <complex>

namespace cylwalk {

using Complex = std::complex<double>;

/// Comparison policy for floating evaluations of the trigonometric formulas:
/// |a - b| <= rel * max(1, |reference|).
struct Tolerance {
  double rel = 1e-9;

  bool close(Complex value, Complex reference) const;
  /// Same, with the error measured against max(1, |reference|, scale).
  bool close(Complex value, Complex reference, double scale) const;

  /// Default policy, overridden by the WALKERS_TOL environment variable.
  static Tolerance from_env();
};

}  // namespace cylwalk
