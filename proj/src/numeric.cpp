#include "cylwalk/numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace cylwalk {

bool Tolerance::close(Complex value, Complex reference) const {
  return std::abs(value - reference) <= rel * std::max(1.0, std::abs(reference));
}

bool Tolerance::close(Complex value, Complex reference, double scale) const {
  return std::abs(value - reference) <= rel * std::max({1.0, std::abs(reference), scale});
}

Tolerance Tolerance::from_env() {
  Tolerance tol;
  if (const char* env = std::getenv("WALKERS_TOL")) {
    try {
      const double v = std::stod(env);
      if (v > 0.0) tol.rel = v;
    } catch (const std::exception&) {
      // unparsable: keep the default
    }
  }
  return tol;
}

}  // namespace cylwalk
