#pragma once

#include <vector>

#include "cylwalk/lattice.hpp"
#include "cylwalk/laurent.hpp"
#include "cylwalk/linalg.hpp"
#include "cylwalk/numeric.hpp"

namespace cylwalk {

/// Matrix of single-path generating functions q(M, N, a_i, e_j; x, y).
PolyMatrix path_matrix(const CylinderConfig& config);

/// Generating function of nonintersecting families on the cylinder where a
/// family contributes sgn(mu^p) * x^(clockwise steps) * y^(total offset).
/// Setting y = 1 gives the signed x-only generating function.
LaurentPoly2 signed_gf_det(const CylinderConfig& config);

enum class SubstitutionOrder { BeforeDeterminant, AfterDeterminant };

/// Unsigned generating function in x: the determinant with y := (-1)^(r-1).
/// Coefficients are nonnegative and the value at x = 1 is the family count.
LaurentPoly2 unsigned_count_gf(const CylinderConfig& config,
                               SubstitutionOrder order = SubstitutionOrder::BeforeDeterminant);

/// Root-of-unity determinant form of unsigned_count_gf evaluated at x. The
/// specialisation y = (-1)^(r-1) enters through exp((r-1) pi i / M) phases.
Complex trig_gf_det(const CylinderConfig& config, double x);

/// Equidistant starts a_i = i*nu on the (r*nu)-cylinder: unsigned
/// generating function at x as an r x r determinant of nu-term sums, after
/// factoring out a Fourier matrix. Throws Error(DimensionMismatch) if
/// e.size() != r, and the validate_config errors for invalid endpoints.
Complex equidistant_trig_det(int r, int nu, const std::vector<int>& e, int N, double x);

/// Equidistant start and end points (i*nu), i = 0..r-1, on the (r*nu)-cylinder.
CylinderConfig equidistant_config(int N, int r, int nu);

/// Product-of-cosine-sums closed form for the number of equidistant
/// families, in double precision.
double z_closed_form(int N, int r, int nu);

/// Exact count via the determinant route.
mpz_class z_exact(int N, int r, int nu);

struct ZCountResult {
  double closed_form_value = 0.0;
  mpz_class rounded;
  mpz_class exact;
  bool methods_agree = false;
};

/// Both routes for Z(N, r, nu). Throws Error(ParityViolation) when the
/// equidistant configuration fails the parity hypothesis.
ZCountResult z_count(int N, int r, int nu);

/// Coefficient of y^c in signed_gf_det: the signed generating function of
/// the families whose offsets sum to c.
LaurentPoly2 gk_coefficient(const CylinderConfig& config, int c);

}  // namespace cylwalk
