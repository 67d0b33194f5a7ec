#pragma once

#include "cylwalk/laurent.hpp"
#include "cylwalk/numeric.hpp"

namespace cylwalk {

mpz_class binomial(unsigned long n, unsigned long k);

/// Generating function of all single paths of length N on the M-cylinder
/// from (a, 0) to (e, N). Each path contributes x^(clockwise steps) *
/// y^(winding offset). Any integer a, e is accepted, so shifting e by M
/// multiplies the result by y^-1.
///
/// Throws Error(BadCylinder) for M <= 1 and Error(NegativeLength) for N < 0.
/// M = 1 is accepted by passing allow_unit_cylinder, for formula checks only.
LaurentPoly2 q_poly(int M, int N, int a, int e, bool allow_unit_cylinder = false);

/// Inclusive range of winding offsets o for which a path can exist:
/// 0 <= (N - e - o*M + a)/2 <= N.
std::pair<int, int> offset_bounds(int M, int N, int a, int e);

/// Root-of-unity form of q_poly at complex x and real y > 0, using the
/// principal M-th root of y. Throws Error(NonpositiveY).
Complex q_trig(int M, int N, int a, int e, Complex x, double y);

/// Sum over l = 0..M-1 of exp(2*pi*i*m*l/M): M if M divides m, else 0.
long roots_of_unity_powersum(long M, long m);

/// Checks the reflection identity q(a,e; x,y) = x^N q(e,a; 1/x,1/y) and the
/// translation identity q(a,e) = y * q(a, e+M), both exactly.
bool verify_q_relations(int M, int N, int a, int e);

}  // namespace cylwalk
