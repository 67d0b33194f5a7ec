#include "cylwalk/genfunc.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cylwalk/error.hpp"

namespace cylwalk {

namespace {

int floor_div(int num, int den) {
  int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

int ceil_div(int num, int den) { return -floor_div(-num, den); }

void check_cylinder(int M, int N, bool allow_unit) {
  if (M < 1 || (M == 1 && !allow_unit)) throw Error(ErrorKind::BadCylinder, "M must exceed 1, got " + std::to_string(M));
  if (N < 0) throw Error(ErrorKind::NegativeLength, "N must be nonnegative, got " + std::to_string(N));
}

}  // namespace

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::pair<int, int> offset_bounds(int M, int N, int a, int e) {
  return {ceil_div(a - e - N, M), floor_div(N + a - e, M)};
}

LaurentPoly2 q_poly(int M, int N, int a, int e, bool allow_unit_cylinder) {
  check_cylinder(M, N, allow_unit_cylinder);
  LaurentPoly2 q;
  const auto [lo, hi] = offset_bounds(M, N, a, e);
  for (int o = lo; o <= hi; ++o) {
    const int twice_k = N - e - o * M + a;
    if (twice_k % 2 != 0) continue;
    const int k = twice_k / 2;
    q.add_term(binomial(static_cast<unsigned long>(N), static_cast<unsigned long>(k)), k, o);
  }
  return q;
}

Complex q_trig(int M, int N, int a, int e, Complex x, double y) {
  check_cylinder(M, N, true);
  if (!(y > 0.0)) throw Error(ErrorKind::NonpositiveY, "y must be positive, got " + std::to_string(y));
  using std::numbers::pi;
  const double root = std::pow(y, 1.0 / M);
  const Complex I(0.0, 1.0);
  Complex sum = 0.0;
  for (int l = 0; l < M; ++l) {
    const Complex w = std::exp(I * (2.0 * pi * l / M));
    const Complex phase = std::exp(-I * (2.0 * pi * static_cast<double>(e - a) * l / M));
    sum += phase * std::pow(x / root / w + root * w, N);
  }
  return std::pow(y, static_cast<double>(a - e) / M) / static_cast<double>(M) * sum;
}

long roots_of_unity_powersum(long M, long m) { return (m % M == 0) ? M : 0; }

bool verify_q_relations(int M, int N, int a, int e) {
  const LaurentPoly2 q = q_poly(M, N, a, e);
  const LaurentPoly2 q_swapped = q_poly(M, N, e, a);

  LaurentPoly2 reflected;
  for (const auto& [m, c] : q_swapped.terms()) reflected.add_term(c, N - m.x, -m.y);
  if (reflected != q) return false;

  return q == q_poly(M, N, a, e + M).shift_y(1);
}

}  // namespace cylwalk
