#pragma once

#include <complex>
#include <compare>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace cylwalk {

/// Exponent of a monomial x^x * y^y. Ordered by (y, x), which is the
/// canonical serialization order and a monomial order compatible with
/// multiplication.
struct Monomial {
  int y = 0;
  int x = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  Monomial operator*(const Monomial& o) const { return {y + o.y, x + o.x}; }
};

/// Bivariate Laurent polynomial with integer coefficients. x exponents are
/// nonnegative, y exponents are arbitrary integers. Zero coefficients are
/// never stored.
class LaurentPoly2 {
 public:
  using Terms = std::map<Monomial, mpz_class>;

  LaurentPoly2() = default;
  LaurentPoly2(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly2(const mpz_class& constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly2 monomial(const mpz_class& coeff, int xexp, int yexp = 0);
  static LaurentPoly2 x() { return monomial(1, 1, 0); }
  static LaurentPoly2 y(int power = 1) { return monomial(1, 0, power); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  mpz_class coefficient(int xexp, int yexp) const;
  void add_term(const mpz_class& coeff, int xexp, int yexp);

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  LaurentPoly2 operator-() const;
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  /// Multiply by y^k.
  LaurentPoly2 shift_y(int k) const;

  /// Exact quotient; throws Error(InexactDivision) when divisor does not
  /// divide this polynomial in Z[x, y, 1/y].
  LaurentPoly2 divide_exact(const LaurentPoly2& divisor) const;

  /// Substitute y := value for value in {+1, -1}. The result has only y^0 terms.
  LaurentPoly2 substitute_y(int value) const;

  /// Coefficient of y^c, as a polynomial in x alone.
  LaurentPoly2 coefficient_of_y(int c) const;

  std::complex<double> evaluate(std::complex<double> x, std::complex<double> y) const;

  /// Value at x = 1, y = 1.
  mpz_class sum_coefficients() const;

  /// Value at integer x after substituting y := 1.
  mpz_class evaluate_x(const mpz_class& x) const;

  // Exponent ranges; all return {0, 0} for the zero polynomial.
  std::pair<int, int> x_range() const;
  std::pair<int, int> y_range() const;

  /// Human-readable form in canonical order, e.g. "-x^4*y^-1 + 2*x^2 - y".
  std::string to_string() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p);

}  // namespace cylwalk
