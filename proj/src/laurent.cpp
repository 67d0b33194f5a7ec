#include "cylwalk/laurent.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include "cylwalk/error.hpp"

namespace cylwalk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::BadDimensions: return "BadDimensions";
    case ErrorKind::BadCylinder: return "BadCylinder";
    case ErrorKind::NegativeLength: return "NegativeLength";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::NonpositiveY: return "NonpositiveY";
    case ErrorKind::FormulaMismatch: return "FormulaMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidCount: return "InvalidCount";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::InexactDivision: return "InexactDivision";
  }
  return "Unknown";
}

LaurentPoly2::LaurentPoly2(long constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

LaurentPoly2::LaurentPoly2(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

LaurentPoly2 LaurentPoly2::monomial(const mpz_class& coeff, int xexp, int yexp) {
  LaurentPoly2 p;
  p.add_term(coeff, xexp, yexp);
  return p;
}

mpz_class LaurentPoly2::coefficient(int xexp, int yexp) const {
  auto it = terms_.find({yexp, xexp});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly2::add_term(const mpz_class& coeff, int xexp, int yexp) {
  if (coeff == 0) return;
  if (xexp < 0) throw std::invalid_argument("LaurentPoly2: negative x exponent");
  auto [it, inserted] = terms_.try_emplace(Monomial{yexp, xexp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m.x, m.y);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m.x, m.y);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 out;
  mpz_class prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(prod, ma.x + mb.x, ma.y + mb.y);
    }
  }
  return out;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly2 LaurentPoly2::shift_y(int k) const {
  LaurentPoly2 out;
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Monomial{m.y + k, m.x}, c);
  return out;
}

LaurentPoly2 LaurentPoly2::divide_exact(const LaurentPoly2& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InexactDivision, "division by zero polynomial");
  if (is_zero()) return {};

  // If this == divisor * q, the monomials of q lie in the box spanned by the
  // differences of the extreme exponents; anything outside means inexact.
  const auto [fx0, fx1] = x_range();
  const auto [gx0, gx1] = divisor.x_range();
  const auto [fy0, fy1] = y_range();
  const auto [gy0, gy1] = divisor.y_range();
  const int qx_lo = fx0 - gx0, qx_hi = fx1 - gx1;
  const int qy_lo = fy0 - gy0, qy_hi = fy1 - gy1;

  const auto& [glead_m, glead_c] = *divisor.terms_.rbegin();
  LaurentPoly2 rem = *this;
  LaurentPoly2 quot;
  mpz_class qc;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.rbegin();
    const int qx = rm.x - glead_m.x;
    const int qy = rm.y - glead_m.y;
    if (qx < qx_lo || qx > qx_hi || qy < qy_lo || qy > qy_hi || !mpz_divisible_p(rc.get_mpz_t(), glead_c.get_mpz_t())) {
      throw Error(ErrorKind::InexactDivision, "divisor does not divide dividend");
    }
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), glead_c.get_mpz_t());
    quot.add_term(qc, qx, qy);
    for (const auto& [gm, gc] : divisor.terms_) rem.add_term(-(qc * gc), gm.x + qx, gm.y + qy);
  }
  return quot;
}

LaurentPoly2 LaurentPoly2::substitute_y(int value) const {
  if (value != 1 && value != -1) throw std::invalid_argument("substitute_y: value must be +1 or -1");
  LaurentPoly2 out;
  for (const auto& [m, c] : terms_) {
    const bool flip = value == -1 && (m.y % 2 != 0);
    out.add_term(flip ? mpz_class(-c) : c, m.x, 0);
  }
  return out;
}

LaurentPoly2 LaurentPoly2::coefficient_of_y(int c) const {
  LaurentPoly2 out;
  for (auto it = terms_.lower_bound({c, std::numeric_limits<int>::min()});
       it != terms_.end() && it->first.y == c; ++it) {
    out.terms_.emplace_hint(out.terms_.end(), Monomial{0, it->first.x}, it->second);
  }
  return out;
}

std::complex<double> LaurentPoly2::evaluate(std::complex<double> x, std::complex<double> y) const {
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : terms_) {
    sum += c.get_d() * std::pow(x, m.x) * std::pow(y, m.y);
  }
  return sum;
}

mpz_class LaurentPoly2::sum_coefficients() const {
  mpz_class s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

mpz_class LaurentPoly2::evaluate_x(const mpz_class& x) const {
  mpz_class s = 0, pw;
  for (const auto& [m, c] : terms_) {
    mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m.x));
    s += c * pw;
  }
  return s;
}

std::pair<int, int> LaurentPoly2::x_range() const {
  if (is_zero()) return {0, 0};
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const auto& [m, c] : terms_) {
    lo = std::min(lo, m.x);
    hi = std::max(hi, m.x);
  }
  return {lo, hi};
}

std::pair<int, int> LaurentPoly2::y_range() const {
  if (is_zero()) return {0, 0};
  return {terms_.begin()->first.y, terms_.rbegin()->first.y};
}

std::string LaurentPoly2::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool bare = m.x == 0 && m.y == 0;
    bool need_star = false;
    if (mag != 1 || bare) {
      os << mag.get_str();
      need_star = true;
    }
    if (m.x != 0) {
      if (need_star) os << '*';
      os << 'x';
      if (m.x != 1) os << '^' << m.x;
      need_star = true;
    }
    if (m.y != 0) {
      if (need_star) os << '*';
      os << 'y';
      if (m.y != 1) os << '^' << m.y;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p) { return os << p.to_string(); }

}  // namespace cylwalk
