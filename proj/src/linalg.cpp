#include "cylwalk/linalg.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cylwalk/error.hpp"

namespace cylwalk {

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LaurentPoly2 det_exact(const PolyMatrix& input) {
  const int n = input.size();
  PolyMatrix m = input;

  int y_shift = 0;
  for (int i = 0; i < n; ++i) {
    int lowest = 0;
    for (int j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) lowest = std::min(lowest, m(i, j).y_range().first);
    if (lowest < 0) {
      for (int j = 0; j < n; ++j) m(i, j) = m(i, j).shift_y(-lowest);
      y_shift += lowest;
    }
  }

  int sign = 1;
  LaurentPoly2 prev_pivot = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot_row = k;
    while (pivot_row < n && m(pivot_row, k).is_zero()) ++pivot_row;
    if (pivot_row == n) return {};
    if (pivot_row != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(pivot_row, j));
      sign = -sign;
    }
    const LaurentPoly2& pivot = m(k, k);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly2 num = m(i, j) * pivot - m(i, k) * m(k, j);
        m(i, j) = num.divide_exact(prev_pivot);
      }
      m(i, k) = LaurentPoly2{};
    }
    prev_pivot = m(k, k);
  }

  LaurentPoly2 det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det.shift_y(y_shift);
}

Complex det_complex(const ComplexMatrix& m) { return m.partialPivLu().determinant(); }

double hadamard_bound(const ComplexMatrix& m) {
  double h = 1.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) h *= m.row(i).norm();
  return h;
}

ComplexMatrix circulant_matrix(std::span<const Complex> a) {
  const int r = static_cast<int>(a.size());
  ComplexMatrix m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = a[static_cast<std::size_t>(((j - i) % r + r) % r)];
  return m;
}

ComplexMatrix skew_circulant_matrix(std::span<const Complex> a) {
  const int r = static_cast<int>(a.size());
  ComplexMatrix m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = j >= i ? a[static_cast<std::size_t>(j - i)] : -a[static_cast<std::size_t>(r + j - i)];
  return m;
}

namespace {

Complex root_product(std::span<const Complex> a, double offset) {
  using std::numbers::pi;
  const int r = static_cast<int>(a.size());
  Complex product = 1.0;
  for (int m = 0; m < r; ++m) {
    const Complex w = std::polar(1.0, (2.0 * m + offset) * pi / r);
    Complex eigenvalue = 0.0, wk = 1.0;
    for (int k = 0; k < r; ++k) {
      eigenvalue += wk * a[static_cast<std::size_t>(k)];
      wk *= w;
    }
    product *= eigenvalue;
  }
  return product;
}

}  // namespace

Complex circulant_det(std::span<const Complex> a) { return root_product(a, 0.0); }

Complex skew_circulant_det(std::span<const Complex> a) { return root_product(a, 1.0); }

ComplexMatrix fourier_matrix(int r, bool shifted) {
  using std::numbers::pi;
  ComplexMatrix m(r, r);
  const double s = shifted ? 0.5 : 0.0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = std::polar(1.0, -2.0 * pi * (i + s) * j / r);
  return m;
}

Complex i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Complex fourier_det_closed_form(int r, bool shifted) {
  const long k = shifted ? static_cast<long>(r) * (r - 1) / 2 : static_cast<long>(r + 2) * (r - 1) / 2;
  return std::pow(static_cast<double>(r), r / 2.0) * i_power(k);
}

Complex fourier_det(int r, bool shifted, const Tolerance& tol) {
  const Complex det = det_complex(fourier_matrix(r, shifted));
  const Complex expected = fourier_det_closed_form(r, shifted);
  if (!tol.close(det, expected)) {
    std::ostringstream os;
    os << "fourier_det(" << r << (shifted ? ", shifted" : "") << ") = " << det << ", closed form " << expected;
    throw Error(ErrorKind::FormulaMismatch, os.str());
  }
  return det;
}

}  // namespace cylwalk
