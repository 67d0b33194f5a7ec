#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cylwalk/laurent.hpp"
#include "cylwalk/numeric.hpp"

namespace cylwalk {

/// Square matrix of Laurent polynomials, row-major.
class PolyMatrix {
 public:
  explicit PolyMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  LaurentPoly2& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  const LaurentPoly2& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

  static PolyMatrix identity(int n);

 private:
  int n_;
  std::vector<LaurentPoly2> entries_;
};

using ComplexMatrix = Eigen::MatrixXcd;

/// Exact determinant over Z[x, y, 1/y]. Each row is first multiplied by a
/// power of y that clears its negative y exponents; the resulting integer
/// polynomial matrix is reduced by fraction-free (Bareiss) elimination with
/// exact divisions, and the y power is divided back out at the end.
LaurentPoly2 det_exact(const PolyMatrix& m);

/// Determinant by LU with partial pivoting.
Complex det_complex(const ComplexMatrix& m);

/// Product of the row 2-norms. Bounds |det m| and sets the scale of the
/// rounding error of any floating determinant route, including near-singular m.
double hadamard_bound(const ComplexMatrix& m);

/// Row i is the first row cyclically shifted right by i.
ComplexMatrix circulant_matrix(std::span<const Complex> a);

/// Entry (i, j) is a[j-i] on and above the diagonal and -a[r+j-i] below it.
ComplexMatrix skew_circulant_matrix(std::span<const Complex> a);

/// prod_{m<r} sum_{k<r} w_m^k a_k with w_m = exp(2 m pi i / r).
Complex circulant_det(std::span<const Complex> a);

/// prod_{m<r} sum_{k<r} w_m^k a_k with w_m = exp((2m+1) pi i / r).
Complex skew_circulant_det(std::span<const Complex> a);

/// Entries exp(-2 pi i (i + s) j / r) for i, j in [0, r), with s = 1/2 when
/// `shifted` and s = 0 otherwise.
ComplexMatrix fourier_matrix(int r, bool shifted);

/// Closed form r^(r/2) * i^((r+2)(r-1)/2), or r^(r/2) * i^(r(r-1)/2) if shifted.
Complex fourier_det_closed_form(int r, bool shifted);

/// Determinant of fourier_matrix(r, shifted). Throws Error(FormulaMismatch)
/// if it disagrees with fourier_det_closed_form under `tol`.
Complex fourier_det(int r, bool shifted, const Tolerance& tol = {});

/// i^k for integer k, exact.
Complex i_power(long k);

}  // namespace cylwalk
