#include "cylwalk/formulas.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cylwalk/error.hpp"
#include "cylwalk/genfunc.hpp"

namespace cylwalk {

using std::numbers::pi;

PolyMatrix path_matrix(const CylinderConfig& config) {
  const int r = config.r();
  PolyMatrix m(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = q_poly(config.M, config.N, config.a[i], config.e[j]);
  return m;
}

LaurentPoly2 signed_gf_det(const CylinderConfig& config) { return det_exact(path_matrix(config)); }

LaurentPoly2 unsigned_count_gf(const CylinderConfig& config, SubstitutionOrder order) {
  const int y_value = config.r() % 2 == 1 ? 1 : -1;
  if (order == SubstitutionOrder::AfterDeterminant) return signed_gf_det(config).substitute_y(y_value);

  PolyMatrix m = path_matrix(config);
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) m(i, j) = m(i, j).substitute_y(y_value);
  return det_exact(m);
}

Complex trig_gf_det(const CylinderConfig& config, double x) {
  const int r = config.r();
  const int M = config.M;
  const int N = config.N;
  const double half_turns = (r - 1) / 2.0;
  ComplexMatrix m(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const int diff = config.a[i] - config.e[j];
      Complex sum = 0.0;
      for (int l = 0; l < M; ++l) {
        const double theta = 2.0 * pi * (l + half_turns) / M;
        sum += std::polar(1.0, 2.0 * pi * diff * l / M) * std::pow(x * std::polar(1.0, -theta) + std::polar(1.0, theta), N);
      }
      m(i, j) = std::polar(1.0, (r - 1) * pi * diff / M) * sum;
    }
  }
  return det_complex(m) / std::pow(static_cast<double>(M), r);
}

Complex equidistant_trig_det(int r, int nu, const std::vector<int>& e, int N, double x) {
  if (static_cast<int>(e.size()) != r) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(r) + " end points, got " + std::to_string(e.size()));
  }
  const int M = r * nu;
  std::vector<int> a(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) a[static_cast<std::size_t>(i)] = i * nu;
  validate_config(M, N, a, e);

  const bool even = r % 2 == 0;
  ComplexMatrix m(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const double ej = e[static_cast<std::size_t>(j)];
      Complex sum = 0.0;
      for (int s = 0; s < nu; ++s) {
        const int t = i + s * r;
        if (even) {
          sum += std::polar(1.0, pi * (N - ej * (2.0 * t + 1.0)) / M) *
                 std::pow(x * std::polar(1.0, -2.0 * pi * (t + 1) / M) + std::polar(1.0, 2.0 * pi * t / M), N);
        } else {
          sum += std::polar(1.0, -pi * ej * 2.0 * t / M) *
                 std::pow(x * std::polar(1.0, -2.0 * pi * t / M) + std::polar(1.0, 2.0 * pi * t / M), N);
        }
      }
      m(i, j) = sum;
    }
  }
  const long quarter_turns = even ? -static_cast<long>(r) * (r - 1) / 2 : -static_cast<long>(r + 2) * (r - 1) / 2;
  const double scale = std::pow(nu * std::sqrt(static_cast<double>(r)), -r);
  return i_power(quarter_turns) * scale * det_complex(m);
}

CylinderConfig equidistant_config(int N, int r, int nu) {
  if (r < 1 || nu < 1) throw Error(ErrorKind::BadDimensions, "need r >= 1 and nu >= 1");
  std::vector<int> pts(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) pts[static_cast<std::size_t>(i)] = i * nu;
  return validate_config(r * nu, N, pts, pts);
}

double z_closed_form(int N, int r, int nu) {
  const double eps = r % 2 == 0 ? 0.5 : 0.0;
  double product = std::pow(std::pow(2.0, N) / nu, r);
  for (int m = 0; m < r; ++m) {
    double inner = 0.0;
    for (int l = 0; l < nu; ++l) inner += std::pow(std::cos(2.0 * pi * ((m + eps) / (nu * r) + static_cast<double>(l) / nu)), N);
    product *= inner;
  }
  return product;
}

mpz_class z_exact(int N, int r, int nu) { return unsigned_count_gf(equidistant_config(N, r, nu)).sum_coefficients(); }

ZCountResult z_count(int N, int r, int nu) {
  ZCountResult out;
  out.exact = z_exact(N, r, nu);
  out.closed_form_value = z_closed_form(N, r, nu);
  out.rounded = mpz_class(std::round(out.closed_form_value));
  out.methods_agree = std::abs(out.closed_form_value - out.exact.get_d()) < 0.5 && out.rounded == out.exact;
  return out;
}

LaurentPoly2 gk_coefficient(const CylinderConfig& config, int c) { return signed_gf_det(config).coefficient_of_y(c); }

}  // namespace cylwalk
