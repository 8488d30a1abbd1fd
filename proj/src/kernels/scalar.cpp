#include <cmath>

#include "abhlab/kernels.hpp"

namespace abh::kernels {

namespace {

void legendre_tables_scalar(int n, int npts, const double* xi, double* P,
                            double* D2) {
  for (int p = 0; p < npts; ++p) {
    const double x = xi[p];
    double p0 = 1.0, p1 = x;        // P_{l-1}, P_l
    double dp0 = 0.0, dp1 = 1.0;    // P'_{l-1}, P'_l
    double d20 = 0.0, d21 = 0.0;    // P''_{l-1}, P''_l
    P[p] = p0;
    D2[p] = 0.0;
    if (n > 1) {
      P[npts + p] = p1;
      D2[npts + p] = 0.0;
    }
    for (int l = 1; l < n - 1; ++l) {
      const double a = 2.0 * l + 1.0;
      const double p2 = (a * x * p1 - l * p0) / (l + 1);
      const double dp2 = a * p1 + dp0;
      const double d22 = a * dp1 + d20;
      p0 = p1;
      p1 = p2;
      dp0 = dp1;
      dp1 = dp2;
      d20 = d21;
      d21 = d22;
      P[(l + 1) * npts + p] = p1;
      D2[(l + 1) * npts + p] = d21;
    }
  }
}

void weighted_gram_scalar(int n, int npts, const double* A, const double* s,
                          double* C) {
  for (int l = 0; l < n; ++l) {
    const double* al = A + static_cast<long>(l) * npts;
    for (int j = l; j < n; ++j) {
      const double* aj = A + static_cast<long>(j) * npts;
      double acc = 0.0;
      for (int p = 0; p < npts; ++p) acc += al[p] * s[p] * aj[p];
      C[static_cast<long>(l) * n + j] = acc;
      C[static_cast<long>(j) * n + l] = acc;
    }
  }
}

void harmonic_field_scalar(int count, const double* re, const double* im,
                           double c, double s, double* w) {
  for (int i = 0; i < count; ++i) w[i] = re[i] * c - im[i] * s;
}

void complex_abs_scalar(int count, const double* re, const double* im,
                        double* out) {
  for (int i = 0; i < count; ++i)
    out[i] = std::sqrt(re[i] * re[i] + im[i] * im[i]);
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{legendre_tables_scalar, weighted_gram_scalar,
                       harmonic_field_scalar, complex_abs_scalar, "scalar"};
  return ops;
}

}  // namespace abh::kernels
