// AVX2/FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; callers must consult avx2_available() before selecting it.

#include "abhlab/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>

namespace abh::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void legendre_tables_avx2(int n, int npts, const double* xi, double* P,
                          double* D2) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  int p = 0;
  for (; p + 4 <= npts; p += 4) {
    const __m256d x = _mm256_loadu_pd(xi + p);
    __m256d p0 = one, p1 = x;
    __m256d dp0 = zero, dp1 = one;
    __m256d d20 = zero, d21 = zero;
    _mm256_storeu_pd(P + p, p0);
    _mm256_storeu_pd(D2 + p, zero);
    if (n > 1) {
      _mm256_storeu_pd(P + npts + p, p1);
      _mm256_storeu_pd(D2 + npts + p, zero);
    }
    for (int l = 1; l < n - 1; ++l) {
      const __m256d a = _mm256_set1_pd(2.0 * l + 1.0);
      const __m256d vl = _mm256_set1_pd(static_cast<double>(l));
      const __m256d vl1 = _mm256_set1_pd(static_cast<double>(l + 1));
      __m256d t = _mm256_mul_pd(x, p1);
      t = _mm256_fmsub_pd(a, t, _mm256_mul_pd(vl, p0));
      const __m256d p2 = _mm256_div_pd(t, vl1);
      const __m256d dp2 = _mm256_fmadd_pd(a, p1, dp0);
      const __m256d d22 = _mm256_fmadd_pd(a, dp1, d20);
      p0 = p1;
      p1 = p2;
      dp0 = dp1;
      dp1 = dp2;
      d20 = d21;
      d21 = d22;
      _mm256_storeu_pd(P + static_cast<long>(l + 1) * npts + p, p1);
      _mm256_storeu_pd(D2 + static_cast<long>(l + 1) * npts + p, d21);
    }
  }
  for (; p < npts; ++p) {
    const double x = xi[p];
    double p0 = 1.0, p1 = x, dp0 = 0.0, dp1 = 1.0, d20 = 0.0, d21 = 0.0;
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

void weighted_gram_avx2(int n, int npts, const double* A, const double* s,
                        double* C) {
  for (int l = 0; l < n; ++l) {
    const double* al = A + static_cast<long>(l) * npts;
    for (int j = l; j < n; ++j) {
      const double* aj = A + static_cast<long>(j) * npts;
      __m256d vacc = _mm256_setzero_pd();
      int p = 0;
      for (; p + 4 <= npts; p += 4) {
        const __m256d ws =
            _mm256_mul_pd(_mm256_loadu_pd(al + p), _mm256_loadu_pd(s + p));
        vacc = _mm256_fmadd_pd(ws, _mm256_loadu_pd(aj + p), vacc);
      }
      double acc = hsum(vacc);
      for (; p < npts; ++p) acc += al[p] * s[p] * aj[p];
      C[static_cast<long>(l) * n + j] = acc;
      C[static_cast<long>(j) * n + l] = acc;
    }
  }
}

void harmonic_field_avx2(int count, const double* re, const double* im,
                         double c, double s, double* w) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  int i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d ims = _mm256_mul_pd(_mm256_loadu_pd(im + i), vs);
    _mm256_storeu_pd(w + i, _mm256_fmsub_pd(_mm256_loadu_pd(re + i), vc, ims));
  }
  for (; i < count; ++i) w[i] = re[i] * c - im[i] * s;
}

void complex_abs_avx2(int count, const double* re, const double* im,
                      double* out) {
  int i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d r = _mm256_loadu_pd(re + i);
    const __m256d m = _mm256_loadu_pd(im + i);
    const __m256d sq = _mm256_fmadd_pd(r, r, _mm256_mul_pd(m, m));
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(sq));
  }
  for (; i < count; ++i) out[i] = std::sqrt(re[i] * re[i] + im[i] * im[i]);
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops{legendre_tables_avx2, weighted_gram_avx2,
                       harmonic_field_avx2, complex_abs_avx2, "avx2"};
  return ops;
}

}  // namespace abh::kernels

#else  // non-x86 build: the symbol must exist, but dispatch never selects it

namespace abh::kernels {
const Ops& avx2_ops() { return scalar_ops(); }
}  // namespace abh::kernels

#endif
