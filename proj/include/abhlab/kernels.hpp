#pragma once

namespace abh::kernels {

/// Hot inner loops shared by assembly and wavefield reconstruction. Each entry
/// has a portable scalar reference implementation and an AVX2/FMA variant; the
/// two are interchangeable to roundoff and are equivalence-tested against each
/// other.
struct Ops {
  /// Fills row-major tables P and D2 (both n x npts) with the Legendre values
  /// P_l(xi_p) and reference-coordinate second derivatives P_l''(xi_p) for
  /// l = 0..n-1 at the points xi[0..npts-1].
  void (*legendre_tables)(int n, int npts, const double* xi, double* P,
                          double* D2);

  /// Weighted Gram matrix C = A * diag(s) * A^T for row-major A (n x npts):
  /// C[l*n + j] = sum_p A[l*npts+p] * s[p] * A[j*npts+p]. The upper triangle
  /// is computed and mirrored, so C is exactly symmetric.
  void (*weighted_gram)(int n, int npts, const double* A, const double* s,
                        double* C);

  /// Harmonic field snapshot w[i] = re[i]*c - im[i]*s for a phase angle with
  /// cosine c and sine s.
  void (*harmonic_field)(int count, const double* re, const double* im,
                         double c, double s, double* w);

  /// Complex magnitude out[i] = sqrt(re[i]^2 + im[i]^2).
  void (*complex_abs)(int count, const double* re, const double* im,
                      double* out);

  const char* name;
};

/// Portable reference implementation (always available).
const Ops& scalar_ops();

/// AVX2+FMA implementation; call only when avx2_available() is true.
const Ops& avx2_ops();

/// True when the CPU supports AVX2 and FMA.
bool avx2_available();

/// Implementation selected at first use: ABHLAB_KERNELS=scalar|avx2 forces a
/// variant (avx2 on an unsupported CPU is an error); otherwise the best
/// supported variant wins.
const Ops& active();

}  // namespace abh::kernels
