#pragma once

#include <string>

#include <Eigen/Dense>

#include "abhlab/config.hpp"
#include "abhlab/legendre.hpp"
#include "abhlab/section.hpp"

namespace abh {

/// Discrete mass/stiffness/forcing model of the tapered composite beam in the
/// Legendre trial space. M is real SPD, K is complex symmetric (K = K^T, not
/// conjugated), and f0 holds the point-force projections.
struct SpectralModel {
  Eigen::MatrixXd M;
  Eigen::MatrixXcd K;
  Eigen::VectorXd f0;
  int n = 0;
  int quad_order = 0;
};

/// Recommended Gauss nodes per quadrature segment for a basis of size n and a
/// taper exponent m: enough for the polynomial part of the integrands plus a
/// margin for the non-polynomial neutral-axis factor.
int min_quadrature_order(int n, double m);

/// Assembles M_lj = ∫ mu phi_l phi_j dx, K_lj = ∫ D phi_l'' phi_j'' dx and
/// f0_j = F0 phi_j(L3). Integration is segment-wise over [0,L1], [L1,L2],
/// [L2,L] so the section discontinuities coincide with panel edges.
/// quad_order = 0 selects min_quadrature_order(n, m); an explicit order below
/// the polynomial exactness bound throws ConfigError. Non-finite section
/// values surface as AssemblyError.
SpectralModel assemble(const BeamConfig& cfg, const BasisSet& basis,
                       int quad_order = 0);

/// Writes M, K and f0 as whitespace-delimited matrix files (complex entries
/// as "re im" pairs) under the given path prefix, for debugging.
void dump_model(const SpectralModel& model, const std::string& prefix);

}  // namespace abh
