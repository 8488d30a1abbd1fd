#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "abhlab/assembly.hpp"
#include "abhlab/legendre.hpp"

namespace abh {

/// Steady-state solution of [-omega^2 M + K] tau0 = f0 at one drive frequency.
struct HarmonicSolution {
  double omega = 0.0;        ///< angular drive frequency (rad/s)
  Eigen::VectorXcd tau0;     ///< complex generalized coordinates
  double residual = 0.0;     ///< relative residual of the linear solve
};

/// One natural mode: frequency and modal loss factor Im(lambda)/Re(lambda).
struct Mode {
  double frequency_hz = 0.0;
  double eta_modal = 0.0;
};

/// Solves the harmonic forced-response system at omega > 0. Throws
/// ResonanceError when the dynamic stiffness is singular to working precision
/// (an undamped resonance) and SolverError when the residual exceeds 1e-8.
HarmonicSolution harmonic_response(const SpectralModel& model, double omega);

/// Eigenvalues of the pencil (K, M), ascending by |lambda|, including the two
/// rigid-body values. M is reduced by Cholesky; a purely real K takes the
/// self-adjoint path and returns exactly real eigenvalues.
Eigen::VectorXcd generalized_eigenvalues(const SpectralModel& model);

/// First `count` elastic natural modes (rigid-body pair excluded), sorted by
/// frequency. Requires count <= n - 2.
std::vector<Mode> modal_frequencies(const SpectralModel& model, int count);

/// Complex transverse displacement amplitude W(x) = sum_l tau0_l phi_l(x) on
/// a grid of stations; the physical field is Re(W(x) e^{i omega t}).
Eigen::VectorXcd displacement_amplitude(const HarmonicSolution& sol,
                                        const BasisSet& basis,
                                        const std::vector<double>& x_grid);

/// Smallest basis size, stepping from n_start in increments of `step`, at
/// which every requested modal frequency changes by less than rel_tol when
/// the basis grows by one more step.
int convergent_basis_size(const BeamConfig& cfg, int modes, int n_start,
                          int step, double rel_tol);

}  // namespace abh
