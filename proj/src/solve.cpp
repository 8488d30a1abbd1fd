#include "abhlab/solve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "abhlab/errors.hpp"
#include "abhlab/kernels.hpp"

namespace abh {

namespace {

constexpr double kResidualTol = 1e-8;
constexpr double kRcondFloor = 1e-12;

bool imag_is_zero(const Eigen::MatrixXcd& K) {
  return (K.imag().array() == 0.0).all();
}

/// A = L^{-1} K L^{-T} for the Cholesky factor L of M; K symmetric.
Eigen::MatrixXd reduce_pencil(const Eigen::MatrixXd& Lfac,
                              const Eigen::MatrixXd& K) {
  Eigen::MatrixXd Y = Lfac.triangularView<Eigen::Lower>().solve(K);
  return Lfac.triangularView<Eigen::Lower>().solve(Y.transpose().eval());
}

Eigen::MatrixXcd reduce_pencil(const Eigen::MatrixXd& Lfac,
                               const Eigen::MatrixXcd& K) {
  const Eigen::MatrixXcd Lc = Lfac.cast<Complex>();
  Eigen::MatrixXcd Y = Lc.triangularView<Eigen::Lower>().solve(K);
  return Lc.triangularView<Eigen::Lower>().solve(Y.transpose().eval());
}

}  // namespace

HarmonicSolution harmonic_response(const SpectralModel& model, double omega) {
  if (!(omega > 0.0))
    throw std::invalid_argument("drive frequency must be positive");

  const Eigen::MatrixXcd A =
      model.K - (omega * omega) * model.M.cast<Complex>();
  const Eigen::VectorXcd f = model.f0.cast<Complex>();

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
  const double rc = lu.rcond();
  if (!(rc > kRcondFloor))
    throw ResonanceError(omega,
                         "dynamic stiffness is singular to working precision "
                         "at omega = " +
                             std::to_string(omega) +
                             " rad/s (undamped resonance)");

  HarmonicSolution sol;
  sol.omega = omega;
  sol.tau0 = lu.solve(f);
  const double fnorm = f.norm();
  sol.residual = fnorm > 0.0 ? (A * sol.tau0 - f).norm() / fnorm : 0.0;
  if (!sol.tau0.allFinite() || !(sol.residual <= kResidualTol))
    throw SolverError("harmonic solve failed: relative residual " +
                      std::to_string(sol.residual) + " at omega = " +
                      std::to_string(omega) + " rad/s");
  return sol;
}

Eigen::VectorXcd generalized_eigenvalues(const SpectralModel& model) {
  Eigen::LLT<Eigen::MatrixXd> llt(model.M);
  if (llt.info() != Eigen::Success)
    throw SolverError("mass matrix is not positive definite");
  const Eigen::MatrixXd Lfac = llt.matrixL();

  Eigen::VectorXcd lambda(model.n);
  if (imag_is_zero(model.K)) {
    // Undamped section: the reduced problem is real symmetric, so the
    // eigenvalues come back exactly real.
    Eigen::MatrixXd A = reduce_pencil(Lfac, Eigen::MatrixXd(model.K.real()));
    A = 0.5 * (A + A.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A,
                                                      Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw SolverError("symmetric eigensolver did not converge");
    lambda = es.eigenvalues().cast<Complex>();
  } else {
    const Eigen::MatrixXcd A = reduce_pencil(Lfac, model.K);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A, false);
    if (es.info() != Eigen::Success)
      throw SolverError("complex eigensolver did not converge");
    lambda = es.eigenvalues();
  }
  std::sort(lambda.begin(), lambda.end(),
            [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  return lambda;
}

std::vector<Mode> modal_frequencies(const SpectralModel& model, int count) {
  if (count < 1 || count > model.n - 2)
    throw std::invalid_argument("mode count must be in [1, n - 2]");

  Eigen::VectorXcd lambda = generalized_eigenvalues(model);

  // The two smallest |lambda| are the free-free rigid-body pair.
  std::vector<Mode> modes;
  modes.reserve(model.n - 2);
  for (int i = 2; i < model.n; ++i) {
    const double re = lambda[i].real();
    const double im = lambda[i].imag();
    if (!(re > 0.0))
      throw SolverError("non-positive elastic eigenvalue encountered");
    modes.push_back({std::sqrt(re) / (2.0 * std::numbers::pi), im / re});
  }
  std::sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) {
    return a.frequency_hz < b.frequency_hz;
  });
  modes.resize(count);
  return modes;
}

Eigen::VectorXcd displacement_amplitude(const HarmonicSolution& sol,
                                        const BasisSet& basis,
                                        const std::vector<double>& x_grid) {
  const int npts = static_cast<int>(x_grid.size());
  const int n = basis.size();
  if (static_cast<int>(sol.tau0.size()) != n)
    throw std::invalid_argument("solution size does not match basis size");

  std::vector<double> phi, d2;
  basis.tables(x_grid, phi, d2);

  Eigen::VectorXcd W = Eigen::VectorXcd::Zero(npts);
  for (int l = 0; l < n; ++l) {
    const double* row = phi.data() + static_cast<size_t>(l) * npts;
    const Complex t = sol.tau0[l];
    for (int p = 0; p < npts; ++p) W[p] += t * row[p];
  }
  return W;
}

int convergent_basis_size(const BeamConfig& cfg, int modes, int n_start,
                          int step, double rel_tol) {
  if (n_start < modes + 2 || step < 1 || !(rel_tol > 0.0))
    throw std::invalid_argument("bad convergence-scan parameters");
  constexpr int kMaxBasis = 400;

  auto freqs = [&](int n) {
    BasisSet basis(n, cfg.L);
    return modal_frequencies(assemble(cfg, basis), modes);
  };

  std::vector<Mode> prev = freqs(n_start);
  for (int n = n_start + step; n <= kMaxBasis; n += step) {
    std::vector<Mode> cur = freqs(n);
    double worst = 0.0;
    for (int i = 0; i < modes; ++i)
      worst = std::max(worst, std::abs(cur[i].frequency_hz -
                                       prev[i].frequency_hz) /
                                  cur[i].frequency_hz);
    if (worst < rel_tol) return n - step;
    prev = std::move(cur);
  }
  throw SolverError("modal frequencies did not converge below basis size " +
                    std::to_string(kMaxBasis));
}

}  // namespace abh
