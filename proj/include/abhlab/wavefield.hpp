#pragma once

#include <vector>

#include <Eigen/Dense>

#include "abhlab/config.hpp"
#include "abhlab/solve.hpp"

namespace abh {

/// Steady-state spatiotemporal field w(x_j, t_k) = Re(W(x_j) e^{i omega t_k})
/// on uniform station and time grids. w is stored stations-by-samples.
struct WaveField {
  std::vector<double> x_grid;  ///< stations (m), uniform spacing
  std::vector<double> t_grid;  ///< samples (s), uniform spacing
  Eigen::VectorXcd W;          ///< complex amplitude per station
  Eigen::MatrixXd w;           ///< real samples, nx rows x nt columns
  double omega = 0.0;          ///< angular frequency (rad/s)
};

/// Frequency-wavenumber magnitude spectrum of a WaveField.
struct Spectrum2D {
  std::vector<double> freqs;        ///< Hz, ascending, non-negative
  std::vector<double> wavenumbers;  ///< rad/m, ascending, symmetric about 0
  Eigen::MatrixXd magnitude;        ///< wavenumbers.size() x freqs.size(), peak = 1
};

/// Uniform station grid of the analysis window (stations points spanning
/// [window_lo, window_hi] inclusive).
std::vector<double> analysis_stations(const AnalysisSettings& analysis);

/// Samples the steady-state field over `periods` excitation periods with
/// nt_per_period samples each, on nx stations spanning [x_lo, x_hi].
/// Requires the window inside [0, L], nx >= 32, nt_per_period >= 16.
WaveField reconstruct(const HarmonicSolution& sol, const BasisSet& basis,
                      double x_lo, double x_hi, int nx, int periods,
                      int nt_per_period);

/// Spatial envelope |W(x_j)| of the steady-state response.
Eigen::VectorXd envelope(const WaveField& field);

/// Envelope estimated by scanning the sampled time histories for their peak,
/// as an experimental-pipeline cross-check of envelope().
Eigen::VectorXd time_max_envelope(const WaveField& field);

/// Envelope |W| straight from a harmonic solution on an arbitrary station
/// grid (no time sampling), for sweeps.
Eigen::VectorXd station_envelope(const HarmonicSolution& sol,
                                 const BasisSet& basis,
                                 const std::vector<double>& x_grid);

/// Traveling-wave quality metric (max - min)/(max + min) of an envelope:
/// 0 for a pure traveling wave, 1 for a pure standing wave. An all-zero or
/// negative envelope raises MetricError.
double cost_function(const Eigen::VectorXd& env);

/// 2D Fourier magnitude of w over (x, t), normalized to unit peak. The time
/// axis folds to non-negative frequencies; the wavenumber axis is signed with
/// the convention that a rightward-traveling component cos(omega t - k x),
/// k > 0, peaks at +k. pad_factor zero-pads the spatial axis for peak
/// localization. Requires uniform grids and nx, nt >= 32.
Spectrum2D spectrum_2d(const WaveField& field, int pad_factor = 1);

/// Wavenumber of the globally strongest spectrum cell (rad/m).
double peak_wavenumber(const Spectrum2D& spec);

/// Euler-Bernoulli flexural dispersion k = (mu omega^2 / D)^(1/4).
double dispersion_wavenumber(double omega, double D_real, double mu);

}  // namespace abh
