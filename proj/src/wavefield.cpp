#include "abhlab/wavefield.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "abhlab/errors.hpp"
#include "abhlab/kernels.hpp"

namespace abh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> uniform_grid(double lo, double hi, int count) {
  std::vector<double> g(count);
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) g[i] = lo + step * i;
  g.back() = hi;
  return g;
}

double uniform_spacing(const std::vector<double>& g, const char* axis) {
  if (g.size() < 2) throw std::domain_error("grid needs at least two points");
  const double d = g[1] - g[0];
  for (size_t i = 1; i + 1 < g.size(); ++i) {
    const double di = g[i + 1] - g[i];
    if (!(std::abs(di - d) <= 1e-9 * std::abs(d)))
      throw std::domain_error(std::string("non-uniform ") + axis + " grid");
  }
  return d;
}

Eigen::VectorXd magnitudes(const Eigen::VectorXcd& W) {
  const int n = static_cast<int>(W.size());
  std::vector<double> re(n), im(n);
  for (int i = 0; i < n; ++i) {
    re[i] = W[i].real();
    im[i] = W[i].imag();
  }
  Eigen::VectorXd out(n);
  kernels::active().complex_abs(n, re.data(), im.data(), out.data());
  return out;
}

}  // namespace

std::vector<double> analysis_stations(const AnalysisSettings& analysis) {
  analysis.validate();
  return uniform_grid(analysis.window_lo, analysis.window_hi,
                      analysis.stations);
}

WaveField reconstruct(const HarmonicSolution& sol, const BasisSet& basis,
                      double x_lo, double x_hi, int nx, int periods,
                      int nt_per_period) {
  if (!(x_lo >= 0.0 && x_lo < x_hi && x_hi <= basis.length()))
    throw std::domain_error("analysis window must lie inside the beam");
  if (nx < 32) throw std::invalid_argument("need at least 32 stations");
  if (periods < 1) throw std::invalid_argument("need at least one period");
  if (nt_per_period < 16)
    throw std::invalid_argument("need at least 16 samples per period");

  WaveField field;
  field.omega = sol.omega;
  field.x_grid = uniform_grid(x_lo, x_hi, nx);
  field.W = displacement_amplitude(sol, basis, field.x_grid);

  // Sample [0, periods*T) without the right endpoint so the record is exactly
  // periodic for the Fourier analysis.
  const int nt = periods * nt_per_period;
  const double dt = kTwoPi / sol.omega / nt_per_period;
  field.t_grid.resize(nt);
  for (int k = 0; k < nt; ++k) field.t_grid[k] = dt * k;

  std::vector<double> re(nx), im(nx);
  for (int j = 0; j < nx; ++j) {
    re[j] = field.W[j].real();
    im[j] = field.W[j].imag();
  }
  field.w.resize(nx, nt);
  const kernels::Ops& ops = kernels::active();
  for (int k = 0; k < nt; ++k) {
    const double phase = sol.omega * field.t_grid[k];
    ops.harmonic_field(nx, re.data(), im.data(), std::cos(phase),
                       std::sin(phase), field.w.col(k).data());
  }
  return field;
}

Eigen::VectorXd envelope(const WaveField& field) { return magnitudes(field.W); }

Eigen::VectorXd time_max_envelope(const WaveField& field) {
  return field.w.array().abs().rowwise().maxCoeff();
}

Eigen::VectorXd station_envelope(const HarmonicSolution& sol,
                                 const BasisSet& basis,
                                 const std::vector<double>& x_grid) {
  return magnitudes(displacement_amplitude(sol, basis, x_grid));
}

double cost_function(const Eigen::VectorXd& env) {
  if (env.size() == 0) throw MetricError("empty envelope");
  if ((env.array() < 0.0).any())
    throw MetricError("envelope has negative entries");
  const double vmax = env.maxCoeff();
  const double vmin = env.minCoeff();
  if (vmax == 0.0)
    throw MetricError("all-zero envelope: traveling-wave metric undefined");
  return (vmax - vmin) / (vmax + vmin);
}

Spectrum2D spectrum_2d(const WaveField& field, int pad_factor) {
  const int nx = static_cast<int>(field.x_grid.size());
  const int nt = static_cast<int>(field.t_grid.size());
  if (nx < 32 || nt < 32)
    throw std::invalid_argument("spectrum needs nx, nt >= 32");
  if (pad_factor < 1) throw std::invalid_argument("pad_factor must be >= 1");
  const double dx = uniform_spacing(field.x_grid, "station");
  const double dt = uniform_spacing(field.t_grid, "time");

  const int Nx = pad_factor * nx;
  const int nf = nt / 2 + 1;

  // Row-major [Nx][nt] input; the transformed axis order keeps the full
  // (signed) wavenumber dimension and halves the time dimension, so only
  // non-negative frequencies come back.
  std::vector<double> in(static_cast<size_t>(Nx) * nt, 0.0);
  for (int j = 0; j < nx; ++j)
    for (int k = 0; k < nt; ++k)
      in[static_cast<size_t>(j) * nt + k] = field.w(j, k);

  std::vector<fftw_complex> out(static_cast<size_t>(Nx) * nf);
  fftw_plan plan = fftw_plan_dft_r2c_2d(Nx, nt, in.data(), out.data(),
                                        FFTW_ESTIMATE);
  if (!plan) throw MetricError("FFT planning failed");
  fftw_execute(plan);
  fftw_destroy_plan(plan);

  // Signed wavenumber per spatial DFT index p: with the analysis convention
  // w ~ Re(W e^{i omega t}) and W ~ e^{-ikx} for rightward travel, the
  // non-negative-frequency half picks the e^{+i omega t} component, whose
  // spatial index p corresponds to kappa = -2 pi s(p) / (Nx dx) where s(p)
  // is p folded to (-Nx/2, Nx/2]. Rightward components then land at +k.
  // For even Nx the lone Nyquist row is dropped to keep the axis symmetric.
  const int half = (Nx - 1) / 2;            // largest |s| kept below Nyquist
  const int nk = 2 * half + 1;
  Spectrum2D spec;
  spec.wavenumbers.resize(nk);
  spec.magnitude.resize(nk, nf);
  for (int r = 0; r < nk; ++r) {
    const int s = half - r;  // descending s = ascending kappa
    spec.wavenumbers[r] = -kTwoPi * s / (Nx * dx);
    const int p = s >= 0 ? s : s + Nx;
    for (int q = 0; q < nf; ++q) {
      const fftw_complex& c = out[static_cast<size_t>(p) * nf + q];
      spec.magnitude(r, q) = std::hypot(c[0], c[1]);
    }
  }
  spec.freqs.resize(nf);
  for (int q = 0; q < nf; ++q) spec.freqs[q] = q / (nt * dt);

  const double peak = spec.magnitude.maxCoeff();
  if (peak == 0.0) throw MetricError("all-zero field: spectrum undefined");
  spec.magnitude /= peak;
  return spec;
}

double peak_wavenumber(const Spectrum2D& spec) {
  Eigen::Index r = 0, q = 0;
  spec.magnitude.maxCoeff(&r, &q);
  return spec.wavenumbers[static_cast<size_t>(r)];
}

double dispersion_wavenumber(double omega, double D_real, double mu) {
  if (!(omega > 0.0 && D_real > 0.0 && mu > 0.0))
    throw std::invalid_argument("dispersion inputs must be positive");
  return std::pow(mu * omega * omega / D_real, 0.25);
}

}  // namespace abh
