#pragma once

#include <string>
#include <vector>

#include "abhlab/solve.hpp"
#include "abhlab/sweep.hpp"
#include "abhlab/wavefield.hpp"

namespace abh {

/// Plot-ready artifact writers. All files use '.' decimals, '\n' line endings
/// and 17 significant digits, so identical inputs give identical bytes.
/// I/O failures throw std::runtime_error naming the path.

/// CSV: mode_index,frequency_hz,modal_loss_factor.
void write_modes_csv(const std::string& path, const std::vector<Mode>& modes);

/// CSV: x_m,amplitude.
void write_envelope_csv(const std::string& path,
                        const std::vector<double>& x_grid,
                        const Eigen::VectorXd& env);

/// Whitespace matrix of w(x_j, t_k) (station rows), preceded by two '#' axis
/// header lines (stations, then time samples).
void write_field_matrix(const std::string& path, const WaveField& field);

/// Whitespace matrix of spectrum magnitude (wavenumber rows), preceded by two
/// '#' axis header lines (wavenumbers, then frequencies).
void write_spectrum_matrix(const std::string& path, const Spectrum2D& spec);

/// Long-format CSV: axis1_value,axis2_value,cf,status ("ok" or error tag).
void write_sweep_csv(const std::string& path, const SweepResult& result);

/// Whitespace matrix of CF (axis1 rows), preceded by two '#' axis value
/// header lines; failed cells print as nan.
void write_sweep_matrix(const std::string& path, const SweepResult& result);

/// Minimal cosmetic SVG line plot of y(x); optional log-x scaling.
void write_svg_line(const std::string& path, const std::vector<double>& x,
                    const std::vector<double>& y, const std::string& title,
                    bool log_x = false);

/// Minimal cosmetic grayscale SVG heatmap (dark = high).
void write_svg_heatmap(const std::string& path, const Eigen::MatrixXd& values,
                       const std::string& title);

}  // namespace abh
