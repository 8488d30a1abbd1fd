#pragma once

#include <string>
#include <vector>

namespace abh {

/// Complete physical description of the beam: geometry, base and damping-layer
/// materials, and the point-force excitation. All values are SI.
struct BeamConfig {
  double L = 0.0;      ///< total length (m)
  double L1 = 0.0;     ///< uniform-section length / taper start (m)
  double L2 = 0.0;     ///< damping-layer start coordinate (m)
  double L3 = 0.0;     ///< force location (m)
  double B = 0.0;      ///< width (m)
  double h1 = 0.0;     ///< uniform thickness (m)
  double h2 = 0.0;     ///< minimum taper thickness (m)
  double h3 = 0.0;     ///< damping-layer thickness (m)
  double m = 1.0;      ///< power-law exponent
  double E_b = 0.0;    ///< base Young's modulus (Pa)
  double rho_b = 0.0;  ///< base density (kg/m^3)
  double E_vs = 0.0;   ///< damping-layer storage modulus (Pa)
  double eta = 0.0;    ///< damping-layer loss factor
  double rho_v = 0.0;  ///< damping-layer density (kg/m^3)
  double F0 = 1.0;     ///< force amplitude (N)

  /// Throws ConfigError naming the offending key when an invariant fails.
  void validate() const;

  bool operator==(const BeamConfig&) const = default;
};

struct SolverSettings {
  int basis_n = 140;   ///< number of Legendre trial functions
  int quad_order = 0;  ///< Gauss nodes per segment; 0 selects the default rule

  void validate() const;
  bool operator==(const SolverSettings&) const = default;
};

struct AnalysisSettings {
  double window_lo = 0.05;      ///< analysis window start (m)
  double window_hi = 1.0;       ///< analysis window end (m)
  int stations = 190;           ///< spatial stations across the window
  int periods = 8;              ///< reconstructed excitation periods
  int samples_per_period = 32;  ///< time samples per period
  int pad_factor = 4;           ///< spatial zero-padding factor for the 2D spectrum

  void validate() const;
  bool operator==(const AnalysisSettings&) const = default;
};

struct SweepSettings {
  double freq_lo = 1000.0;   ///< default sweep band start (Hz)
  double freq_hi = 10000.0;  ///< default sweep band end (Hz)
  int freq_points = 200;
  bool freq_log = true;  ///< log-spaced frequency grid when true

  void validate() const;
  bool operator==(const SweepSettings&) const = default;
};

/// Everything a run needs, as parsed from one config file.
struct Config {
  BeamConfig beam;
  SolverSettings solver;
  AnalysisSettings analysis;
  SweepSettings sweep;

  void validate() const;
  bool operator==(const Config&) const = default;
};

/// The shipped default configuration (aluminum beam, power-law taper with
/// m = 3, partially covered by viscoelastic tape).
Config baseline_config();

/// Parses the hierarchical key=value config format. `overrides` entries have
/// the form "section.key=value" and must reference existing keys.
Config parse_config(const std::string& path,
                    const std::vector<std::string>& overrides = {});
Config parse_config_text(const std::string& text,
                         const std::vector<std::string>& overrides = {});

/// Serializes a Config in the same format parse_config reads, with full
/// double precision so that parse(write(c)) == c.
std::string write_config(const Config& cfg);

}  // namespace abh
