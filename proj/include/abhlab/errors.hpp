#pragma once

#include <stdexcept>
#include <string>

namespace abh {

/// Invalid or inconsistent user configuration (bad key, violated bound, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical assembly failure (non-finite section property, ...).
class AssemblyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Harmonic solve hit a (near-)singular system, typically an undamped resonance.
class ResonanceError : public std::runtime_error {
 public:
  ResonanceError(double omega_rad_s, const std::string& what)
      : std::runtime_error(what), omega(omega_rad_s) {}

  double omega;
};

/// Linear-algebra routine did not converge or produced an unusable result.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A response metric is undefined for the given input (e.g. all-zero envelope).
class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace abh
