#pragma once

#include <complex>

#include "abhlab/config.hpp"

namespace abh {

using Complex = std::complex<double>;

/// Composite cross-section state at one station. The damping layer is modeled
/// with a complex Young's modulus, so the neutral axis and bending stiffness
/// are complex whenever the loss factor is nonzero.
struct SectionSample {
  double x = 0.0;      ///< station (m)
  double h_b = 0.0;    ///< base thickness (m)
  double h_v = 0.0;    ///< damping-layer thickness (m)
  Complex zbar;        ///< neutral axis offset (m)
  Complex D;           ///< bending stiffness (N m^2)
  double mu = 0.0;     ///< mass per length (kg/m)
};

/// Base-beam thickness profile: h1 on the uniform section, power-law taper
/// h2 + ((L-x)/(L-L1))^m (h1-h2) on [L1, L]. Continuous at L1.
double base_thickness(double x, const BeamConfig& cfg);

/// Damping-layer thickness: h3 on [L2, L] (right-continuous step), else 0.
double vem_thickness(double x, const BeamConfig& cfg);

/// Complex modulus E_vs (1 + i eta).
Complex complex_modulus(double E_vs, double eta);

/// Full composite-section evaluation at station x. Layer stacking puts the
/// base on z in [0, h_b] and the damping layer on z in [-h_v, 0].
SectionSample section_sample(double x, const BeamConfig& cfg);

}  // namespace abh
