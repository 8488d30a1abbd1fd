#include "abhlab/section.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace abh {

namespace {

void require_on_beam(double x, const BeamConfig& cfg) {
  if (!(x >= 0.0 && x <= cfg.L)) {
    throw std::domain_error("station x = " + std::to_string(x) +
                            " lies outside the beam [0, " +
                            std::to_string(cfg.L) + "]");
  }
}

}  // namespace

double base_thickness(double x, const BeamConfig& cfg) {
  require_on_beam(x, cfg);
  if (x < cfg.L1) return cfg.h1;
  const double t = (cfg.L - x) / (cfg.L - cfg.L1);  // 1 at L1, 0 at the tip
  return cfg.h2 + std::pow(t, cfg.m) * (cfg.h1 - cfg.h2);
}

double vem_thickness(double x, const BeamConfig& cfg) {
  require_on_beam(x, cfg);
  return x >= cfg.L2 ? cfg.h3 : 0.0;
}

Complex complex_modulus(double E_vs, double eta) {
  return {E_vs, E_vs * eta};
}

SectionSample section_sample(double x, const BeamConfig& cfg) {
  SectionSample s;
  s.x = x;
  s.h_b = base_thickness(x, cfg);
  s.h_v = vem_thickness(x, cfg);

  const double E_b = cfg.E_b;
  const Complex E_v = complex_modulus(cfg.E_vs, cfg.eta);

  s.zbar = (E_b * s.h_b * s.h_b - E_v * s.h_v * s.h_v) /
           (2.0 * (E_b * s.h_b + E_v * s.h_v));

  const double A_b = cfg.B * s.h_b;
  const double A_v = cfg.B * s.h_v;
  const double I_b = cfg.B * s.h_b * s.h_b * s.h_b / 12.0;
  const double I_v = cfg.B * s.h_v * s.h_v * s.h_v / 12.0;
  const Complex d_b = 0.5 * s.h_b - s.zbar;   // base centroid at +h_b/2
  const Complex d_v = -0.5 * s.h_v - s.zbar;  // damping layer at -h_v/2

  s.D = E_b * (I_b + A_b * d_b * d_b) + E_v * (I_v + A_v * d_v * d_v);
  s.mu = cfg.B * (s.h_b * cfg.rho_b + s.h_v * cfg.rho_v);
  return s;
}

}  // namespace abh
