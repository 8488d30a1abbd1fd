#include "abhlab/legendre.hpp"

#include <stdexcept>
#include <string>

#include "abhlab/errors.hpp"
#include "abhlab/kernels.hpp"

namespace abh {

namespace {

void require_on_beam(double x, double L) {
  if (!(x >= 0.0 && x <= L))
    throw std::domain_error("station x = " + std::to_string(x) +
                            " lies outside the beam [0, " + std::to_string(L) +
                            "]");
}

}  // namespace

double map_to_reference(double x, double L) {
  require_on_beam(x, L);
  return 2.0 * x / L - 1.0;
}

double legendre_eval(int l, double xi) {
  if (l < 0) throw std::invalid_argument("Legendre degree must be >= 0");
  if (l == 0) return 1.0;
  double p0 = 1.0, p1 = xi;
  for (int k = 1; k < l; ++k) {
    const double p2 = ((2.0 * k + 1.0) * xi * p1 - k * p0) / (k + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double legendre_d2(int l, double xi) {
  if (l < 0) throw std::invalid_argument("Legendre degree must be >= 0");
  if (l < 2) return 0.0;
  double p0 = 1.0, p1 = xi;
  double dp0 = 0.0, dp1 = 1.0;
  double d20 = 0.0, d21 = 0.0;
  for (int k = 1; k < l; ++k) {
    const double a = 2.0 * k + 1.0;
    const double p2 = (a * xi * p1 - k * p0) / (k + 1);
    const double dp2 = a * p1 + dp0;
    const double d22 = a * dp1 + d20;
    p0 = p1;
    p1 = p2;
    dp0 = dp1;
    dp1 = dp2;
    d20 = d21;
    d21 = d22;
  }
  return d21;
}

double legendre_d2_physical(int l, double x, double L) {
  const double xi = map_to_reference(x, L);
  const double scale = 2.0 / L;
  return scale * scale * legendre_d2(l, xi);
}

BasisSet::BasisSet(int n, double L) : n_(n), L_(L) {
  if (n < 4)
    throw ConfigError("basis size n = " + std::to_string(n) +
                      " is too small; need n >= 4 to span the rigid-body and "
                      "first flexible shapes");
  if (!(L > 0.0)) throw ConfigError("beam length must be positive");
}

double BasisSet::value(int l, double x) const {
  return legendre_eval(l, map_to_reference(x, L_));
}

double BasisSet::second_derivative(int l, double x) const {
  return legendre_d2_physical(l, x, L_);
}

Eigen::VectorXd BasisSet::values_at(double x) const {
  const double xi = map_to_reference(x, L_);
  Eigen::VectorXd v(n_);
  v[0] = 1.0;
  if (n_ > 1) v[1] = xi;
  for (int l = 1; l < n_ - 1; ++l)
    v[l + 1] = ((2.0 * l + 1.0) * xi * v[l] - l * v[l - 1]) / (l + 1);
  return v;
}

void BasisSet::tables(const std::vector<double>& x, std::vector<double>& phi,
                      std::vector<double>& d2_phi) const {
  const int npts = static_cast<int>(x.size());
  std::vector<double> xi(npts);
  for (int p = 0; p < npts; ++p) xi[p] = map_to_reference(x[p], L_);
  phi.assign(static_cast<size_t>(n_) * npts, 0.0);
  d2_phi.assign(static_cast<size_t>(n_) * npts, 0.0);
  kernels::active().legendre_tables(n_, npts, xi.data(), phi.data(),
                                    d2_phi.data());
  const double scale = (2.0 / L_) * (2.0 / L_);
  for (double& v : d2_phi) v *= scale;
}

}  // namespace abh
