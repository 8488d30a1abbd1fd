#pragma once

#include <vector>

#include <Eigen/Dense>

namespace abh {

/// Maps a station x in [0, L] to the reference coordinate xi = 2x/L - 1.
double map_to_reference(double x, double L);

/// P_l(xi) by the three-term recursion.
double legendre_eval(int l, double xi);

/// Second derivative of P_l with respect to xi (reference coordinate).
double legendre_d2(int l, double xi);

/// d^2 P_l / dx^2 at station x of a beam of length L, i.e. (2/L)^2 P_l''(xi).
double legendre_d2_physical(int l, double x, double L);

/// Legendre trial functions phi_l(x) = P_l(2x/L - 1), l = 0..n-1, on a beam
/// of length L. The first two are the rigid-body shapes.
class BasisSet {
 public:
  /// n must be >= 4 so the set spans the rigid-body modes plus at least two
  /// flexible shapes; throws ConfigError otherwise.
  BasisSet(int n, double L);

  int size() const { return n_; }
  double length() const { return L_; }

  /// phi_l(x).
  double value(int l, double x) const;

  /// phi_l''(x) in physical coordinates.
  double second_derivative(int l, double x) const;

  /// All n basis values at one station, as a column vector.
  Eigen::VectorXd values_at(double x) const;

  /// Fills row-major tables (n x npts) of basis values and physical second
  /// derivatives at the given stations using the active kernel set.
  void tables(const std::vector<double>& x, std::vector<double>& phi,
              std::vector<double>& d2_phi) const;

 private:
  int n_;
  double L_;
};

}  // namespace abh
