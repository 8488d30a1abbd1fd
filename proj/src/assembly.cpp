#include "abhlab/assembly.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "abhlab/errors.hpp"
#include "abhlab/kernels.hpp"
#include "abhlab/quadrature.hpp"
#include "abhlab/section.hpp"

namespace abh {

namespace {

// Gauss exactness floor: the stiffness integrand on the bare taper is a
// polynomial of degree 2(n-2) + 3m (phi'' products times the cubed thickness
// profile), which 2*order - 1 must reach. This dominates the mass bound for
// every m >= 1.
int exactness_floor(int n, double m) {
  return static_cast<int>(std::ceil((2.0 * n - 3.0 + 3.0 * m) / 2.0));
}

}  // namespace

int min_quadrature_order(int n, double m) {
  if (n < 4) throw ConfigError("basis size must be >= 4");
  return std::max(n + 10, exactness_floor(n, m));
}

SpectralModel assemble(const BeamConfig& cfg, const BasisSet& basis,
                       int quad_order) {
  cfg.validate();
  if (basis.length() != cfg.L)
    throw ConfigError("basis was built for a different beam length");

  const int n = basis.size();
  const int order = quad_order == 0 ? min_quadrature_order(n, cfg.m) : quad_order;
  if (order < exactness_floor(n, cfg.m))
    throw ConfigError("solver.quad_order = " + std::to_string(order) +
                      " is below the exactness floor " +
                      std::to_string(exactness_floor(n, cfg.m)) +
                      " for basis size " + std::to_string(n));

  // Combined quadrature point set: one Gauss panel per section segment, so
  // the kinks at L1 and the layer step at L2 sit on panel edges.
  const double breaks[4] = {0.0, cfg.L1, cfg.L2, cfg.L};
  std::vector<double> x, w;
  x.reserve(3 * order);
  w.reserve(3 * order);
  for (int seg = 0; seg < 3; ++seg) {
    QuadratureRule rule = gauss_legendre(order, breaks[seg], breaks[seg + 1]);
    x.insert(x.end(), rule.nodes.begin(), rule.nodes.end());
    w.insert(w.end(), rule.weights.begin(), rule.weights.end());
  }
  const int npts = static_cast<int>(x.size());

  // Section properties folded into the quadrature weights.
  std::vector<double> w_mu(npts), w_dre(npts), w_dim(npts);
  bool has_imag = false;
  for (int p = 0; p < npts; ++p) {
    const SectionSample s = section_sample(x[p], cfg);
    if (!std::isfinite(s.mu) || !std::isfinite(s.D.real()) ||
        !std::isfinite(s.D.imag()))
      throw AssemblyError("non-finite section properties at x = " +
                          std::to_string(x[p]));
    w_mu[p] = w[p] * s.mu;
    w_dre[p] = w[p] * s.D.real();
    w_dim[p] = w[p] * s.D.imag();
    if (w_dim[p] != 0.0) has_imag = true;
  }

  std::vector<double> phi, d2;
  basis.tables(x, phi, d2);

  const kernels::Ops& ops = kernels::active();
  std::vector<double> Mraw(static_cast<size_t>(n) * n);
  std::vector<double> Kre(static_cast<size_t>(n) * n);
  std::vector<double> Kim(static_cast<size_t>(n) * n, 0.0);
  ops.weighted_gram(n, npts, phi.data(), w_mu.data(), Mraw.data());
  ops.weighted_gram(n, npts, d2.data(), w_dre.data(), Kre.data());
  if (has_imag) ops.weighted_gram(n, npts, d2.data(), w_dim.data(), Kim.data());

  SpectralModel model;
  model.n = n;
  model.quad_order = order;
  model.M.resize(n, n);
  model.K.resize(n, n);
  for (int l = 0; l < n; ++l) {
    for (int j = 0; j < n; ++j) {
      const size_t idx = static_cast<size_t>(l) * n + j;
      model.M(l, j) = Mraw[idx];
      model.K(l, j) = Complex(Kre[idx], Kim[idx]);
    }
  }
  model.f0 = cfg.F0 * basis.values_at(cfg.L3);
  return model;
}

void dump_model(const SpectralModel& model, const std::string& prefix) {
  auto open = [](const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    return out;
  };
  char buf[64];

  std::ofstream m = open(prefix + "_M.txt");
  for (int l = 0; l < model.n; ++l) {
    for (int j = 0; j < model.n; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", model.M(l, j));
      m << buf << (j + 1 < model.n ? " " : "\n");
    }
  }

  std::ofstream k = open(prefix + "_K.txt");
  for (int l = 0; l < model.n; ++l) {
    for (int j = 0; j < model.n; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g %.17g", model.K(l, j).real(),
                    model.K(l, j).imag());
      k << buf << (j + 1 < model.n ? " " : "\n");
    }
  }

  std::ofstream f = open(prefix + "_f0.txt");
  for (int j = 0; j < model.n; ++j) {
    std::snprintf(buf, sizeof(buf), "%.17g", model.f0[j]);
    f << buf << "\n";
  }
}

}  // namespace abh
