#include "abhlab/solve.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "abhlab/errors.hpp"

namespace abh {
namespace {

SpectralModel one_dof(double m, Complex k, double f) {
  SpectralModel model;
  model.n = 1;
  model.M = Eigen::MatrixXd::Constant(1, 1, m);
  model.K = Eigen::MatrixXcd::Constant(1, 1, k);
  model.f0 = Eigen::VectorXd::Constant(1, f);
  model.quad_order = 0;
  return model;
}

BeamConfig uniform_beam() {
  BeamConfig cfg = baseline_config().beam;
  cfg.h2 = cfg.h1;
  cfg.h3 = 0.0;
  return cfg;
}

// Free-free Euler-Bernoulli roots of cos(b) cosh(b) = 1, found by Newton
// from the asymptotic guesses (2i + 1) pi / 2.
double free_free_root(int i) {
  double b = (2.0 * i + 1.0) * std::numbers::pi / 2.0;
  for (int iter = 0; iter < 60; ++iter) {
    const double g = std::cos(b) * std::cosh(b) - 1.0;
    const double dg =
        std::cos(b) * std::sinh(b) - std::sin(b) * std::cosh(b);
    const double step = g / dg;
    b -= step;
    if (std::abs(step) < 1e-14) break;
  }
  return b;
}

TEST(HarmonicResponse, OneDofAlgebra) {
  {
    const HarmonicSolution sol = harmonic_response(one_dof(1.0, 4.0, 1.0), 1.0);
    EXPECT_NEAR(sol.tau0[0].real(), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(sol.tau0[0].imag(), 0.0, 1e-15);
    EXPECT_LE(sol.residual, 1e-8);
  }
  {
    const HarmonicSolution sol =
        harmonic_response(one_dof(1.0, Complex(4.0, 2.0), 1.0), 2.0);
    EXPECT_NEAR(sol.tau0[0].real(), 0.0, 1e-15);
    EXPECT_NEAR(sol.tau0[0].imag(), -0.5, 1e-15);
  }
}

TEST(HarmonicResponse, UndampedResonanceRaises) {
  try {
    harmonic_response(one_dof(1.0, 4.0, 1.0), 2.0);
    FAIL() << "expected ResonanceError";
  } catch (const ResonanceError& e) {
    EXPECT_DOUBLE_EQ(e.omega, 2.0);
  }
  EXPECT_THROW(harmonic_response(one_dof(1.0, 4.0, 1.0), 0.0),
               std::invalid_argument);
}

TEST(HarmonicResponse, LinearInForceAmplitude) {
  const BeamConfig cfg = baseline_config().beam;
  const BasisSet basis(20, cfg.L);
  const SpectralModel base = assemble(cfg, basis);
  const double omega = 2.0 * std::numbers::pi * 3000.0;
  const HarmonicSolution ref = harmonic_response(base, omega);
  for (double c : {2.0, 10.0, -1.0}) {
    BeamConfig scaled_cfg = cfg;
    scaled_cfg.F0 = c * cfg.F0;
    const HarmonicSolution scaled =
        harmonic_response(assemble(scaled_cfg, basis), omega);
    const double err = (scaled.tau0 - c * ref.tau0).norm() / ref.tau0.norm();
    EXPECT_LT(err, 1e-12 * std::abs(c)) << "c = " << c;
  }
}

TEST(HarmonicResponse, Reciprocity) {
  const double x_a = 0.025, x_b = 0.6;
  BeamConfig cfg = baseline_config().beam;
  const BasisSet basis(40, cfg.L);
  const double omega = 2.0 * std::numbers::pi * 1500.0;

  cfg.L3 = x_a;
  const Eigen::VectorXcd W_ab = displacement_amplitude(
      harmonic_response(assemble(cfg, basis), omega), basis, {x_b});
  cfg.L3 = x_b;
  const Eigen::VectorXcd W_ba = displacement_amplitude(
      harmonic_response(assemble(cfg, basis), omega), basis, {x_a});
  EXPECT_LT(std::abs(W_ab[0] - W_ba[0]), 1e-10 * std::abs(W_ab[0]));
}

TEST(ModalFrequencies, UniformBeamClosedForm) {
  const BeamConfig cfg = uniform_beam();
  const SpectralModel model = assemble(cfg, BasisSet(60, cfg.L));
  const std::vector<Mode> modes = modal_frequencies(model, 10);

  const double D = cfg.E_b * cfg.B * std::pow(cfg.h1, 3) / 12.0;
  const double mu = cfg.B * cfg.h1 * cfg.rho_b;
  for (int i = 0; i < 10; ++i) {
    const double bL = free_free_root(i + 1);
    const double f_ref = bL * bL / (2.0 * std::numbers::pi * cfg.L * cfg.L) *
                         std::sqrt(D / mu);
    EXPECT_NEAR(modes[i].frequency_hz, f_ref, 5e-4 * f_ref) << "mode " << i + 1;
  }
  // Sanity anchors for the shipped dimensions.
  EXPECT_NEAR(modes[0].frequency_hz, 10.47, 0.01);
  EXPECT_NEAR(modes[1].frequency_hz, 28.86, 0.02);
}

TEST(ModalFrequencies, UndampedModesAreLossless) {
  const BeamConfig cfg = uniform_beam();  // eta irrelevant without a layer
  BeamConfig cfg_eta0 = baseline_config().beam;
  cfg_eta0.eta = 0.0;
  for (const BeamConfig& c : {cfg, cfg_eta0}) {
    const SpectralModel model = assemble(c, BasisSet(30, c.L));
    for (const Mode& mode : modal_frequencies(model, 10)) {
      EXPECT_EQ(mode.eta_modal, 0.0);
      EXPECT_GT(mode.frequency_hz, 0.0);
    }
  }
}

TEST(ModalFrequencies, DampedModesHavePositiveLoss) {
  const SpectralModel model =
      assemble(baseline_config().beam, BasisSet(40, 1.22));
  int positive = 0;
  const std::vector<Mode> modes = modal_frequencies(model, 10);
  for (const Mode& mode : modes) positive += mode.eta_modal > 0.0;
  EXPECT_EQ(positive, 10);
}

TEST(GeneralizedEigenvalues, RigidBodyPairIsTiny) {
  const SpectralModel model =
      assemble(baseline_config().beam, BasisSet(40, 1.22));
  const Eigen::VectorXcd lambda = generalized_eigenvalues(model);
  ASSERT_GE(lambda.size(), 3);
  EXPECT_LT(std::abs(lambda[0]), 1e-6 * std::abs(lambda[2]));
  EXPECT_LT(std::abs(lambda[1]), 1e-6 * std::abs(lambda[2]));
}

TEST(GeneralizedEigenvalues, RealForZeroLoss) {
  BeamConfig cfg = baseline_config().beam;
  cfg.eta = 0.0;
  const Eigen::VectorXcd lambda =
      generalized_eigenvalues(assemble(cfg, BasisSet(30, cfg.L)));
  for (int i = 0; i < lambda.size(); ++i) {
    EXPECT_EQ(lambda[i].imag(), 0.0);
    EXPECT_GT(lambda[i].real(),
              -1e-10 * std::abs(lambda[lambda.size() - 1].real()));
  }
}

TEST(ModalFrequencies, CountBounds) {
  const SpectralModel model = assemble(uniform_beam(), BasisSet(10, 1.22));
  EXPECT_THROW(modal_frequencies(model, 9), std::invalid_argument);
  EXPECT_THROW(modal_frequencies(model, 0), std::invalid_argument);
  EXPECT_EQ(modal_frequencies(model, 8).size(), 8u);
}

TEST(ModalFrequencies, BasisRefinementConverges) {
  const BeamConfig cfg = baseline_config().beam;
  const std::vector<Mode> coarse =
      modal_frequencies(assemble(cfg, BasisSet(60, cfg.L)), 10);
  const std::vector<Mode> fine =
      modal_frequencies(assemble(cfg, BasisSet(70, cfg.L)), 10);
  for (int i = 0; i < 10; ++i) {
    EXPECT_NEAR(coarse[i].frequency_hz, fine[i].frequency_hz,
                1e-3 * fine[i].frequency_hz)
        << "mode " << i + 1;
  }
}

TEST(DrivenAtResonance, UndampedBeamRaises) {
  const BeamConfig cfg = uniform_beam();
  const SpectralModel model = assemble(cfg, BasisSet(40, cfg.L));
  const double f1 = modal_frequencies(model, 1)[0].frequency_hz;
  EXPECT_THROW(harmonic_response(model, 2.0 * std::numbers::pi * f1),
               ResonanceError);
}

TEST(DisplacementAmplitude, BasisCombinations) {
  const BasisSet basis(8, 1.22);
  HarmonicSolution sol;
  sol.omega = 1.0;
  sol.tau0 = Eigen::VectorXcd::Zero(8);

  sol.tau0[0] = Complex(2.0, -1.0);
  Eigen::VectorXcd W =
      displacement_amplitude(sol, basis, {0.0, 0.3, 0.61, 1.22});
  for (int p = 0; p < 4; ++p) EXPECT_EQ(W[p], Complex(2.0, -1.0));

  sol.tau0[0] = 0.0;
  sol.tau0[1] = 1.0;  // P1 = xi: linear in x
  W = displacement_amplitude(sol, basis, {0.0, 0.61, 1.22});
  EXPECT_NEAR(W[0].real(), -1.0, 1e-15);
  EXPECT_NEAR(W[1].real(), 0.0, 1e-15);
  EXPECT_NEAR(W[2].real(), 1.0, 1e-15);

  sol.tau0[1] = 0.0;
  sol.tau0[3] = Complex(0.0, 5.0);  // odd shape: vanishes at midspan
  W = displacement_amplitude(sol, basis, {0.61});
  EXPECT_EQ(W[0], Complex(0.0, 0.0));
}

TEST(ConvergentBasisSize, FindsStableSize) {
  const BeamConfig cfg = baseline_config().beam;
  const int n = convergent_basis_size(cfg, 5, 30, 10, 1e-3);
  EXPECT_GE(n, 30);
  EXPECT_LE(n, 400);
  const std::vector<Mode> a =
      modal_frequencies(assemble(cfg, BasisSet(n, cfg.L)), 5);
  const std::vector<Mode> b =
      modal_frequencies(assemble(cfg, BasisSet(n + 10, cfg.L)), 5);
  for (int i = 0; i < 5; ++i)
    EXPECT_NEAR(a[i].frequency_hz, b[i].frequency_hz,
                1e-3 * b[i].frequency_hz);
}

}  // namespace
}  // namespace abh
