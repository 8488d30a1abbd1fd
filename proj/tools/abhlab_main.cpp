// abhlab command-line front end: modes, respond, cf-sweep, spectrum and
// validate-config subcommands over a shared config file.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abhlab/assembly.hpp"
#include "abhlab/config.hpp"
#include "abhlab/errors.hpp"
#include "abhlab/kernels.hpp"
#include "abhlab/output.hpp"
#include "abhlab/solve.hpp"
#include "abhlab/sweep.hpp"
#include "abhlab/wavefield.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir = ".";
};

void add_common(CLI::App* sub, CommonArgs& args) {
  sub->add_option("--config", args.config_path, "config file (INI sections)")
      ->required();
  sub->add_option("--set", args.overrides,
                  "override a config value, e.g. --set vem.eta=0.1");
  sub->add_option("--out", args.out_dir, "output directory")
      ->capture_default_str();
}

std::string out_path(const CommonArgs& args, const char* name) {
  std::filesystem::create_directories(args.out_dir);
  return (std::filesystem::path(args.out_dir) / name).string();
}

abh::Config load(const CommonArgs& args) {
  return abh::parse_config(args.config_path, args.overrides);
}

abh::SpectralModel build_model(const abh::Config& cfg,
                               const abh::BasisSet& basis) {
  return abh::assemble(cfg.beam, basis, cfg.solver.quad_order);
}

abh::WaveField respond_field(const abh::Config& cfg,
                             const abh::BasisSet& basis, double freq_hz) {
  const abh::SpectralModel model = build_model(cfg, basis);
  const abh::HarmonicSolution sol =
      abh::harmonic_response(model, 2.0 * std::numbers::pi * freq_hz);
  return abh::reconstruct(sol, basis, cfg.analysis.window_lo,
                          cfg.analysis.window_hi, cfg.analysis.stations,
                          cfg.analysis.periods,
                          cfg.analysis.samples_per_period);
}

int cmd_modes(const CommonArgs& args, int count) {
  const abh::Config cfg = load(args);
  const abh::BasisSet basis(cfg.solver.basis_n, cfg.beam.L);
  const std::vector<abh::Mode> modes =
      abh::modal_frequencies(build_model(cfg, basis), count);
  abh::write_modes_csv(out_path(args, "modes.csv"), modes);
  for (size_t i = 0; i < modes.size(); ++i)
    std::printf("mode %2zu: %12.4f Hz  (modal loss factor %.6g)\n", i + 1,
                modes[i].frequency_hz, modes[i].eta_modal);
  return 0;
}

int cmd_respond(const CommonArgs& args, double freq_hz) {
  const abh::Config cfg = load(args);
  const abh::BasisSet basis(cfg.solver.basis_n, cfg.beam.L);
  const abh::WaveField field = respond_field(cfg, basis, freq_hz);
  const Eigen::VectorXd env = abh::envelope(field);
  const double cf = abh::cost_function(env);

  abh::write_envelope_csv(out_path(args, "envelope.csv"), field.x_grid, env);
  abh::write_field_matrix(out_path(args, "field.dat"), field);
  std::vector<double> env_values(env.data(), env.data() + env.size());
  abh::write_svg_line(out_path(args, "envelope.svg"), field.x_grid,
                      env_values, "wave envelope");
  std::printf("frequency %.6g Hz: CF = %.6f\n", freq_hz, cf);
  return 0;
}

int cmd_spectrum(const CommonArgs& args, double freq_hz) {
  const abh::Config cfg = load(args);
  const abh::BasisSet basis(cfg.solver.basis_n, cfg.beam.L);
  const abh::WaveField field = respond_field(cfg, basis, freq_hz);
  const abh::Spectrum2D spec =
      abh::spectrum_2d(field, cfg.analysis.pad_factor);

  abh::write_spectrum_matrix(out_path(args, "spectrum.dat"), spec);
  abh::write_svg_heatmap(out_path(args, "spectrum.svg"), spec.magnitude,
                         "frequency-wavenumber spectrum");
  std::printf("frequency %.6g Hz: dominant wavenumber %.6g rad/m\n", freq_hz,
              abh::peak_wavenumber(spec));
  return 0;
}

int cmd_cf_sweep(const CommonArgs& args, const std::string& axis1_text,
                 const std::string& axis2_text) {
  const abh::Config cfg = load(args);

  const abh::SweepAxis axis1 = axis1_text.empty()
                                   ? abh::frequency_axis(cfg.sweep)
                                   : abh::SweepAxis::parse(axis1_text);
  abh::SweepAxis axis2;
  if (!axis2_text.empty()) {
    axis2 = abh::SweepAxis::parse(axis2_text);
  } else if (axis1.param == abh::SweepParam::FrequencyHz) {
    axis2.param = abh::SweepParam::Eta;
    axis2.values = {cfg.beam.eta};
  } else {
    axis2 = abh::frequency_axis(cfg.sweep);
  }

  const abh::SweepResult result = abh::run_sweep(cfg, axis1, axis2);
  abh::write_sweep_csv(out_path(args, "cf_sweep.csv"), result);
  abh::write_sweep_matrix(out_path(args, "cf_matrix.dat"), result);
  abh::write_svg_heatmap(out_path(args, "cf_sweep.svg"), result.cf,
                         "CF sweep");
  std::cout << abh::format_trends(abh::summarize_trends(result, cfg.beam));

  if (!result.failed.empty()) {
    std::cerr << result.failed.size() << " of " << result.cf.size()
              << " grid points failed (see cf_sweep.csv status column)\n";
    return 1;
  }
  return 0;
}

int cmd_validate(const CommonArgs& args) {
  const abh::Config cfg = load(args);
  std::cout << abh::write_config(cfg);
  std::cout << "# config ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"abhlab: traveling-wave analysis of a power-law tapered beam "
               "with a free damping layer"};
  app.require_subcommand(1);

  CommonArgs modes_args;
  int mode_count = 30;
  CLI::App* modes = app.add_subcommand(
      "modes", "natural frequencies and modal loss factors");
  add_common(modes, modes_args);
  modes->add_option("--count", mode_count, "number of elastic modes")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  CommonArgs respond_args;
  double respond_freq = 0.0;
  CLI::App* respond = app.add_subcommand(
      "respond", "harmonic response: envelope, field samples, CF");
  add_common(respond, respond_args);
  respond->add_option("--freq-hz", respond_freq, "drive frequency (Hz)")
      ->required()
      ->check(CLI::PositiveNumber);

  CommonArgs spectrum_args;
  double spectrum_freq = 0.0;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "frequency-wavenumber spectrum of the response");
  add_common(spectrum, spectrum_args);
  spectrum->add_option("--freq-hz", spectrum_freq, "drive frequency (Hz)")
      ->required()
      ->check(CLI::PositiveNumber);

  CommonArgs sweep_args;
  std::string axis1_text, axis2_text;
  CLI::App* sweep = app.add_subcommand(
      "cf-sweep", "CF over a frequency x parameter grid");
  add_common(sweep, sweep_args);
  sweep->add_option("--axis1", axis1_text,
                    "e.g. frequency_hz=1000:10000:200log (default: config "
                    "[sweep] section)");
  sweep->add_option("--axis2", axis2_text,
                    "e.g. eta=0.001:0.5:50log (default: config loss factor)");

  CommonArgs validate_args;
  CLI::App* validate = app.add_subcommand(
      "validate-config", "parse, validate and echo the config");
  add_common(validate, validate_args);

  try {
    app.parse(argc, argv);
    if (modes->parsed()) return cmd_modes(modes_args, mode_count);
    if (respond->parsed()) return cmd_respond(respond_args, respond_freq);
    if (spectrum->parsed()) return cmd_spectrum(spectrum_args, spectrum_freq);
    if (sweep->parsed()) return cmd_cf_sweep(sweep_args, axis1_text, axis2_text);
    if (validate->parsed()) return cmd_validate(validate_args);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const abh::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const abh::ResonanceError& e) {
    std::cerr << "resonance: " << e.what() << "\n";
    return 1;
  } catch (const abh::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 1;
  } catch (const abh::AssemblyError& e) {
    std::cerr << "assembly error: " << e.what() << "\n";
    return 1;
  } catch (const abh::MetricError& e) {
    std::cerr << "metric error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
