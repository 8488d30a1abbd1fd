#include "abhlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "abhlab/assembly.hpp"
#include "abhlab/errors.hpp"
#include "abhlab/solve.hpp"
#include "abhlab/wavefield.hpp"

namespace abh {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SweepParam param_from_name(const std::string& name) {
  if (name == "frequency_hz") return SweepParam::FrequencyHz;
  if (name == "eta") return SweepParam::Eta;
  if (name == "power_m") return SweepParam::PowerM;
  if (name == "taper_fraction") return SweepParam::TaperFraction;
  throw ConfigError("unknown sweep parameter '" + name +
                    "' (expected frequency_hz, eta, power_m or "
                    "taper_fraction)");
}

double parse_axis_number(const std::string& text) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ConfigError("sweep axis: '" + text + "' is not a number");
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    size_t next = text.find(sep, pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

int worker_count(long ncells) {
  unsigned hw = std::thread::hardware_concurrency();
  long workers = hw == 0 ? 1 : static_cast<long>(hw);
  if (const char* env = std::getenv("ABHLAB_THREADS")) {
    const std::string v(env);
    int cap = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), cap);
    if (ec != std::errc() || ptr != v.data() + v.size() || cap < 1)
      throw ConfigError("ABHLAB_THREADS must be a positive integer");
    workers = std::min<long>(workers, cap);
  }
  return static_cast<int>(std::clamp<long>(workers, 1, std::max(ncells, 1L)));
}

void apply_param(BeamConfig& cfg, SweepParam param, double value) {
  switch (param) {
    case SweepParam::Eta:
      cfg.eta = value;
      break;
    case SweepParam::PowerM:
      cfg.m = value;
      break;
    case SweepParam::TaperFraction:
      // L and the VEM tape length L - L2 stay fixed; the taper start moves.
      cfg.L1 = cfg.L * (1.0 - value);
      break;
    case SweepParam::FrequencyHz:
      break;  // handled as the drive frequency, not a config edit
  }
}

}  // namespace

const char* to_string(SweepParam param) {
  switch (param) {
    case SweepParam::FrequencyHz: return "frequency_hz";
    case SweepParam::Eta: return "eta";
    case SweepParam::PowerM: return "power_m";
    case SweepParam::TaperFraction: return "taper_fraction";
  }
  return "?";
}

SweepAxis SweepAxis::parse(const std::string& text) {
  const size_t eq = text.find('=');
  if (eq == std::string::npos)
    throw ConfigError("sweep axis '" + text +
                      "' is not of the form name=values");
  SweepAxis axis;
  axis.param = param_from_name(text.substr(0, eq));
  const std::string spec = text.substr(eq + 1);
  if (spec.empty()) throw ConfigError("sweep axis '" + text + "' has no values");

  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts = split(spec, ':');
    if (parts.size() != 3)
      throw ConfigError("sweep axis range must be lo:hi:COUNT[log|lin]");
    const double lo = parse_axis_number(parts[0]);
    const double hi = parse_axis_number(parts[1]);
    std::string count_part = parts[2];
    bool log_spaced = false;
    if (count_part.size() >= 3 && count_part.ends_with("log")) {
      log_spaced = true;
      count_part.resize(count_part.size() - 3);
    } else if (count_part.size() >= 3 && count_part.ends_with("lin")) {
      count_part.resize(count_part.size() - 3);
    }
    const double count_value = parse_axis_number(count_part);
    const int count = static_cast<int>(count_value);
    if (count < 1 || count_value != count)
      throw ConfigError("sweep axis point count must be a positive integer");
    if (count == 1) {
      if (lo != hi)
        throw ConfigError("single-point sweep axis requires lo == hi");
      axis.values = {lo};
    } else {
      if (!(lo < hi))
        throw ConfigError("sweep axis range requires lo < hi");
      if (log_spaced && !(lo > 0.0))
        throw ConfigError("log-spaced sweep axis requires lo > 0");
      axis.values.resize(count);
      for (int i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / (count - 1);
        axis.values[i] = log_spaced ? lo * std::pow(hi / lo, t)
                                    : lo + (hi - lo) * t;
      }
      axis.values.front() = lo;
      axis.values.back() = hi;
    }
  } else if (spec.find(',') != std::string::npos) {
    for (const std::string& part : split(spec, ','))
      axis.values.push_back(parse_axis_number(part));
  } else {
    axis.values = {parse_axis_number(spec)};
  }
  axis.validate();
  return axis;
}

void SweepAxis::validate() const {
  if (values.empty()) throw ConfigError("sweep axis has no values");
  for (size_t i = 1; i < values.size(); ++i)
    if (!(values[i] > values[i - 1]))
      throw ConfigError("sweep axis values must be strictly increasing");
  for (double v : values) {
    bool ok = true;
    switch (param) {
      case SweepParam::FrequencyHz: ok = v > 0.0; break;
      case SweepParam::Eta: ok = v >= 0.001 && v <= 0.5; break;
      case SweepParam::PowerM: ok = v >= 1.0 && v <= 10.0; break;
      case SweepParam::TaperFraction: ok = v > 0.0 && v < 0.5; break;
    }
    if (!ok)
      throw ConfigError(std::string("sweep axis ") + to_string(param) +
                        " value " + std::to_string(v) +
                        " is outside the studied bounds");
  }
}

SweepAxis frequency_axis(const SweepSettings& sweep) {
  sweep.validate();
  std::ostringstream text;
  text << "frequency_hz=" << sweep.freq_lo << ":" << sweep.freq_hi << ":"
       << sweep.freq_points << (sweep.freq_log ? "log" : "lin");
  if (sweep.freq_points == 1) {
    SweepAxis axis;
    axis.param = SweepParam::FrequencyHz;
    axis.values = {sweep.freq_lo};
    return axis;
  }
  return SweepAxis::parse(text.str());
}

SweepResult run_sweep(const Config& cfg, const SweepAxis& axis1,
                      const SweepAxis& axis2) {
  cfg.validate();
  axis1.validate();
  axis2.validate();
  if (axis1.param == axis2.param)
    throw ConfigError("sweep axes must vary distinct parameters");
  const bool a1f = axis1.param == SweepParam::FrequencyHz;
  const bool a2f = axis2.param == SweepParam::FrequencyHz;
  if (a1f == a2f)
    throw ConfigError("exactly one sweep axis must be frequency_hz");
  const SweepAxis& faxis = a1f ? axis1 : axis2;
  const SweepAxis& paxis = a1f ? axis2 : axis1;
  const int nf = static_cast<int>(faxis.values.size());
  const int np = static_cast<int>(paxis.values.size());

  const BasisSet basis(cfg.solver.basis_n, cfg.beam.L);
  const std::vector<double> x_grid = analysis_stations(cfg.analysis);

  // One model per parameter value, built up front; the grid cells then share
  // them read-only.
  std::vector<std::optional<SpectralModel>> models(np);
  std::vector<std::string> model_tag(np);
  for (int pi = 0; pi < np; ++pi) {
    BeamConfig bc = cfg.beam;
    apply_param(bc, paxis.param, paxis.values[pi]);
    try {
      models[pi] = assemble(bc, basis, cfg.solver.quad_order);
    } catch (const ConfigError&) {
      model_tag[pi] = "config";
    } catch (const AssemblyError&) {
      model_tag[pi] = "assembly";
    } catch (const std::exception&) {
      model_tag[pi] = "error";
    }
  }

  const long ncells = static_cast<long>(np) * nf;
  std::vector<double> cf_cells(ncells, kNaN);
  std::vector<std::string> tag_cells(ncells);
  std::atomic<long> next{0};

  auto work = [&]() {
    for (;;) {
      const long c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= ncells) return;
      const int pi = static_cast<int>(c / nf);
      const int fi = static_cast<int>(c % nf);
      if (!models[pi]) {
        tag_cells[c] = model_tag[pi];
        continue;
      }
      try {
        const double omega = 2.0 * std::numbers::pi * faxis.values[fi];
        const HarmonicSolution sol = harmonic_response(*models[pi], omega);
        cf_cells[c] = cost_function(station_envelope(sol, basis, x_grid));
      } catch (const ResonanceError&) {
        tag_cells[c] = "resonance";
      } catch (const SolverError&) {
        tag_cells[c] = "solver";
      } catch (const MetricError&) {
        tag_cells[c] = "metric";
      } catch (const std::exception&) {
        tag_cells[c] = "error";
      }
    }
  };

  const int workers = worker_count(ncells);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  SweepResult result;
  result.axis1 = axis1;
  result.axis2 = axis2;
  result.cf.resize(axis1.values.size(), axis2.values.size());
  for (int i = 0; i < static_cast<int>(axis1.values.size()); ++i) {
    for (int j = 0; j < static_cast<int>(axis2.values.size()); ++j) {
      const int pi = a1f ? j : i;
      const int fi = a1f ? i : j;
      const long c = static_cast<long>(pi) * nf + fi;
      result.cf(i, j) = cf_cells[c];
      if (!tag_cells[c].empty())
        result.failed.push_back({i, j, tag_cells[c]});
    }
  }
  return result;
}

TrendReport summarize_trends(
    const SweepResult& result, const BeamConfig& base,
    const std::vector<std::pair<double, double>>& bands_hz) {
  const bool a1f = result.axis1.param == SweepParam::FrequencyHz;
  const bool a2f = result.axis2.param == SweepParam::FrequencyHz;
  if (a1f == a2f)
    throw ConfigError("trend summary needs one frequency axis");
  const SweepAxis& faxis = a1f ? result.axis1 : result.axis2;
  const SweepAxis& paxis = a1f ? result.axis2 : result.axis1;

  TrendReport report;
  report.param = paxis.param;
  report.param_values = paxis.values;
  if (paxis.param == SweepParam::TaperFraction) {
    report.vem_coverage.reserve(paxis.values.size());
    for (double f : paxis.values) {
      const double taper_len = base.L * f;
      report.vem_coverage.push_back((base.L - base.L2) / taper_len);
    }
  }

  auto min_over = [&](bool rows) {
    const int outer =
        static_cast<int>(rows ? result.cf.rows() : result.cf.cols());
    const int inner =
        static_cast<int>(rows ? result.cf.cols() : result.cf.rows());
    std::vector<double> mins(outer, kNaN);
    for (int a = 0; a < outer; ++a) {
      double best = kNaN;
      for (int b = 0; b < inner; ++b) {
        const double v = rows ? result.cf(a, b) : result.cf(b, a);
        if (std::isfinite(v) && !(v >= best)) best = v;
      }
      mins[a] = best;
    }
    return mins;
  };
  report.axis1_min = min_over(true);
  report.axis2_min = min_over(false);

  for (auto [lo, hi] : bands_hz) {
    BandTrend band;
    band.lo_hz = lo;
    band.hi_hz = hi;
    band.avg_cf.assign(paxis.values.size(), kNaN);
    for (size_t pi = 0; pi < paxis.values.size(); ++pi) {
      double sum = 0.0;
      int count = 0;
      for (size_t fi = 0; fi < faxis.values.size(); ++fi) {
        const double f = faxis.values[fi];
        if (f < lo || f > hi) continue;
        const double v =
            a1f ? result.cf(fi, pi) : result.cf(pi, fi);
        if (!std::isfinite(v)) continue;
        sum += v;
        ++count;
      }
      if (count > 0) band.avg_cf[pi] = sum / count;
    }
    band.argmin_param = kNaN;
    double best = kNaN;
    for (size_t pi = 0; pi < paxis.values.size(); ++pi) {
      const double v = band.avg_cf[pi];
      if (std::isfinite(v) && !(v >= best)) {
        best = v;
        band.argmin_param = paxis.values[pi];
      }
    }
    report.bands.push_back(std::move(band));
  }
  return report;
}

std::string format_trends(const TrendReport& report) {
  std::ostringstream out;
  out << "parameter: " << to_string(report.param) << "\n";
  for (const BandTrend& band : report.bands) {
    out << "band " << band.lo_hz << "-" << band.hi_hz
        << " Hz: argmin " << to_string(report.param) << " = "
        << band.argmin_param << "\n";
    for (size_t pi = 0; pi < report.param_values.size(); ++pi) {
      out << "  " << to_string(report.param) << " = "
          << report.param_values[pi];
      if (!report.vem_coverage.empty())
        out << " (vem coverage " << report.vem_coverage[pi] << ")";
      out << ": band-avg cf = " << band.avg_cf[pi] << "\n";
    }
  }
  return out.str();
}

}  // namespace abh
