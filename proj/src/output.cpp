#include "abhlab/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace abh {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_axis_header(std::ofstream& out, const char* label,
                       const std::vector<double>& values) {
  out << "# " << label;
  for (double v : values) out << " " << g17(v);
  out << "\n";
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace

void write_modes_csv(const std::string& path, const std::vector<Mode>& modes) {
  std::ofstream out = open_out(path);
  out << "mode_index,frequency_hz,modal_loss_factor\n";
  for (size_t i = 0; i < modes.size(); ++i)
    out << i + 1 << "," << g17(modes[i].frequency_hz) << ","
        << g17(modes[i].eta_modal) << "\n";
  finish(out, path);
}

void write_envelope_csv(const std::string& path,
                        const std::vector<double>& x_grid,
                        const Eigen::VectorXd& env) {
  std::ofstream out = open_out(path);
  out << "x_m,amplitude\n";
  for (size_t j = 0; j < x_grid.size(); ++j)
    out << g17(x_grid[j]) << "," << g17(env[static_cast<Eigen::Index>(j)])
        << "\n";
  finish(out, path);
}

void write_field_matrix(const std::string& path, const WaveField& field) {
  std::ofstream out = open_out(path);
  write_axis_header(out, "x_m", field.x_grid);
  write_axis_header(out, "t_s", field.t_grid);
  for (Eigen::Index j = 0; j < field.w.rows(); ++j) {
    for (Eigen::Index k = 0; k < field.w.cols(); ++k)
      out << g17(field.w(j, k)) << (k + 1 < field.w.cols() ? " " : "\n");
  }
  finish(out, path);
}

void write_spectrum_matrix(const std::string& path, const Spectrum2D& spec) {
  std::ofstream out = open_out(path);
  write_axis_header(out, "wavenumber_rad_per_m", spec.wavenumbers);
  write_axis_header(out, "frequency_hz", spec.freqs);
  for (Eigen::Index r = 0; r < spec.magnitude.rows(); ++r) {
    for (Eigen::Index q = 0; q < spec.magnitude.cols(); ++q)
      out << g17(spec.magnitude(r, q))
          << (q + 1 < spec.magnitude.cols() ? " " : "\n");
  }
  finish(out, path);
}

void write_sweep_csv(const std::string& path, const SweepResult& result) {
  // Failed cells were recorded in row-major order, so a single cursor keeps
  // the lookup linear.
  std::ofstream out = open_out(path);
  out << "axis1_value,axis2_value,cf,status\n";
  size_t cursor = 0;
  for (size_t i = 0; i < result.axis1.values.size(); ++i) {
    for (size_t j = 0; j < result.axis2.values.size(); ++j) {
      const char* status = "ok";
      if (cursor < result.failed.size() &&
          result.failed[cursor].i == static_cast<int>(i) &&
          result.failed[cursor].j == static_cast<int>(j)) {
        status = result.failed[cursor].tag.c_str();
        ++cursor;
      }
      out << g17(result.axis1.values[i]) << ","
          << g17(result.axis2.values[j]) << ","
          << g17(result.cf(static_cast<Eigen::Index>(i),
                           static_cast<Eigen::Index>(j)))
          << "," << status << "\n";
    }
  }
  finish(out, path);
}

void write_sweep_matrix(const std::string& path, const SweepResult& result) {
  std::ofstream out = open_out(path);
  write_axis_header(out, to_string(result.axis1.param), result.axis1.values);
  write_axis_header(out, to_string(result.axis2.param), result.axis2.values);
  for (Eigen::Index i = 0; i < result.cf.rows(); ++i) {
    for (Eigen::Index j = 0; j < result.cf.cols(); ++j)
      out << g17(result.cf(i, j)) << (j + 1 < result.cf.cols() ? " " : "\n");
  }
  finish(out, path);
}

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 420;
constexpr int kMargin = 50;

double axis_pos(double v, double lo, double hi, bool log_scale) {
  if (log_scale) {
    v = std::log10(v);
    lo = std::log10(lo);
    hi = std::log10(hi);
  }
  return hi > lo ? (v - lo) / (hi - lo) : 0.5;
}

}  // namespace

void write_svg_line(const std::string& path, const std::vector<double>& x,
                    const std::vector<double>& y, const std::string& title,
                    bool log_x) {
  std::ofstream out = open_out(path);
  const auto [xmin_it, xmax_it] = std::minmax_element(x.begin(), x.end());
  const auto [ymin_it, ymax_it] = std::minmax_element(y.begin(), y.end());
  const double ylo = *ymin_it, yhi = *ymax_it;

  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth
      << "' height='" << kHeight << "'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='" << kWidth / 2 << "' y='20' text-anchor='middle'>"
      << title << "</text>\n"
      << "<rect x='" << kMargin << "' y='" << kMargin << "' width='"
      << kWidth - 2 * kMargin << "' height='" << kHeight - 2 * kMargin
      << "' fill='none' stroke='black'/>\n<polyline fill='none' "
         "stroke='steelblue' stroke-width='1.5' points='";
  for (size_t i = 0; i < x.size() && i < y.size(); ++i) {
    const double px =
        kMargin + axis_pos(x[i], *xmin_it, *xmax_it, log_x) *
                      (kWidth - 2 * kMargin);
    const double py = kHeight - kMargin -
                      axis_pos(y[i], ylo, yhi, false) *
                          (kHeight - 2 * kMargin);
    out << px << "," << py << " ";
  }
  out << "'/>\n</svg>\n";
  finish(out, path);
}

void write_svg_heatmap(const std::string& path, const Eigen::MatrixXd& values,
                       const std::string& title) {
  std::ofstream out = open_out(path);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (Eigen::Index i = 0; i < values.rows(); ++i)
    for (Eigen::Index j = 0; j < values.cols(); ++j)
      if (std::isfinite(values(i, j))) {
        lo = std::min(lo, values(i, j));
        hi = std::max(hi, values(i, j));
      }
  if (!(hi > lo)) hi = lo + 1.0;

  const double cw =
      static_cast<double>(kWidth - 2 * kMargin) / values.cols();
  const double ch =
      static_cast<double>(kHeight - 2 * kMargin) / values.rows();
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth
      << "' height='" << kHeight << "'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='" << kWidth / 2 << "' y='20' text-anchor='middle'>"
      << title << "</text>\n";
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
      const double v = values(i, j);
      int shade = 255;
      if (std::isfinite(v)) {
        const double t = (v - lo) / (hi - lo);
        shade = static_cast<int>(255.0 * (1.0 - t));
      }
      out << "<rect x='" << kMargin + j * cw << "' y='"
          << kHeight - kMargin - (i + 1) * ch << "' width='" << cw + 0.5
          << "' height='" << ch + 0.5 << "' fill='rgb(" << shade << ","
          << shade << "," << shade << ")'/>\n";
    }
  }
  out << "</svg>\n";
  finish(out, path);
}

}  // namespace abh
