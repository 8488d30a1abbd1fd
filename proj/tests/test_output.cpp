#include "abhlab/output.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace abh {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  EXPECT_TRUE(in.good()) << path;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

double parse(const std::string& text) { return std::strtod(text.c_str(), nullptr); }

std::string tmp_path(const std::string& name) {
  return testing::TempDir() + name;
}

TEST(ModesCsv, HeaderRowsAndExactRoundTrip) {
  const std::vector<Mode> modes = {{1234.5678901234567, 0.012345678901234567},
                                   {2469.1357802469135, 0.5}};
  const std::string path = tmp_path("modes.csv");
  write_modes_csv(path, modes);
  const std::vector<std::string> lines = lines_of(read_file(path));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "mode_index,frequency_hz,modal_loss_factor");
  for (size_t i = 0; i < modes.size(); ++i) {
    const std::vector<std::string> f = split_csv(lines[i + 1]);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0], std::to_string(i + 1));
    // 17 significant digits recover the doubles bit-for-bit.
    EXPECT_EQ(parse(f[1]), modes[i].frequency_hz);
    EXPECT_EQ(parse(f[2]), modes[i].eta_modal);
  }
}

TEST(EnvelopeCsv, HeaderAndValues) {
  const std::vector<double> x = {0.05, 0.1, 0.15};
  Eigen::VectorXd env(3);
  env << 1.5e-3, 2.25e-3, 0.75e-3;
  const std::string path = tmp_path("envelope.csv");
  write_envelope_csv(path, x, env);
  const std::vector<std::string> lines = lines_of(read_file(path));
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "x_m,amplitude");
  for (int j = 0; j < 3; ++j) {
    const std::vector<std::string> f = split_csv(lines[j + 1]);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(parse(f[0]), x[j]);
    EXPECT_EQ(parse(f[1]), env[j]);
  }
}

TEST(FieldMatrix, AxisHeadersThenStationRows) {
  WaveField field;
  field.x_grid = {0.0, 0.1, 0.2};
  field.t_grid = {0.0, 1e-4};
  field.w.resize(3, 2);
  field.w << 1.0, -2.0, 3.5, 0.25, -0.125, 7.0;
  const std::string path = tmp_path("field.dat");
  write_field_matrix(path, field);
  const std::vector<std::string> lines = lines_of(read_file(path));
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0].rfind("# x_m ", 0), 0u);
  EXPECT_EQ(lines[1].rfind("# t_s ", 0), 0u);
  std::istringstream row(lines[2]);
  double a = 0.0, b = 0.0;
  row >> a >> b;
  EXPECT_EQ(a, 1.0);
  EXPECT_EQ(b, -2.0);
  std::istringstream hdr(lines[1].substr(5));
  hdr >> a >> b;
  EXPECT_EQ(a, 0.0);
  EXPECT_EQ(b, 1e-4);
}

TEST(SpectrumMatrix, AxisHeadersThenWavenumberRows) {
  Spectrum2D spec;
  spec.wavenumbers = {-10.0, 0.0, 10.0};
  spec.freqs = {0.0, 100.0};
  spec.magnitude.resize(3, 2);
  spec.magnitude << 0.0, 0.5, 0.25, 1.0, 0.125, 0.0625;
  const std::string path = tmp_path("spectrum.dat");
  write_spectrum_matrix(path, spec);
  const std::vector<std::string> lines = lines_of(read_file(path));
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0].rfind("# wavenumber_rad_per_m ", 0), 0u);
  EXPECT_EQ(lines[1].rfind("# frequency_hz ", 0), 0u);
  std::istringstream row(lines[3]);
  double a = 0.0, b = 0.0;
  row >> a >> b;
  EXPECT_EQ(a, 0.25);
  EXPECT_EQ(b, 1.0);
}

SweepResult sample_result() {
  SweepResult r;
  r.axis1.param = SweepParam::FrequencyHz;
  r.axis1.values = {2000.0, 4000.0};
  r.axis2.param = SweepParam::TaperFraction;
  r.axis2.values = {0.0625, 0.25};
  r.cf.resize(2, 2);
  r.cf << 0.125, std::numeric_limits<double>::quiet_NaN(), 0.5, 0.0625;
  r.failed = {{0, 1, "config"}};
  return r;
}

TEST(SweepCsv, LongFormatWithStatusColumn) {
  const std::string path = tmp_path("cf_sweep.csv");
  write_sweep_csv(path, sample_result());
  const std::vector<std::string> lines = lines_of(read_file(path));
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "axis1_value,axis2_value,cf,status");
  EXPECT_EQ(lines[1], "2000,0.0625,0.125,ok");
  EXPECT_EQ(lines[2], "2000,0.25,nan,config");
  EXPECT_EQ(lines[3], "4000,0.0625,0.5,ok");
  EXPECT_EQ(lines[4], "4000,0.25,0.0625,ok");
}

TEST(SweepMatrix, NamedAxisHeaders) {
  const std::string path = tmp_path("cf_matrix.dat");
  write_sweep_matrix(path, sample_result());
  const std::vector<std::string> lines = lines_of(read_file(path));
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0].rfind("# frequency_hz ", 0), 0u);
  EXPECT_EQ(lines[1].rfind("# taper_fraction ", 0), 0u);
  EXPECT_NE(lines[2].find("nan"), std::string::npos);
}

TEST(Writers, DeterministicBytes) {
  const std::vector<Mode> modes = {{11.539304567, 1.3e-4}, {18.68171, 2.7e-3}};
  const std::string p1 = tmp_path("det1.csv");
  const std::string p2 = tmp_path("det2.csv");
  write_modes_csv(p1, modes);
  write_modes_csv(p2, modes);
  EXPECT_EQ(read_file(p1), read_file(p2));

  const std::string s1 = tmp_path("det1_sweep.csv");
  const std::string s2 = tmp_path("det2_sweep.csv");
  write_sweep_csv(s1, sample_result());
  write_sweep_csv(s2, sample_result());
  EXPECT_EQ(read_file(s1), read_file(s2));
}

TEST(Svg, LinePlotSmoke) {
  const std::vector<double> x = {1000.0, 2000.0, 4000.0, 8000.0};
  const std::vector<double> y = {0.4, 0.2, 0.1, 0.3};
  for (bool log_x : {false, true}) {
    const std::string path =
        tmp_path(log_x ? "line_log.svg" : "line_lin.svg");
    write_svg_line(path, x, y, "cost function", log_x);
    const std::string text = read_file(path);
    EXPECT_EQ(text.rfind("<svg", 0), 0u);
    EXPECT_NE(text.find("cost function"), std::string::npos);
    EXPECT_NE(text.find("polyline"), std::string::npos);
    EXPECT_NE(text.find("</svg>"), std::string::npos);
  }
}

TEST(Svg, HeatmapHandlesNanCells) {
  Eigen::MatrixXd values(2, 3);
  values << 0.1, 0.9, std::numeric_limits<double>::quiet_NaN(), 0.5, 0.2, 0.7;
  const std::string path = tmp_path("heatmap.svg");
  write_svg_heatmap(path, values, "cf surface");
  const std::string text = read_file(path);
  EXPECT_EQ(text.rfind("<svg", 0), 0u);
  EXPECT_NE(text.find("cf surface"), std::string::npos);
  // The NaN cell renders as a white tile.
  EXPECT_NE(text.find("rgb(255,255,255)"), std::string::npos);
  EXPECT_NE(text.find("</svg>"), std::string::npos);
}

TEST(Writers, IoFailureNamesPath) {
  const std::string path = "/nonexistent-dir-for-abhlab/out.csv";
  try {
    write_modes_csv(path, {});
    FAIL() << "expected std::runtime_error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find(path), std::string::npos);
  }
}

}  // namespace
}  // namespace abh
