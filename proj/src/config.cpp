#include "abhlab/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "abhlab/errors.hpp"

namespace abh {

namespace {

bool finite(double v) { return std::isfinite(v); }

void check(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  // A trailing unit suffix ("3 mm", "68.9GPa") is rejected: values are SI
  // numbers only.
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError("config key '" + key + "': value '" + value +
                      "' is not a plain SI number");
  }
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  const double d = parse_number(key, value);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d) {
    throw ConfigError("config key '" + key + "': expected an integer, got '" +
                      value + "'");
  }
  return i;
}

bool parse_spacing(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (v == "log") return true;
  if (v == "linear") return false;
  throw ConfigError("config key '" + key + "': expected 'log' or 'linear'");
}

const char* const kKeys[] = {
    "beam.L",           "beam.B",
    "beam.h1",          "beam.E",
    "beam.rho",         "abh.L1",
    "abh.h2",           "abh.m",
    "vem.L2",           "vem.h3",
    "vem.E_storage",    "vem.eta",
    "vem.rho",          "force.L3",
    "force.F0",         "solver.basis_n",
    "solver.quad_order", "analysis.window_lo",
    "analysis.window_hi", "analysis.stations",
    "analysis.periods", "analysis.samples_per_period",
    "analysis.pad_factor", "sweep.freq_lo",
    "sweep.freq_hi",    "sweep.freq_points",
    "sweep.freq_spacing",
};

bool known_key(const std::string& k) {
  for (const char* key : kKeys)
    if (k == key) return true;
  return false;
}

using KeyMap = std::map<std::string, std::string>;

KeyMap read_key_values(std::istream& in) {
  KeyMap kv;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (size_t h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": malformed section header '" + line + "'");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos || section.empty())
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected 'key = value' inside a section");
    std::string key = section + "." + trim(line.substr(0, eq));
    if (!known_key(key)) throw ConfigError("unknown config key '" + key + "'");
    if (kv.count(key)) throw ConfigError("duplicate config key '" + key + "'");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

Config from_key_values(const KeyMap& kv) {
  for (const char* key : kKeys)
    if (!kv.count(key)) throw ConfigError(std::string("missing config key '") + key + "'");

  auto num = [&](const char* k) { return parse_number(k, kv.at(k)); };
  auto integer = [&](const char* k) { return parse_int(k, kv.at(k)); };

  Config c;
  c.beam.L = num("beam.L");
  c.beam.B = num("beam.B");
  c.beam.h1 = num("beam.h1");
  c.beam.E_b = num("beam.E");
  c.beam.rho_b = num("beam.rho");
  c.beam.L1 = num("abh.L1");
  c.beam.h2 = num("abh.h2");
  c.beam.m = num("abh.m");
  c.beam.L2 = num("vem.L2");
  c.beam.h3 = num("vem.h3");
  c.beam.E_vs = num("vem.E_storage");
  c.beam.eta = num("vem.eta");
  c.beam.rho_v = num("vem.rho");
  c.beam.L3 = num("force.L3");
  c.beam.F0 = num("force.F0");
  c.solver.basis_n = integer("solver.basis_n");
  c.solver.quad_order = integer("solver.quad_order");
  c.analysis.window_lo = num("analysis.window_lo");
  c.analysis.window_hi = num("analysis.window_hi");
  c.analysis.stations = integer("analysis.stations");
  c.analysis.periods = integer("analysis.periods");
  c.analysis.samples_per_period = integer("analysis.samples_per_period");
  c.analysis.pad_factor = integer("analysis.pad_factor");
  c.sweep.freq_lo = num("sweep.freq_lo");
  c.sweep.freq_hi = num("sweep.freq_hi");
  c.sweep.freq_points = integer("sweep.freq_points");
  c.sweep.freq_log = parse_spacing("sweep.freq_spacing", kv.at("sweep.freq_spacing"));
  c.validate();
  return c;
}

void apply_overrides(KeyMap& kv, const std::vector<std::string>& overrides) {
  for (const std::string& ov : overrides) {
    size_t eq = ov.find('=');
    if (eq == std::string::npos)
      throw ConfigError("override '" + ov + "' is not of the form section.key=value");
    std::string key = trim(ov.substr(0, eq));
    if (!kv.count(key))
      throw ConfigError("override references unknown config key '" + key + "'");
    kv[key] = trim(ov.substr(eq + 1));
  }
}

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void BeamConfig::validate() const {
  for (auto [v, k] : {std::pair{L, "beam.L"},       {L1, "abh.L1"},
                      {L2, "vem.L2"},               {L3, "force.L3"},
                      {B, "beam.B"},                {h1, "beam.h1"},
                      {h2, "abh.h2"},               {h3, "vem.h3"},
                      {m, "abh.m"},                 {E_b, "beam.E"},
                      {rho_b, "beam.rho"},          {E_vs, "vem.E_storage"},
                      {eta, "vem.eta"},             {rho_v, "vem.rho"},
                      {F0, "force.F0"}}) {
    check(finite(v), std::string("config key '") + k + "' must be finite");
  }
  check(L > 0.0, "beam.L must be positive");
  check(B > 0.0, "beam.B must be positive");
  check(L1 > 0.0 && L1 < L2 && L2 < L,
        "section layout must satisfy 0 < abh.L1 < vem.L2 < beam.L");
  check(L3 >= 0.0 && L3 < L1,
        "force.L3 must lie on the uniform section [0, abh.L1)");
  check(h2 > 0.0, "abh.h2 must be positive");
  check(h1 >= h2, "beam.h1 must be >= abh.h2");
  check(h3 >= 0.0, "vem.h3 must be non-negative");
  check(m >= 1.0, "abh.m must be >= 1");
  check(E_b > 0.0, "beam.E must be positive");
  check(rho_b > 0.0, "beam.rho must be positive");
  check(E_vs > 0.0, "vem.E_storage must be positive");
  check(eta >= 0.0, "vem.eta must be non-negative");
  check(rho_v > 0.0, "vem.rho must be positive");
}

void SolverSettings::validate() const {
  check(basis_n >= 4, "solver.basis_n must be >= 4");
  check(quad_order >= 0, "solver.quad_order must be >= 0 (0 = automatic)");
}

void AnalysisSettings::validate() const {
  check(finite(window_lo) && finite(window_hi) && window_lo >= 0.0 &&
            window_lo < window_hi,
        "analysis window must satisfy 0 <= window_lo < window_hi");
  check(stations >= 32, "analysis.stations must be >= 32");
  check(periods >= 1, "analysis.periods must be >= 1");
  check(samples_per_period >= 16, "analysis.samples_per_period must be >= 16");
  check(pad_factor >= 1, "analysis.pad_factor must be >= 1");
}

void SweepSettings::validate() const {
  check(finite(freq_lo) && freq_lo > 0.0, "sweep.freq_lo must be positive");
  check(finite(freq_hi) && freq_hi > freq_lo, "sweep.freq_hi must exceed sweep.freq_lo");
  check(freq_points >= 1, "sweep.freq_points must be >= 1");
}

void Config::validate() const {
  beam.validate();
  solver.validate();
  analysis.validate();
  sweep.validate();
  check(analysis.window_hi <= beam.L,
        "analysis.window_hi must not exceed beam.L");
}

Config baseline_config() {
  Config c;
  c.beam.L = 1.22;
  c.beam.L1 = 1.0;
  c.beam.L2 = 1.138;
  c.beam.L3 = 0.025;
  c.beam.B = 0.0127;
  c.beam.h1 = 0.003;
  c.beam.h2 = 0.0002;
  c.beam.h3 = 0.0019;
  c.beam.m = 3.0;
  c.beam.E_b = 68.9e9;
  c.beam.rho_b = 2700.0;
  c.beam.E_vs = 96.16e6;
  c.beam.eta = 0.34;
  c.beam.rho_v = 1041.2;
  c.beam.F0 = 1.0;
  c.validate();
  return c;
}

Config parse_config_text(const std::string& text,
                         const std::vector<std::string>& overrides) {
  std::istringstream in(text);
  KeyMap kv = read_key_values(in);
  apply_overrides(kv, overrides);
  return from_key_values(kv);
}

Config parse_config(const std::string& path,
                    const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  KeyMap kv = read_key_values(in);
  apply_overrides(kv, overrides);
  return from_key_values(kv);
}

std::string write_config(const Config& c) {
  std::ostringstream out;
  out << "[beam]\n"
      << "L = " << g17(c.beam.L) << "\n"
      << "B = " << g17(c.beam.B) << "\n"
      << "h1 = " << g17(c.beam.h1) << "\n"
      << "E = " << g17(c.beam.E_b) << "\n"
      << "rho = " << g17(c.beam.rho_b) << "\n\n"
      << "[abh]\n"
      << "L1 = " << g17(c.beam.L1) << "\n"
      << "h2 = " << g17(c.beam.h2) << "\n"
      << "m = " << g17(c.beam.m) << "\n\n"
      << "[vem]\n"
      << "L2 = " << g17(c.beam.L2) << "\n"
      << "h3 = " << g17(c.beam.h3) << "\n"
      << "E_storage = " << g17(c.beam.E_vs) << "\n"
      << "eta = " << g17(c.beam.eta) << "\n"
      << "rho = " << g17(c.beam.rho_v) << "\n\n"
      << "[force]\n"
      << "L3 = " << g17(c.beam.L3) << "\n"
      << "F0 = " << g17(c.beam.F0) << "\n\n"
      << "[solver]\n"
      << "basis_n = " << c.solver.basis_n << "\n"
      << "quad_order = " << c.solver.quad_order << "\n\n"
      << "[analysis]\n"
      << "window_lo = " << g17(c.analysis.window_lo) << "\n"
      << "window_hi = " << g17(c.analysis.window_hi) << "\n"
      << "stations = " << c.analysis.stations << "\n"
      << "periods = " << c.analysis.periods << "\n"
      << "samples_per_period = " << c.analysis.samples_per_period << "\n"
      << "pad_factor = " << c.analysis.pad_factor << "\n\n"
      << "[sweep]\n"
      << "freq_lo = " << g17(c.sweep.freq_lo) << "\n"
      << "freq_hi = " << g17(c.sweep.freq_hi) << "\n"
      << "freq_points = " << c.sweep.freq_points << "\n"
      << "freq_spacing = " << (c.sweep.freq_log ? "log" : "linear") << "\n";
  return out.str();
}

}  // namespace abh
