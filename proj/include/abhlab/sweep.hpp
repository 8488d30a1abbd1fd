#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "abhlab/config.hpp"

namespace abh {

/// Parameters that a sweep axis may vary.
enum class SweepParam { FrequencyHz, Eta, PowerM, TaperFraction };

const char* to_string(SweepParam param);

/// One sweep axis: a parameter name plus a strictly increasing value list
/// within the physically studied bounds (frequency > 0, eta in [0.001, 0.5],
/// m in [1, 10], taper_fraction in (0, 0.5)).
struct SweepAxis {
  SweepParam param = SweepParam::FrequencyHz;
  std::vector<double> values;

  /// Parses "name=lo:hi:COUNT[log|lin]", "name=v1,v2,..." or "name=value".
  static SweepAxis parse(const std::string& text);

  void validate() const;
};

/// Frequency axis built from the [sweep] config section.
SweepAxis frequency_axis(const SweepSettings& sweep);

/// A grid point whose evaluation failed, with a short error tag.
struct FailedPoint {
  int i = 0;  ///< axis1 index
  int j = 0;  ///< axis2 index
  std::string tag;
};

/// CF surface over axis1 x axis2. Failed cells hold NaN and are listed in
/// `failed` (row-major order).
struct SweepResult {
  SweepAxis axis1;
  SweepAxis axis2;
  Eigen::MatrixXd cf;
  std::vector<FailedPoint> failed;
};

/// Evaluates CF on the axis1 x axis2 grid. Exactly one axis must vary
/// frequency_hz; the other derives a beam config per value (taper_fraction f
/// sets L1 = L(1 - f) with the total length and VEM tape length held fixed).
/// Grid points run on a worker pool (capped by ABHLAB_THREADS); per-point
/// failures are recorded, never fatal, and the result is independent of the
/// worker count.
SweepResult run_sweep(const Config& cfg, const SweepAxis& axis1,
                      const SweepAxis& axis2);

/// Band summary of a sweep: CF averaged over a frequency band for each value
/// of the non-frequency parameter, and the value minimizing that average.
struct BandTrend {
  double lo_hz = 0.0;
  double hi_hz = 0.0;
  std::vector<double> avg_cf;  ///< one entry per parameter value
  double argmin_param = 0.0;
};

struct TrendReport {
  SweepParam param = SweepParam::Eta;  ///< the non-frequency axis
  std::vector<double> param_values;
  /// For taper sweeps, the VEM tape coverage (L - L2)/(L - L1) per value;
  /// empty otherwise.
  std::vector<double> vem_coverage;
  std::vector<double> axis1_min;  ///< min finite CF along each axis1 row
  std::vector<double> axis2_min;  ///< min finite CF along each axis2 column
  std::vector<BandTrend> bands;
};

/// Default report bands: 1-4 kHz and 4-10 kHz.
TrendReport summarize_trends(
    const SweepResult& result, const BeamConfig& base,
    const std::vector<std::pair<double, double>>& bands_hz = {{1000.0, 4000.0},
                                                              {4000.0,
                                                               10000.0}});

std::string format_trends(const TrendReport& report);

}  // namespace abh
