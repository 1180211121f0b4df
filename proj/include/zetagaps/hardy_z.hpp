#pragma once

#include <cstddef>
#include <vector>

#include "zetagaps/quadrature.hpp"

namespace zetagaps {

/// Smallest t for which the asymptotic theta series and the Riemann-Siegel
/// formula are used.
inline constexpr double kRegimeStart = 10.0;

/// Riemann-Siegel theta: (t/2) log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760t^3).
double theta(double t);

/// Hardy Z(t) from the Riemann-Siegel main sum plus the first correction
/// term. The truncation error is of order t^{-3/4}.
double z_eval(double t);

/// Z'(t) by central differences; both stencil points use the main-sum
/// length of t so the jump of the formula at t = 2 pi n^2 is not sampled.
double z_derivative(double t, double step = 1e-4);

/// Riemann-von Mangoldt main term (T/2pi) log(T/(2 pi e)), for T >= 2 pi e.
double count_main_term(double T);

/// Mean zero spacing 2 pi / log t at height t.
double average_spacing(double t);

/// Gap divided by the mean spacing at t.
double normalized_gap(double t, double gap);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct ZeroTable {
  std::vector<double> ordinates;
  double t_min = 0.0;
  double t_max = 0.0;
  double refine_tolerance = 1e-9;
};

/// Zero count against the main term over the scanned range.
struct CountAudit {
  long actual = 0;
  double expected = 0.0;
  double allowance = 0.0;
  bool deficit = false;
  bool excess = false;
  /// Dips of |Z| without a sign change that could not be resolved, i.e.
  /// candidate close zero pairs.
  std::vector<Interval> suspects;

  bool ok() const { return !deficit && !excess; }
};

struct ZeroScan {
  ZeroTable table;
  CountAudit audit;
};

struct ScanOptions {
  /// Sampling step as a fraction of the local mean spacing, in (0, 0.5].
  double grid_factor = 0.25;
  double refine_tolerance = 1e-9;
  unsigned threads = 1;
};

/// A scan range is cut into segments that depend only on (t_min, t_max),
/// so serial, parallel, and resumed scans sample identical points.
struct ScanSegment {
  std::size_t index = 0;
  double lo = 0.0;
  double hi = 0.0;
  bool last = false;
};

struct SegmentResult {
  std::size_t index = 0;
  std::vector<double> zeros;
  std::vector<Interval> suspects;
};

std::vector<ScanSegment> plan_segments(double t_min, double t_max);

/// Zeros in [lo, hi) ([lo, hi] for the last segment).
SegmentResult scan_segment(const ScanSegment& segment, const ScanOptions& options);

/// Merges per-segment results (any order) and runs the count audit.
ZeroScan assemble_scan(double t_min, double t_max, const ScanOptions& options,
                       std::vector<SegmentResult> segments);

/// Sign-change scan of Z on [t_min, t_max] with bisection refinement.
ZeroScan find_zeros(double t_min, double t_max, const ScanOptions& options = {});

/// Allowed |count - main term| over [t_min, t_max]: 2 + 2 log(t_max)/pi.
double count_allowance(double t_max);

/// Main-term zero count expected in [t_min, t_max]; heights below 2 pi e
/// contribute nothing.
double expected_count(double t_min, double t_max);

struct GapStatistics {
  std::vector<double> gaps;
  std::vector<double> normalized_gaps;
  double max_gap = 0.0;
  std::size_t max_index = 0;
  double mean_gap = 0.0;
  double bucket_width = 0.1;
  /// Counts of r_n per bucket; the last bucket also holds everything above.
  std::vector<std::size_t> histogram;
};

GapStatistics gap_stats(const ZeroTable& zeros, double bucket_width = 0.1, std::size_t buckets = 40);

struct EmpiricalMoment {
  int k = 0;
  int h = 0;
  double lower = kRegimeStart;
  double T = 0.0;
  double integral_value = 0.0;
  double abs_error = 0.0;
  int panels_used = 0;
  /// a(k) b(h,k) T (log T)^{k^2 + 2h}
  double predicted = 0.0;
  double ratio = 0.0;
};

/// int_lo^hi |Z|^{2k-2h} |Z'|^{2h} dt with at most `panels` quadrature panels.
QuadratureResult moment_integral(int k, int h, double lo, double hi, int panels);

/// Moment over [10, T] compared with the random-matrix prediction.
EmpiricalMoment empirical_moment(int k, int h, double T, int panels = 400000);

}  // namespace zetagaps
