#include "zetagaps/hardy_z.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zetagaps/errors.hpp"
#include "zetagaps/parallel.hpp"
#include "zetagaps/rmt_constants.hpp"

namespace zetagaps {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Zeros per scan segment, in units of the mean spacing.
constexpr double kSegmentSpacings = 256.0;
// Dip probes rescan at a tenth of the scan step.
constexpr int kProbeSubdivision = 10;

void check_regime(double t) {
  if (!(t >= kRegimeStart)) throw OutOfRegimeError("Riemann-Siegel evaluation requires t >= 10");
}

// cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p). The singularities at
// cos(2 pi p) = 0 are removable; near them the value is interpolated
// linearly from points where the quotient is well conditioned.
double psi_raw(double p) {
  return std::cos(kTwoPi * (p * p - p - 1.0 / 16.0)) / std::cos(kTwoPi * p);
}

double psi(double p) {
  constexpr double kGuard = 2e-4;
  if (std::abs(std::cos(kTwoPi * p)) > 1e-3) return psi_raw(p);
  const double root = (std::round(2.0 * p - 0.5) + 0.5) / 2.0;
  const double left = psi_raw(root - kGuard);
  const double right = psi_raw(root + kGuard);
  return left + (right - left) * (p - (root - kGuard)) / (2.0 * kGuard);
}

long main_sum_length(double t) { return static_cast<long>(std::floor(std::sqrt(t / kTwoPi))); }

double z_with_length(double t, long n_terms) {
  const double th = theta(t);
  double sum = 0.0;
  for (long n = 1; n <= n_terms; ++n) {
    const double dn = static_cast<double>(n);
    sum += std::cos(th - t * std::log(dn)) / std::sqrt(dn);
  }
  const double a = std::sqrt(t / kTwoPi);
  const double p = a - static_cast<double>(n_terms);
  const double sign = (n_terms % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
  return 2.0 * sum + sign * psi(p) / std::sqrt(a);
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

double bisect(double lo, double z_lo, double hi, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    const double z_mid = z_eval(mid);
    if (z_mid == 0.0) return mid;
    if (sign_of(z_mid) == sign_of(z_lo)) {
      lo = mid;
      z_lo = z_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Zeros of Z in (lo, hi) found by a uniform fine scan.
void fine_scan(double lo, double hi, int steps, double tol, std::vector<double>& out) {
  double x0 = lo;
  double z0 = z_eval(lo);
  for (int i = 1; i <= steps; ++i) {
    const double x1 = (i == steps) ? hi : lo + (hi - lo) * i / steps;
    const double z1 = z_eval(x1);
    if (sign_of(z0) * sign_of(z1) < 0) out.push_back(bisect(x0, z0, x1, tol));
    x0 = x1;
    z0 = z1;
  }
}

// Minimizes s*Z on [lo, hi] by golden-section search; returns the abscissa.
double golden_minimum(double lo, double hi, int s) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = s * z_eval(c);
  double fd = s * z_eval(d);
  for (int i = 0; i < 60 && (b - a) > 1e-12 * std::max(1.0, std::abs(a)); ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = s * z_eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = s * z_eval(d);
    }
  }
  return fc < fd ? c : d;
}

// A dip of |Z| between two same-signed neighbours usually hides a close
// pair of zeros that the scan step jumped over.
bool probe_dip(double lo, double hi, double tol, std::vector<double>& out) {
  const std::size_t before = out.size();
  fine_scan(lo, hi, 2 * kProbeSubdivision, tol, out);
  if (out.size() > before) return true;
  const int s = sign_of(z_eval(lo));
  const double m = golden_minimum(lo, hi, s);
  const double zm = z_eval(m);
  if (sign_of(zm) != -s) return false;
  out.push_back(bisect(lo, z_eval(lo), m, tol));
  out.push_back(bisect(m, zm, hi, tol));
  return true;
}

}  // namespace

double theta(double t) {
  if (!(t >= kRegimeStart)) throw OutOfRegimeError("theta asymptotic series requires t >= 10");
  return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t);
}

double z_eval(double t) {
  check_regime(t);
  return z_with_length(t, main_sum_length(t));
}

double z_derivative(double t, double step) {
  check_regime(t - step);
  const long n = main_sum_length(t);
  return (z_with_length(t + step, n) - z_with_length(t - step, n)) / (2.0 * step);
}

double count_main_term(double T) {
  constexpr double kThreshold = kTwoPi * std::numbers::e;
  if (!(T >= kThreshold * (1.0 - 1e-15))) throw DomainError("count_main_term requires T >= 2 pi e");
  return T / kTwoPi * std::log(T / kThreshold);
}

double average_spacing(double t) {
  if (!(t > 1.0)) throw DomainError("average spacing requires t > 1");
  return kTwoPi / std::log(t);
}

double normalized_gap(double t, double gap) { return gap / average_spacing(t); }

double count_allowance(double t_max) { return 2.0 + 2.0 * std::log(t_max) / kPi; }

double expected_count(double t_min, double t_max) {
  constexpr double kThreshold = kTwoPi * std::numbers::e;
  auto clamped = [](double x) { return x >= kThreshold ? count_main_term(x) : 0.0; };
  return clamped(t_max) - clamped(t_min);
}

std::vector<ScanSegment> plan_segments(double t_min, double t_max) {
  if (!(t_min >= kRegimeStart)) throw OutOfRegimeError("zero scan requires t_min >= 10");
  if (!(t_max >= t_min)) throw DomainError("zero scan requires t_max >= t_min");
  std::vector<ScanSegment> segments;
  double lo = t_min;
  while (lo < t_max) {
    const double width = kSegmentSpacings * average_spacing(lo);
    double hi = lo + width;
    if (hi + 0.25 * width >= t_max) hi = t_max;
    segments.push_back({segments.size(), lo, hi, hi == t_max});
    lo = hi;
  }
  return segments;
}

SegmentResult scan_segment(const ScanSegment& segment, const ScanOptions& options) {
  if (!(options.grid_factor > 0.0 && options.grid_factor <= 0.5)) {
    throw DomainError("grid_factor must lie in (0, 0.5]");
  }
  SegmentResult result;
  result.index = segment.index;

  std::vector<double> xs;
  std::vector<double> zs;
  for (double x = segment.lo;;) {
    xs.push_back(x);
    zs.push_back(z_eval(x));
    if (x >= segment.hi) break;
    x = std::min(segment.hi, x + options.grid_factor * average_spacing(x));
  }

  const double tol = options.refine_tolerance;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (zs[i] == 0.0) {
      if (xs[i] < segment.hi || segment.last) result.zeros.push_back(xs[i]);
      continue;
    }
    if (i + 1 < xs.size() && sign_of(zs[i]) * sign_of(zs[i + 1]) < 0) {
      result.zeros.push_back(bisect(xs[i], zs[i], xs[i + 1], tol));
    }
  }

  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const int s = sign_of(zs[i]);
    if (s == 0 || sign_of(zs[i - 1]) != s || sign_of(zs[i + 1]) != s) continue;
    if (!(std::abs(zs[i]) < std::abs(zs[i - 1]) && std::abs(zs[i]) <= std::abs(zs[i + 1]))) continue;
    if (!probe_dip(xs[i - 1], xs[i + 1], tol, result.zeros)) result.suspects.push_back({xs[i - 1], xs[i + 1]});
  }

  std::sort(result.zeros.begin(), result.zeros.end());
  result.zeros.erase(std::unique(result.zeros.begin(), result.zeros.end(),
                                 [tol](double a, double b) { return b - a <= tol; }),
                     result.zeros.end());
  return result;
}

ZeroScan assemble_scan(double t_min, double t_max, const ScanOptions& options,
                       std::vector<SegmentResult> segments) {
  std::sort(segments.begin(), segments.end(),
            [](const SegmentResult& a, const SegmentResult& b) { return a.index < b.index; });
  ZeroScan scan;
  scan.table.t_min = t_min;
  scan.table.t_max = t_max;
  scan.table.refine_tolerance = options.refine_tolerance;
  auto& zeros = scan.table.ordinates;
  for (const SegmentResult& seg : segments) {
    for (double t : seg.zeros) {
      if (zeros.empty() || t - zeros.back() > options.refine_tolerance) zeros.push_back(t);
    }
    scan.audit.suspects.insert(scan.audit.suspects.end(), seg.suspects.begin(), seg.suspects.end());
  }
  scan.audit.actual = static_cast<long>(zeros.size());
  scan.audit.expected = expected_count(t_min, t_max);
  scan.audit.allowance = count_allowance(t_max);
  const double diff = static_cast<double>(scan.audit.actual) - scan.audit.expected;
  scan.audit.deficit = diff < -scan.audit.allowance;
  scan.audit.excess = diff > scan.audit.allowance;
  return scan;
}

ZeroScan find_zeros(double t_min, double t_max, const ScanOptions& options) {
  const std::vector<ScanSegment> segments = plan_segments(t_min, t_max);
  std::vector<SegmentResult> results(segments.size());
  parallel_for(segments.size(), options.threads,
               [&](std::size_t i) { results[i] = scan_segment(segments[i], options); });
  return assemble_scan(t_min, t_max, options, std::move(results));
}

GapStatistics gap_stats(const ZeroTable& zeros, double bucket_width, std::size_t buckets) {
  const auto& t = zeros.ordinates;
  if (t.size() < 2) throw DomainError("gap statistics need at least two zeros");
  if (!(bucket_width > 0.0) || buckets == 0) throw DomainError("histogram needs a positive bucket width and count");
  GapStatistics stats;
  stats.bucket_width = bucket_width;
  stats.histogram.assign(buckets, 0);
  double total = 0.0;
  for (std::size_t n = 0; n + 1 < t.size(); ++n) {
    const double gap = t[n + 1] - t[n];
    const double r = normalized_gap(t[n], gap);
    stats.gaps.push_back(gap);
    stats.normalized_gaps.push_back(r);
    total += r;
    if (r > stats.max_gap) {
      stats.max_gap = r;
      stats.max_index = n;
    }
    const auto bucket = static_cast<std::size_t>(r / bucket_width);
    ++stats.histogram[std::min(bucket, buckets - 1)];
  }
  stats.mean_gap = total / static_cast<double>(stats.normalized_gaps.size());
  return stats;
}

QuadratureResult moment_integral(int k, int h, double lo, double hi, int panels) {
  if (k < 1 || k > 3) throw UnsupportedError("empirical moments are implemented for 1 <= k <= 3");
  if (h < 0 || h > k) throw DomainError("empirical moment requires 0 <= h <= k");
  if (!(lo >= kRegimeStart)) throw OutOfRegimeError("moment integration starts at t >= 10");
  if (!(hi >= lo)) throw DomainError("moment integration requires hi >= lo");
  if (hi == lo) return {};
  auto integrand = [k, h](double t) {
    const double z = z_eval(t);
    double value = std::pow(std::abs(z), 2 * (k - h));
    if (h > 0) value *= std::pow(std::abs(z_derivative(t)), 2 * h);
    return value;
  };
  QuadratureOptions options;
  options.abs_tol = 1e-12;
  options.rel_tol = 1e-8;
  options.max_panels = panels;
  // Start from panels of half the mean spacing so no oscillation is skipped.
  options.initial_panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / (0.5 * average_spacing(hi)))));
  if (options.initial_panels > panels) {
    throw QuadratureError("panel budget exceeded: " + std::to_string(options.initial_panels) +
                              " panels needed to resolve the oscillations",
                          {});
  }
  return integrate(integrand, lo, hi, options);
}

EmpiricalMoment empirical_moment(int k, int h, double T, int panels) {
  if (!(T > kRegimeStart)) throw OutOfRegimeError("empirical moment requires T > 10");
  const QuadratureResult q = moment_integral(k, h, kRegimeStart, T, panels);
  EmpiricalMoment m;
  m.k = k;
  m.h = h;
  m.T = T;
  m.integral_value = q.value;
  m.abs_error = q.abs_error_estimate;
  m.panels_used = q.panels_used;
  const MomentCoefficients c = moment_coefficients(h, k);
  m.predicted = c.a_k * c.b_hk.to_double() * T * std::pow(std::log(T), c.growth_exponent);
  m.ratio = m.integral_value / m.predicted;
  return m;
}

}  // namespace zetagaps
