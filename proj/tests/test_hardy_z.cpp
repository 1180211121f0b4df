#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "zetagaps/errors.hpp"
#include "zetagaps/hardy_z.hpp"
#include "zetagaps/quadrature.hpp"
#include "zetagaps/zero_checkpoint.hpp"

using namespace zetagaps;

namespace {

constexpr double kPi = std::numbers::pi;

// Theta series in long double with one more term than the library uses.
long double theta_oracle(long double t) {
  const long double pi = 3.141592653589793238462643383279502884L;
  return t / 2 * std::log(t / (2 * pi)) - t / 2 - pi / 8 + 1 / (48 * t) + 7 / (5760 * t * t * t) +
         31 / (80640 * t * t * t * t * t);
}

// |zeta(1/2 + it)| by Euler-Maclaurin summation, independent of Riemann-Siegel.
double abs_zeta_oracle(double t) {
  using C = std::complex<double>;
  const C s(0.5, t);
  const int n = static_cast<int>(t) + 20;
  C sum = 0.0;
  for (int j = 1; j < n; ++j) sum += std::exp(-s * std::log(static_cast<double>(j)));
  const double log_n = std::log(static_cast<double>(n));
  const C n_pow = std::exp(-s * log_n);
  sum += n_pow * static_cast<double>(n) / (s - 1.0) + 0.5 * n_pow;
  // B_{2j} / (2j)!
  const double bernoulli_over_factorial[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0,
                                             1.0 / 47900160.0};
  C rising = s;  // s (s+1) ... (s+2j-2)
  C power = n_pow / static_cast<double>(n);
  for (int j = 0; j < 5; ++j) {
    sum += bernoulli_over_factorial[j] * rising * power;
    rising *= (s + static_cast<double>(2 * j + 1)) * (s + static_cast<double>(2 * j + 2));
    power /= static_cast<double>(n) * n;
  }
  return std::abs(sum);
}

// First ten ordinates of nontrivial zeros, standard tabulated values.
constexpr double kKnownZeros[] = {14.134725142, 21.022039639, 25.010857580, 30.424876126, 32.935061588,
                                  37.586178159, 40.918719012, 43.327073281, 48.005150881, 49.773832478};

ZeroTable synthetic(std::vector<double> t) {
  ZeroTable table;
  table.ordinates = std::move(t);
  table.t_min = table.ordinates.front();
  table.t_max = table.ordinates.back();
  return table;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("theta") {
  CHECK(std::abs(theta(100.0) - static_cast<double>(theta_oracle(100.0L))) <= 1e-9);
  const double h = 1e-3;
  const double derivative = (theta(1000.0 + h) - theta(1000.0 - h)) / (2 * h);
  CHECK(std::abs(derivative - 0.5 * std::log(1000.0 / (2 * kPi))) <= 1e-6);
  const double at_threshold = 2 * kPi * std::numbers::e;
  const double d0 = (theta(at_threshold + h) - theta(at_threshold - h)) / (2 * h);
  CHECK(d0 == doctest::Approx(0.5).epsilon(2e-3));
  CHECK_THROWS_AS(theta(9.99), OutOfRegimeError);
  CHECK_THROWS_AS(z_eval(5.0), OutOfRegimeError);
  CHECK_THROWS_AS(z_derivative(9.0), OutOfRegimeError);
}

TEST_CASE("Z magnitude agrees with an independent zeta evaluation") {
  for (double t : {100.5, 251.3, 512.0, 1000.7, 2500.1}) {
    CAPTURE(t);
    CHECK(std::abs(std::abs(z_eval(t)) - abs_zeta_oracle(t)) <= 3.0 * std::pow(t, -0.75));
  }
}

TEST_CASE("Z sign changes near the first zeros") {
  CHECK(z_eval(14.0) * z_eval(14.3) < 0.0);
  CHECK(z_eval(18.0) * z_eval(25.0) < 0.0);
  CHECK(z_eval(22.0) * z_eval(25.5) < 0.0);
}

TEST_CASE("property: Z is real and finite over the working range") {
  std::mt19937_64 engine(11);
  std::uniform_real_distribution<double> dist(10.0, 1e5);
  for (int i = 0; i < 1000; ++i) {
    const double t = dist(engine);
    CHECK(std::isfinite(z_eval(t)));
  }
}

TEST_CASE("Z derivative against the zero crossing slope") {
  const double t = 1234.5;
  const double slope = (z_eval(t + 1e-3) - z_eval(t - 1e-3)) / 2e-3;
  CHECK(z_derivative(t) == doctest::Approx(slope).epsilon(1e-4));
}

TEST_CASE("main term count") {
  CHECK(std::abs(count_main_term(2 * kPi * std::numbers::e)) <= 1e-12);
  CHECK(count_main_term(100.0) == doctest::Approx(28.127).epsilon(1e-4));
  double previous = 0.0;
  for (double t = 20.0; t < 1e5; t *= 1.5) {
    CHECK(count_main_term(t) > previous);
    previous = count_main_term(t);
  }
  CHECK(expected_count(10.0, 100.0) == doctest::Approx(28.127).epsilon(1e-4));
  CHECK(count_allowance(100.0) == doctest::Approx(2 + 2 * std::log(100.0) / kPi));
}

TEST_CASE("zero scan examples") {
  const ZeroScan a = find_zeros(10.0, 50.0);
  REQUIRE(a.table.ordinates.size() == 10);
  // One correction term leaves an O(t^{-3/4}) error in Z, which moves the
  // lowest zeros by up to about 1e-2.
  for (std::size_t i = 0; i < 10; ++i) CHECK(std::abs(a.table.ordinates[i] - kKnownZeros[i]) <= 1e-2);
  CHECK(find_zeros(10.0, 100.0).table.ordinates.size() == 29);
  const ZeroScan empty = find_zeros(50.0, 50.0);
  CHECK(empty.table.ordinates.empty());
  CHECK_THROWS_AS(find_zeros(5.0, 50.0), OutOfRegimeError);
  CHECK_THROWS_AS(find_zeros(60.0, 50.0), DomainError);
  ScanOptions bad;
  bad.grid_factor = 0.6;
  CHECK_THROWS_AS(find_zeros(10.0, 50.0, bad), DomainError);
}

TEST_CASE("property: zero table invariants up to 10^4") {
  const ZeroScan scan = find_zeros(10.0, 1e4);
  const auto& t = scan.table.ordinates;
  CHECK(scan.audit.ok());
  CHECK(std::abs(static_cast<double>(t.size()) - expected_count(10.0, 1e4)) <= count_allowance(1e4));
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i] > t[i - 1]);
  const double delta = 10.0 * scan.table.refine_tolerance;
  long bad_brackets = 0;
  for (double z : t) {
    if (!(z_eval(z - delta) * z_eval(z + delta) < 0.0)) ++bad_brackets;
  }
  CHECK(bad_brackets == 0);
}

TEST_CASE("property: count stays within the allowance on larger ranges") {
  for (double T : {2e4, 5e4, 1e5}) {
    CAPTURE(T);
    const ZeroScan scan = find_zeros(T - 3000.0, T);
    CHECK(std::abs(static_cast<double>(scan.audit.actual) - scan.audit.expected) <= scan.audit.allowance);
  }
}

TEST_CASE("property: scans are deterministic and thread independent") {
  ScanOptions serial;
  ScanOptions parallel;
  parallel.threads = 4;
  const ZeroScan a = find_zeros(1000.0, 3000.0, serial);
  const ZeroScan b = find_zeros(1000.0, 3000.0, parallel);
  const ZeroScan c = find_zeros(1000.0, 3000.0, serial);
  CHECK(a.table.ordinates == b.table.ordinates);
  CHECK(a.table.ordinates == c.table.ordinates);
  CHECK(a.audit.suspects == b.audit.suspects);
}

TEST_CASE("segments tile the range") {
  const auto plan = plan_segments(10.0, 5000.0);
  REQUIRE_FALSE(plan.empty());
  CHECK(plan.front().lo == 10.0);
  CHECK(plan.back().hi == 5000.0);
  CHECK(plan.back().last);
  for (std::size_t i = 1; i < plan.size(); ++i) {
    CHECK(plan[i].lo == plan[i - 1].hi);
    CHECK(plan[i].index == i);
    CHECK_FALSE(plan[i - 1].last);
  }
}

TEST_CASE("gap statistics") {
  const double t = 1000.0;
  const GapStatistics one = gap_stats(synthetic({t, t + 2 * kPi / std::log(t)}));
  REQUIRE(one.normalized_gaps.size() == 1);
  CHECK(one.normalized_gaps[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(gap_stats(synthetic({t})), DomainError);

  // Scaling every gap by c at fixed left endpoints scales every r_n by c.
  const std::vector<double> base = {100.0, 102.0, 105.5, 106.0, 110.0};
  const GapStatistics s = gap_stats(synthetic(base));
  for (std::size_t i = 0; i + 1 < base.size(); ++i) {
    const double c = 1.7;
    const GapStatistics scaled = gap_stats(synthetic({base[i], base[i] + c * (base[i + 1] - base[i])}));
    CHECK(scaled.normalized_gaps[0] == doctest::Approx(c * s.normalized_gaps[i]).epsilon(1e-13));
  }
  std::size_t total = 0;
  for (std::size_t n : s.histogram) total += n;
  CHECK(total == s.normalized_gaps.size());
  CHECK(s.max_gap == doctest::Approx(s.normalized_gaps[3]));
}

TEST_CASE("gap statistics of computed zeros") {
  const ZeroScan scan = find_zeros(1000.0, 1e4);
  const GapStatistics stats = gap_stats(scan.table);
  double expected_mean = 0.0;
  for (std::size_t n = 0; n + 1 < scan.table.ordinates.size(); ++n) {
    const double tn = scan.table.ordinates[n];
    expected_mean += std::log(tn) / std::log(tn / (2 * kPi));
  }
  expected_mean /= static_cast<double>(stats.normalized_gaps.size());
  // With the log t_n normalization the mean tends to log t / log(t / 2 pi), not 1.
  CHECK(stats.mean_gap == doctest::Approx(expected_mean).epsilon(0.01));
  CHECK(stats.max_gap > 1.5);
  for (double r : stats.normalized_gaps) CHECK(r > 0.0);
}

TEST_CASE("checkpointed scans resume to the same table") {
  const auto dir = std::filesystem::temp_directory_path() / "zetagaps_checkpoint_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "scan.csv";
  std::filesystem::remove(path);
  ScanOptions options;
  const ZeroScan reference = find_zeros(500.0, 4000.0, options);

  const ZeroScan first = find_zeros_resumable(500.0, 4000.0, options, path);
  CHECK(first.table.ordinates == reference.table.ordinates);

  // Keep the header and roughly the first third of the rows, then cut the
  // last line in half to mimic an interrupted write.
  const std::string full = read_file(path);
  std::string partial = full.substr(0, full.size() / 3);
  partial = partial.substr(0, partial.size() - 5);
  {
    std::ofstream out(path, std::ios::trunc);
    out << partial;
  }
  std::ifstream in(path);
  const auto committed = read_checkpoint(in, 500.0, 4000.0, options);
  CHECK_FALSE(committed.empty());
  CHECK(committed.size() < plan_segments(500.0, 4000.0).size());
  in.close();

  const ZeroScan resumed = find_zeros_resumable(500.0, 4000.0, options, path);
  CHECK(resumed.table.ordinates == reference.table.ordinates);
  CHECK(resumed.audit.actual == reference.audit.actual);

  // The rewritten file is complete again and loads every segment.
  std::ifstream again(path);
  CHECK(read_checkpoint(again, 500.0, 4000.0, options).size() == plan_segments(500.0, 4000.0).size());
  again.close();

  // A checkpoint for a different scan is rejected.
  std::ifstream other(path);
  CHECK_THROWS_AS(read_checkpoint(other, 500.0, 4001.0, options), DomainError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("empirical moments") {
  const EmpiricalMoment m = empirical_moment(1, 0, 5000.0);
  CHECK(m.integral_value >= 0.0);
  CHECK(m.lower == 10.0);
  CHECK(m.ratio == doctest::Approx(m.integral_value / m.predicted));
  CHECK(m.predicted == doctest::Approx(5000.0 * std::log(5000.0)).epsilon(1e-12));
  CHECK(m.ratio >= 0.6);
  CHECK(m.ratio <= 1.4);

  const QuadratureResult left = moment_integral(1, 0, 10.0, 2000.0, 400000);
  const QuadratureResult right = moment_integral(1, 0, 2000.0, 5000.0, 400000);
  const QuadratureResult whole = moment_integral(1, 0, 10.0, 5000.0, 400000);
  CHECK(std::abs(left.value + right.value - whole.value) <= 1e-7 * whole.value);

  const EmpiricalMoment mixed = empirical_moment(2, 1, 5000.0);
  CHECK(std::isfinite(mixed.ratio));
  CHECK(mixed.ratio > 0.0);
  const double scale = 5000.0 * std::pow(std::log(5000.0), 6) / (120 * kPi * kPi);
  CHECK(mixed.predicted == doctest::Approx(scale).epsilon(1e-5));

  CHECK_THROWS_AS(empirical_moment(4, 0, 100.0), UnsupportedError);
  CHECK_THROWS_AS(empirical_moment(1, 2, 100.0), DomainError);
  CHECK_THROWS_AS(empirical_moment(1, 0, 9.0), OutOfRegimeError);
  CHECK_THROWS_AS(empirical_moment(1, 0, 5000.0, 10), QuadratureError);
}
