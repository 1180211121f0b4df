#include "zetagaps/ineq_verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "zetagaps/errors.hpp"
#include "zetagaps/parallel.hpp"
#include "zetagaps/quadrature.hpp"
#include "zetagaps/wirtinger_constants.hpp"

namespace zetagaps {

namespace {

constexpr double kPi = std::numbers::pi;

double integrate_margin_term(const std::function<double(double)>& g, double a, double b) {
  QuadratureOptions options;
  options.abs_tol = 1e-300;
  options.rel_tol = kMarginQuadratureTol;
  options.max_panels = 20000;
  options.initial_panels = 8;
  return integrate(g, a, b, options).value;
}

void check_wirtinger_k(int k) {
  if (k < 1 || k > 7) throw DomainError("inequality checks are defined for 1 <= k <= 7");
}

// 1 / (pi^{2k} I(k)), memoized per k.
double bp_constant(int k) {
  static const std::array<double, 8> table = [] {
    std::array<double, 8> c{};
    for (int j = 1; j <= 7; ++j) c[j] = 1.0 / (std::pow(kPi, 2 * j) * i_integral(j, 1e-12).value);
    return c;
  }();
  return table[static_cast<std::size_t>(k)];
}

double uniform01(std::mt19937_64& engine) {
  // 53 high bits; independent of the standard library's distributions.
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace

double TrialFunction::value(double t) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < coefficients_.size(); ++j) sum += coefficients_[j] * std::sin((j + 1) * t);
  return sum;
}

double TrialFunction::derivative(double t) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    sum += (j + 1) * coefficients_[j] * std::cos((j + 1) * t);
  }
  return sum;
}

TrialFunction TrialFunction::scaled(double factor) const {
  std::vector<double> c = coefficients_;
  for (double& x : c) x *= factor;
  return TrialFunction(std::move(c));
}

TrialFunction random_trial(std::uint64_t seed, int n_terms, double amplitude) {
  if (n_terms < 1 || n_terms > 64) throw DomainError("n_terms must lie in [1, 64]");
  if (!(amplitude > 0.0)) throw DomainError("amplitude must be positive");
  std::mt19937_64 engine(seed);
  std::vector<double> c(static_cast<std::size_t>(n_terms));
  for (double& x : c) x = amplitude * (2.0 * uniform01(engine) - 1.0);
  return TrialFunction(std::move(c));
}

double verify_wirtinger_bp(const TrialFunction& f, int k) {
  check_wirtinger_k(k);
  const double lhs = integrate_margin_term([&](double t) { return std::pow(f.derivative(t), 2 * k); }, 0.0, kPi);
  const double rhs = integrate_margin_term([&](double t) { return std::pow(f.value(t), 2 * k); }, 0.0, kPi);
  return lhs - bp_constant(k) * rhs;
}

double verify_wirtinger_ap(const TrialFunction& f, int k) {
  check_wirtinger_k(k);
  const double lhs = integrate_margin_term([&](double t) { return std::pow(f.derivative(t), 2 * k); }, 0.0, kPi);
  const double rhs = integrate_margin_term([&](double t) { return std::pow(f.value(t), 2 * k); }, 0.0, kPi);
  return lhs - ap_constant(k).to_double() * rhs;
}

double verify_opial_yang(const TrialFunction& f, int m, int n) {
  const double factor = yang_factor(m, n, kPi / 2.0);
  const double mixed = integrate_margin_term(
      [&](double t) { return std::pow(std::abs(f.value(t)), m) * std::pow(std::abs(f.derivative(t)), n); }, 0.0,
      kPi);
  const double derivative_power =
      integrate_margin_term([&](double t) { return std::pow(std::abs(f.derivative(t)), m + n); }, 0.0, kPi);
  return factor * derivative_power - mixed;
}

double opial_one_sided_margin(const std::function<double(double)>& x, const std::function<double(double)>& dx,
                              double a, double b, int m, int n) {
  if (m < 1 || n < 1) throw DomainError("Opial exponents must be positive");
  if (!(b > a)) throw DomainError("Opial interval requires b > a");
  const double factor = static_cast<double>(n) / (m + n) * std::pow(b - a, m);
  const double mixed =
      integrate_margin_term([&](double t) { return std::pow(std::abs(x(t)), m) * std::pow(std::abs(dx(t)), n); }, a, b);
  const double derivative_power =
      integrate_margin_term([&](double t) { return std::pow(std::abs(dx(t)), m + n); }, a, b);
  return factor * derivative_power - mixed;
}

double transformed_interval_check(const TrialFunction& f, double a, double b, int k) {
  check_wirtinger_k(k);
  if (!(b > a)) throw DomainError("transformed interval requires b > a");
  const double scale = kPi / (b - a);
  auto x = [&](double t) { return f.value(scale * (t - a)); };
  auto dx = [&](double t) { return scale * f.derivative(scale * (t - a)); };
  const double lhs = std::pow(1.0 / scale, 2 * k) *
                     integrate_margin_term([&](double t) { return std::pow(dx(t), 2 * k); }, a, b);
  const double rhs = integrate_margin_term([&](double t) { return std::pow(x(t), 2 * k); }, a, b);
  return lhs - bp_constant(k) * rhs;
}

std::string_view to_string(Inequality which) {
  switch (which) {
    case Inequality::bp: return "bp";
    case Inequality::yang: return "yang";
    case Inequality::ap: return "ap";
  }
  return "unknown";
}

double trial_margin(const TrialParameters& parameters, const TrialFunction& f) {
  switch (parameters.inequality) {
    case Inequality::bp: return verify_wirtinger_bp(f, parameters.k);
    case Inequality::ap: return verify_wirtinger_ap(f, parameters.k);
    case Inequality::yang: return verify_opial_yang(f, parameters.m, parameters.n);
  }
  throw DomainError("unknown inequality");
}

TrialSummary run_trials(const TrialParameters& parameters, long trials, std::uint64_t seed, unsigned threads) {
  if (trials < 1) throw DomainError("at least one trial is required");
  std::vector<double> margins(static_cast<std::size_t>(trials));
  parallel_for(margins.size(), threads, [&](std::size_t i) {
    const std::uint64_t trial_seed = seed + i;
    std::mt19937_64 picker(trial_seed ^ 0x9e3779b97f4a7c15ULL);
    const int terms = 1 + static_cast<int>(picker() % 8);
    margins[i] = trial_margin(parameters, random_trial(trial_seed, terms, 1.0));
  });
  TrialSummary summary;
  summary.parameters = parameters;
  summary.trials = trials;
  summary.min_margin = *std::min_element(margins.begin(), margins.end());
  summary.violations = std::count_if(margins.begin(), margins.end(), [](double v) { return v < kViolationFloor; });
  return summary;
}

std::vector<TrialParameters> suite_parameters(Inequality which) {
  if (which == Inequality::yang) {
    return {{which, 2, 2, 2}, {which, 3, 4, 2}, {which, 3, 2, 4}};
  }
  return {{which, 1, 0, 0}, {which, 2, 0, 0}, {which, 3, 0, 0}};
}

std::vector<TrialSummary> run_trial_suite(Inequality which, long trials, std::uint64_t seed, unsigned threads) {
  std::vector<TrialSummary> out;
  for (const TrialParameters& p : suite_parameters(which)) out.push_back(run_trials(p, trials, seed, threads));
  return out;
}

}  // namespace zetagaps
