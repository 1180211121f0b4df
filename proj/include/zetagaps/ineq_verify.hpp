#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace zetagaps {

/// f(t) = sum_j c_j sin(j t) on [0, pi]; vanishes at both endpoints.
class TrialFunction {
 public:
  TrialFunction() = default;
  explicit TrialFunction(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {}

  const std::vector<double>& coefficients() const { return coefficients_; }

  double value(double t) const;
  double derivative(double t) const;
  TrialFunction scaled(double factor) const;

 private:
  std::vector<double> coefficients_;
};

/// Coefficients uniform in [-amplitude, amplitude] from a 64-bit Mersenne
/// twister seeded with `seed`; 1 <= n_terms <= 64.
TrialFunction random_trial(std::uint64_t seed, int n_terms, double amplitude);

/// Quadrature tolerance used for every margin (relative to each integral).
inline constexpr double kMarginQuadratureTol = 1e-10;
/// Margins below this are counted as violations.
inline constexpr double kViolationFloor = -1e-8;

/// int (f')^{2k} - (1/(pi^{2k} I(k))) int f^{2k} over [0, pi], k in 1..7.
double verify_wirtinger_bp(const TrialFunction& f, int k);

/// (n/(m+n)) (pi/2)^m int |f'|^{m+n} - int |f|^m |f'|^n over [0, pi];
/// m, n even and >= 2.
double verify_opial_yang(const TrialFunction& f, int m, int n);

/// One-endpoint form: (n/(m+n)) (b-a)^m int |x'|^{m+n} - int |x|^m |x'|^n
/// on [a, b] for x with x(a) = 0; m, n >= 1.
double opial_one_sided_margin(const std::function<double(double)>& x, const std::function<double(double)>& dx,
                              double a, double b, int m, int n);

/// int (f')^{2k} - 2 Gamma(2k+1) / (pi^{2k} Gamma((2k+1)/2)^2) int f^{2k} over [0, pi].
double verify_wirtinger_ap(const TrialFunction& f, int k);

/// ((b-a)/pi)^{2k} int_a^b (x')^{2k} - (1/(pi^{2k} I(k))) int_a^b x^{2k}
/// for x(t) = f(pi (t-a)/(b-a)). Equals ((b-a)/pi) times the [0, pi] margin.
double transformed_interval_check(const TrialFunction& f, double a, double b, int k);

enum class Inequality { bp, yang, ap };

std::string_view to_string(Inequality which);

struct TrialParameters {
  Inequality inequality = Inequality::bp;
  /// Wirtinger order; for the Opial form k = (m + n) / 2.
  int k = 1;
  /// Opial exponents, unused by the Wirtinger forms.
  int m = 0;
  int n = 0;
};

struct TrialSummary {
  TrialParameters parameters;
  long trials = 0;
  double min_margin = 0.0;
  long violations = 0;
};

/// Margin of one inequality for one trial function.
double trial_margin(const TrialParameters& parameters, const TrialFunction& f);

/// Trial i uses seed + i for its coefficients and draws 1..8 terms of
/// amplitude 1. Results are independent of the thread count.
TrialSummary run_trials(const TrialParameters& parameters, long trials, std::uint64_t seed, unsigned threads = 1);

/// k in {1, 2, 3} for the Wirtinger forms; (m, n) in {(2, 2), (4, 2), (2, 4)}
/// for the Opial form.
std::vector<TrialParameters> suite_parameters(Inequality which);

std::vector<TrialSummary> run_trial_suite(Inequality which, long trials, std::uint64_t seed, unsigned threads = 1);

}  // namespace zetagaps
