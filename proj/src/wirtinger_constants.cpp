#include "zetagaps/wirtinger_constants.hpp"

#include <cmath>
#include <string>

namespace zetagaps {

double i_integrand(int k, double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const int p = 2 * k - 1;
  const double u = std::pow(t, p);
  const double v = std::pow(1.0 - t, p);
  return u * v / (u + v);
}

QuadratureResult i_integral(int k, double tol) {
  if (k < 1) throw DomainError("I(k) requires k >= 1");
  if (!(tol > 0.0 && tol <= 1e-6)) throw DomainError("I(k) tolerance must lie in (0, 1e-6]");
  QuadratureOptions options;
  options.abs_tol = tol;
  options.max_panels = 2000;
  return integrate([k](double t) { return i_integrand(k, t); }, 0.0, 1.0, options);
}

PiScaled ap_constant(int k) { return gamma_half_ratio(k); }

double yang_factor(int m, int n, double half_length) {
  if (m < 2 || n < 2 || m % 2 != 0 || n % 2 != 0) {
    throw DomainError("yang_factor requires even m, n >= 2");
  }
  if (!(half_length > 0.0)) throw DomainError("yang_factor requires half_length > 0");
  return static_cast<double>(n) / (m + n) * std::pow(half_length, m);
}

}  // namespace zetagaps
