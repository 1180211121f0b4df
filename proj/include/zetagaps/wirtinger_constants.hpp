#pragma once

#include "zetagaps/quadrature.hpp"
#include "zetagaps/rational.hpp"

namespace zetagaps {

/// 1 / (t^{1-2k} + (1-t)^{1-2k}), evaluated as t^{2k-1}(1-t)^{2k-1} / (t^{2k-1} + (1-t)^{2k-1})
/// and continued by its limit 0 at t = 0 and t = 1.
double i_integrand(int k, double t);

/// I(k) = int_0^1 dt / (t^{1-2k} + (1-t)^{1-2k}), the constant of the
/// Brnetic-Pecaric Wirtinger inequality. Requires 0 < tol <= 1e-6.
QuadratureResult i_integral(int k, double tol = 1e-10);

/// 2 Gamma(2k+1) / (pi^{2k} Gamma((2k+1)/2)^2), the Agarwal-Pang constant.
PiScaled ap_constant(int k);

/// Factor n/(m+n) * half_length^m of the two-endpoint Yang-Opial inequality.
double yang_factor(int m, int n, double half_length);

}  // namespace zetagaps
