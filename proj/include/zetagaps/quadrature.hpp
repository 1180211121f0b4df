#pragma once

#include <functional>

#include "zetagaps/errors.hpp"

namespace zetagaps {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int panels_used = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  /// Accept when the error estimate is below max(abs_tol, rel_tol * |value|).
  double rel_tol = 0.0;
  int max_panels = 4000;
  /// Equal-width panels to start from; oscillatory integrands need this
  /// to be at least the number of oscillations.
  int initial_panels = 1;
};

/// Thrown when the panel budget runs out; carries the best estimate so far.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, QuadratureResult best) : Error(what), best_(best) {}
  const QuadratureResult& best_estimate() const { return best_; }

 private:
  QuadratureResult best_;
};

/// Globally adaptive Gauss-Kronrod (7, 15) quadrature on [a, b].
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate meets the tolerance. The returned value is summed over panels in
/// ascending order of their left endpoint, so results do not depend on the
/// order in which panels were refined.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

}  // namespace zetagaps
