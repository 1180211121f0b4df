#include "zetagaps/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace zetagaps {

namespace {

// Kronrod abscissae (positive half, descending) and weights; the odd-indexed
// abscissae are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

struct LargerError {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

QuadratureResult summarize(std::vector<Panel> panels) {
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  QuadratureResult r;
  for (const Panel& p : panels) {
    r.value += p.value;
    r.abs_error_estimate += p.error;
  }
  r.panels_used = static_cast<int>(panels.size());
  return r;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
  if (!(b >= a)) throw DomainError("integration requires b >= a");
  if (options.max_panels < 1 || options.initial_panels < 1) throw DomainError("panel counts must be positive");
  if (options.initial_panels > options.max_panels) {
    throw QuadratureError("initial partition exceeds the panel budget", {});
  }
  if (a == b) return {};

  // Max-heap on error estimate.
  std::vector<Panel> heap;
  heap.reserve(static_cast<std::size_t>(options.max_panels));
  const int n0 = options.initial_panels;
  for (int i = 0; i < n0; ++i) {
    const double lo = (i == 0) ? a : a + (b - a) * i / n0;
    const double hi = (i == n0 - 1) ? b : a + (b - a) * (i + 1) / n0;
    heap.push_back(gauss_kronrod(f, lo, hi));
  }
  std::make_heap(heap.begin(), heap.end(), LargerError{});

  auto accepted = [&](double value, double error) {
    return error <= std::max(options.abs_tol, options.rel_tol * std::abs(value));
  };

  QuadratureResult exact = summarize(heap);
  double value = exact.value;
  double error = exact.abs_error_estimate;
  while (true) {
    if (accepted(value, error)) {
      // Running sums drift; confirm against a fresh ordered summation.
      exact = summarize(heap);
      if (accepted(exact.value, exact.abs_error_estimate)) break;
      value = exact.value;
      error = exact.abs_error_estimate;
      continue;
    }
    if (static_cast<int>(heap.size()) + 1 > options.max_panels) {
      throw QuadratureError("quadrature tolerance not reached within " + std::to_string(options.max_panels) +
                                " panels",
                            summarize(heap));
    }
    std::pop_heap(heap.begin(), heap.end(), LargerError{});
    const Panel worst = heap.back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw QuadratureError("quadrature panel reached machine resolution", summarize(heap));
    }
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.back() = left;
    std::push_heap(heap.begin(), heap.end(), LargerError{});
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), LargerError{});
  }
  if (!std::isfinite(exact.value)) throw QuadratureError("quadrature produced a non-finite value", exact);
  return exact;
}

}  // namespace zetagaps
