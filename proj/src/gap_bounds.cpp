#include "zetagaps/gap_bounds.hpp"

#include <cmath>
#include <numbers>

#include "zetagaps/errors.hpp"
#include "zetagaps/rmt_constants.hpp"
#include "zetagaps/wirtinger_constants.hpp"

namespace zetagaps {

namespace {

constexpr int kMinRatioK = 3;
constexpr int kMaxRatioK = 7;
constexpr double kQuadratureTol = 1e-10;

void check_ratio_k(int k) {
  if (k < kMinRatioK || k > kMaxRatioK) {
    throw UnsupportedError("bound is tabulated for 3 <= k <= 7, got k=" + std::to_string(k));
  }
}

ExactRational moment_ratio(int k) { return b0(k) / b_coeff(k, k); }

// (1/(2 pi)) exp(log_value / (2k)): the 2k-th root is taken in log space.
double normalized_root(double log_value, int k) {
  return std::exp(log_value / (2.0 * k)) / (2.0 * std::numbers::pi);
}

}  // namespace

std::string_view to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::thm21_unconditional: return "thm21_unconditional";
    case BoundMethod::thm22_opial: return "thm22_opial";
    case BoundMethod::thm23_ap: return "thm23_ap";
    case BoundMethod::thm24_bp: return "thm24_bp";
    case BoundMethod::steuding_ref: return "steuding_ref";
    case BoundMethod::hall_ref: return "hall_ref";
    case BoundMethod::mueller_ref: return "mueller_ref";
    case BoundMethod::montgomery_odlyzko_ref: return "montgomery_odlyzko_ref";
    case BoundMethod::conrey_ghosh_gonek_ref: return "conrey_ghosh_gonek_ref";
    case BoundMethod::bui_milinovich_ng_ref: return "bui_milinovich_ng_ref";
    case BoundMethod::ng_ref: return "ng_ref";
  }
  return "unknown";
}

ExactRational unconditional_moment_ratio() {
  return ExactRational(125000, 2863) * ExactRational(1120, 2);
}

GapBound unconditional_bound() {
  // The 1/pi^4 of the inequality constant and the pi^2 of both moment
  // constants reduce the bound to (1/(2 pi)) (ratio)^{1/4}.
  return {BoundMethod::thm21_unconditional, 0, 0, normalized_root(unconditional_moment_ratio().log(), 2), false};
}

GapBound unconditional_bound_recomputed() {
  const double i2 = i_integral(2, kQuadratureTol).value;
  return {BoundMethod::thm21_unconditional, 0, 0, normalized_root(std::log(1120.0 / 2.0) - std::log(i2), 2),
          false};
}

GapBound lambda_opial(int h, int k) {
  if (h == 0 || h == k) throw DomainError("Opial bound requires h != k and h != 0");
  if (h < 0 || h > k || k < 2) throw DomainError("Opial bound requires 1 <= h < k");
  if (k > kMaxTabulatedH) throw UnsupportedError("Opial bound requires k <= 7");
  const ExactRational ratio = ExactRational(k, h) * b_coeff(h, k) / b_coeff(k, k);
  const double value = std::exp(ratio.log() / (2.0 * (k - h))) / std::numbers::pi;
  return {BoundMethod::thm22_opial, k, h, value, true};
}

GapBound lambda_ap(int k) {
  check_ratio_k(k);
  // ap_constant * pi^{2k} leaves coefficient * pi^{-1}.
  PiScaled scaled = ap_constant(k);
  scaled.pi_power += 2 * k;
  scaled.coefficient *= moment_ratio(k);
  return {BoundMethod::thm23_ap, k, 0, normalized_root(scaled.log(), k), true};
}

GapBound lambda_bp(int k) {
  check_ratio_k(k);
  const double ik = i_integral(k, kQuadratureTol).value;
  return {BoundMethod::thm24_bp, k, 0, normalized_root(moment_ratio(k).log() - std::log(ik), k), true};
}

GapBound steuding_reference(int k, int r) {
  if (k < 1 || r < 1) throw DomainError("steuding_reference requires k, r >= 1");
  return {BoundMethod::steuding_ref, k, 0, 4.0 * k / (std::numbers::pi * r * std::numbers::e), true};
}

std::vector<ReferenceBound> reference_bounds() {
  using M = BoundMethod;
  return {
      {{M::mueller_ref, 0, 0, 1.9, true}, "Mueller (RH)", 1.9},
      {{M::montgomery_odlyzko_ref, 0, 0, 1.9799, true}, "Montgomery-Odlyzko (RH)", 1.9799},
      {{M::hall_ref, 0, 0, std::pow(105.0 / 4.0, 0.25), false}, "Hall, Beesack inequality: (105/4)^(1/4)", 2.2635},
      {{M::hall_ref, 0, 0, std::sqrt(11.0 / 2.0), false}, "Hall, Wirtinger inequality: sqrt(11/2)", 2.3452},
      {{M::conrey_ghosh_gonek_ref, 0, 0, 2.337, true}, "Conrey-Ghosh-Gonek (RH)", 2.337},
      {{M::conrey_ghosh_gonek_ref, 0, 0, 2.68, true}, "Conrey-Ghosh-Gonek (GRH)", 2.68},
      {{M::bui_milinovich_ng_ref, 0, 0, 2.69, true}, "Bui-Milinovich-Ng (RH)", 2.69},
      {{M::ng_ref, 0, 0, 3.0, true}, "Ng (GRH)", 3.0},
      {{M::hall_ref, 3, 0, std::sqrt(7533.0 / 901.0), true}, "Hall, mixed moments k=3: sqrt(7533/901)", 2.8915},
      {{M::hall_ref, 4, 0, 3.392272, true}, "Hall, mixed moments k=4", 3.392272},
      {{M::hall_ref, 5, 0, 3.858851, true}, "Hall, mixed moments k=5", 3.858851},
      {{M::hall_ref, 6, 0, 4.2981467, true}, "Hall, mixed moments k=6", 4.2981467},
  };
}

std::vector<BestBoundRow> best_bounds() {
  std::vector<BestBoundRow> rows;
  for (int k = 2; k <= kMaxRatioK; ++k) {
    std::vector<GapBound> candidates;
    for (int h = 1; h < k; ++h) candidates.push_back(lambda_opial(h, k));
    if (k >= kMinRatioK) {
      candidates.push_back(lambda_ap(k));
      candidates.push_back(lambda_bp(k));
    }
    GapBound best = candidates.front();
    for (const GapBound& c : candidates) {
      if (c.value > best.value) best = c;
    }
    rows.push_back({k, best});
  }
  rows.push_back({0, unconditional_bound()});
  return rows;
}

std::optional<double> published_value(BoundMethod method, int k, int h) {
  static constexpr double kOpial[] = {1.3753, 1.8858, 2.3439, 2.7640, 3.1491, 3.5004};
  static constexpr double kAp[] = {2.2265, 2.6544, 3.0545, 3.4259, 3.7676};
  static constexpr double kBp[] = {2.4905, 2.9389, 3.3508, 3.7287, 4.0736};
  switch (method) {
    case BoundMethod::thm21_unconditional: return 1.9902;
    case BoundMethod::thm22_opial:
      if (h == 1 && k >= 2 && k <= 7) return kOpial[k - 2];
      return std::nullopt;
    case BoundMethod::thm23_ap:
      if (k >= 3 && k <= 7) return kAp[k - 3];
      return std::nullopt;
    case BoundMethod::thm24_bp:
      if (k >= 3 && k <= 7) return kBp[k - 3];
      return std::nullopt;
    default: return std::nullopt;
  }
}

}  // namespace zetagaps
