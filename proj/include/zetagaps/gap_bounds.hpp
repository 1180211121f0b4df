#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetagaps/rational.hpp"

namespace zetagaps {

enum class BoundMethod {
  thm21_unconditional,
  thm22_opial,
  thm23_ap,
  thm24_bp,
  steuding_ref,
  hall_ref,
  mueller_ref,
  montgomery_odlyzko_ref,
  conrey_ghosh_gonek_ref,
  bui_milinovich_ng_ref,
  ng_ref,
};

std::string_view to_string(BoundMethod method);

/// Lower bound on the normalized gap limsup.
struct GapBound {
  BoundMethod method = BoundMethod::thm21_unconditional;
  int k = 0;  // 0 when not indexed by a moment order
  int h = 0;
  double value = 0.0;
  bool conditional = true;
};

/// Moment ratio (125000/2863) * (1120/2) fed into the unconditional bound.
ExactRational unconditional_moment_ratio();

/// (1/(2 pi)) (1120 / (2 I(2)))^{1/4} with the tabulated I(2) = 2863/125000.
GapBound unconditional_bound();

/// Same formula with I(2) from quadrature instead of the tabulated decimal.
GapBound unconditional_bound_recomputed();

/// (1/pi) ((k/h) b(h,k)/b(k,k))^{1/(2k-2h)} for 1 <= h < k <= 7.
GapBound lambda_opial(int h, int k);

/// (1/(2 pi)) (b(0,k)/b(k,k) * 2 Gamma(2k+1) / Gamma((2k+1)/2)^2)^{1/(2k)}, 3 <= k <= 7.
GapBound lambda_ap(int k);

/// (1/(2 pi)) (b(0,k)/b(k,k) / I(k))^{1/(2k)}, 3 <= k <= 7, I(k) by quadrature.
GapBound lambda_bp(int k);

/// 4k / (pi r e): admissible threshold for r-step normalized gaps.
GapBound steuding_reference(int k, int r);

struct ReferenceBound {
  GapBound bound;
  std::string label;
  /// Decimal as printed alongside the exact expression.
  double printed = 0.0;
};

/// Literature values used only for comparison.
std::vector<ReferenceBound> reference_bounds();

struct BestBoundRow {
  int k = 0;  // 0 for the unconditional row
  GapBound best;
};

/// For each k in 2..7 the largest conditional bound over all implemented
/// methods, followed by the unconditional row.
std::vector<BestBoundRow> best_bounds();

/// Tabulated decimal a computed bound is compared against, when one exists.
std::optional<double> published_value(BoundMethod method, int k, int h);

}  // namespace zetagaps
