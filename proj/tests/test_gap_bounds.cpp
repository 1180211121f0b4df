#include <cmath>
#include <numbers>

#include "doctest.h"
#include "zetagaps/errors.hpp"
#include "zetagaps/gap_bounds.hpp"
#include "zetagaps/rmt_constants.hpp"
#include "zetagaps/wirtinger_constants.hpp"

using namespace zetagaps;

namespace {

constexpr double kPi = std::numbers::pi;

constexpr double kOpialTable[8] = {0, 0, 1.3753, 1.8858, 2.3439, 2.7640, 3.1491, 3.5004};
constexpr double kApTable[8] = {0, 0, 0, 2.2265, 2.6544, 3.0545, 3.4259, 3.7676};
constexpr double kBpTable[8] = {0, 0, 0, 2.4905, 2.9389, 3.3508, 3.7287, 4.0736};

// Direct long double evaluation of the Opial bound from the b-ratio.
double opial_oracle(int h, int k) {
  const long double ratio = b_coeff(h, k).to_double() / b_coeff(k, k).to_double();
  return static_cast<double>(std::pow(static_cast<long double>(k) / h * ratio, 1.0L / (2 * k - 2 * h)) / kPi);
}

}  // namespace

TEST_CASE("unconditional bound") {
  CHECK(unconditional_moment_ratio() == ExactRational(BigInt(10000000), BigInt(409)));
  CHECK(ExactRational(BigInt(125000), BigInt(2863)) * ExactRational(560) == unconditional_moment_ratio());
  const GapBound b = unconditional_bound();
  CHECK(b.method == BoundMethod::thm21_unconditional);
  CHECK_FALSE(b.conditional);
  CHECK(std::abs(b.value - 1.9902) <= 1e-3);
  CHECK(b.value == doctest::Approx(std::pow(1e7 / 409.0, 0.25) / (2 * kPi)).epsilon(1e-15));
  CHECK(b.value > 1.98);
  CHECK(b.value < 2.00);
  for (const ReferenceBound& r : reference_bounds()) {
    if (r.bound.method == BoundMethod::mueller_ref || r.bound.method == BoundMethod::montgomery_odlyzko_ref) {
      CHECK(b.value > r.bound.value);
    }
  }
  const GapBound recomputed = unconditional_bound_recomputed();
  CHECK(std::abs(recomputed.value - b.value) <= 1e-4);
  CHECK(recomputed.value == doctest::Approx(std::pow(560.0 / i_integral(2).value, 0.25) / (2 * kPi)).epsilon(1e-14));
}

TEST_CASE("Opial bounds") {
  for (int k = 2; k <= 7; ++k) {
    CAPTURE(k);
    const GapBound b = lambda_opial(1, k);
    CHECK(b.method == BoundMethod::thm22_opial);
    CHECK(b.conditional);
    CHECK(b.k == k);
    CHECK(b.h == 1);
    CHECK(std::abs(b.value - kOpialTable[k]) <= 5e-4);
    for (int h = 1; h < k; ++h) CHECK(lambda_opial(h, k).value == doctest::Approx(opial_oracle(h, k)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(lambda_opial(0, 3), DomainError);
  CHECK_THROWS_AS(lambda_opial(3, 3), DomainError);
  CHECK_THROWS_AS(lambda_opial(4, 3), DomainError);
  CHECK_THROWS_AS(lambda_opial(1, 8), UnsupportedError);
}

TEST_CASE("Agarwal-Pang and Brnetic-Pecaric bounds") {
  for (int k = 3; k <= 7; ++k) {
    CAPTURE(k);
    const GapBound ap = lambda_ap(k);
    const GapBound bp = lambda_bp(k);
    CHECK(std::abs(ap.value - kApTable[k]) <= 2e-3);
    CHECK(std::abs(bp.value - kBpTable[k]) <= 2e-3);
    CHECK(ap.conditional);
    CHECK(bp.conditional);
    const double ratio = ratio_table()[k - 1].computed.to_double();
    const double ap_direct =
        std::pow(ratio * ap_constant(k).to_double() * std::pow(kPi, 2 * k), 1.0 / (2 * k)) / (2 * kPi);
    const double bp_direct = std::pow(ratio / i_integral(k).value, 1.0 / (2 * k)) / (2 * kPi);
    CHECK(ap.value == doctest::Approx(ap_direct).epsilon(1e-12));
    CHECK(bp.value == doctest::Approx(bp_direct).epsilon(1e-12));
  }
  CHECK_THROWS_AS(lambda_ap(2), UnsupportedError);
  CHECK_THROWS_AS(lambda_ap(8), UnsupportedError);
  CHECK_THROWS_AS(lambda_bp(2), UnsupportedError);
  CHECK_THROWS_AS(lambda_bp(8), UnsupportedError);
}

TEST_CASE("property: bound families are ordered and increasing") {
  for (int k = 3; k <= 7; ++k) {
    CHECK(lambda_bp(k).value > lambda_ap(k).value + 1e-6);
    CHECK(lambda_ap(k).value > lambda_opial(1, k).value + 1e-6);
  }
  for (int k = 3; k <= 7; ++k) CHECK(lambda_opial(1, k).value > lambda_opial(1, k - 1).value);
  for (int k = 4; k <= 7; ++k) {
    CHECK(lambda_ap(k).value > lambda_ap(k - 1).value);
    CHECK(lambda_bp(k).value > lambda_bp(k - 1).value);
  }
}

TEST_CASE("property: bounds are bit-reproducible") {
  CHECK(lambda_bp(5).value == lambda_bp(5).value);
  CHECK(unconditional_bound_recomputed().value == unconditional_bound_recomputed().value);
  CHECK(lambda_ap(7).value == lambda_ap(7).value);
}

TEST_CASE("Steuding reference") {
  const double base = steuding_reference(1, 1).value;
  CHECK(base == doctest::Approx(4.0 / (kPi * std::numbers::e)).epsilon(1e-15));
  CHECK(base == doctest::Approx(0.46840).epsilon(1e-4));
  CHECK(steuding_reference(2, 1).value == doctest::Approx(2 * base).epsilon(1e-15));
  CHECK(steuding_reference(1, 2).value == doctest::Approx(base / 2).epsilon(1e-15));
  CHECK(steuding_reference(1, 1).method == BoundMethod::steuding_ref);
  CHECK_THROWS_AS(steuding_reference(0, 1), DomainError);
  CHECK_THROWS_AS(steuding_reference(1, 0), DomainError);
}

TEST_CASE("reference bounds") {
  bool saw_fourth_root = false, saw_sqrt = false, saw_table3 = false;
  for (const ReferenceBound& r : reference_bounds()) {
    CHECK(r.bound.value > 0.0);
    CHECK_FALSE(r.label.empty());
    if (std::abs(r.bound.value - std::pow(105.0 / 4.0, 0.25)) < 1e-12) {
      saw_fourth_root = true;
      CHECK(std::abs(r.bound.value - 2.2635) <= 1e-4);
    }
    if (std::abs(r.bound.value - std::sqrt(11.0 / 2.0)) < 1e-12) {
      saw_sqrt = true;
      CHECK(std::abs(r.bound.value - 2.3452) <= 1e-4);
    }
    if (r.bound.method == BoundMethod::hall_ref && r.bound.k == 3) {
      saw_table3 = true;
      CHECK(std::abs(r.bound.value - std::sqrt(7533.0 / 901.0)) <= 1e-6);
    }
  }
  CHECK(saw_fourth_root);
  CHECK(saw_sqrt);
  CHECK(saw_table3);
}

TEST_CASE("best bounds") {
  const auto best = best_bounds();
  REQUIRE(best.size() == 7);
  CHECK(best[0].k == 2);
  CHECK(best[0].best.method == BoundMethod::thm22_opial);
  CHECK(std::abs(best[0].best.value - 1.3753) <= 5e-4);
  CHECK(best[1].k == 3);
  CHECK(best[1].best.method == BoundMethod::thm24_bp);
  CHECK(std::abs(best[1].best.value - 2.4905) <= 2e-3);
  for (std::size_t i = 0; i < 6; ++i) {
    const int k = best[i].k;
    CHECK(best[i].best.value >= lambda_opial(1, k).value);
    if (k >= 3) CHECK(best[i].best.value >= lambda_bp(k).value);
  }
  CHECK(best[6].k == 0);
  CHECK_FALSE(best[6].best.conditional);
  CHECK(std::abs(best[6].best.value - 1.9902) <= 1e-3);
}

TEST_CASE("published values lookup") {
  CHECK(published_value(BoundMethod::thm22_opial, 2, 1) == 1.3753);
  CHECK(published_value(BoundMethod::thm24_bp, 7, 0) == 4.0736);
  CHECK_FALSE(published_value(BoundMethod::thm22_opial, 3, 2).has_value());
  CHECK(to_string(BoundMethod::thm23_ap) == "thm23_ap");
}
