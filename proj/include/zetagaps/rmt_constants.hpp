#pragma once

#include <string_view>
#include <vector>

#include "zetagaps/rational.hpp"

namespace zetagaps {

/// Largest h for which H(h, k) is tabulated.
inline constexpr int kMaxTabulatedH = 7;

/// Default prime cutoff for the truncated Euler product a(k).
inline constexpr long kDefaultPrimeCutoff = 1'000'000;

/// Coefficients of the conjectured mixed moment
///   int_0^T Z^{2k-2h} Z'^{2h} dt ~ a(k) b(h,k) T (log T)^{k^2+2h}.
struct MomentCoefficients {
  int k = 0;
  int h = 0;
  double a_k = 0.0;
  ExactRational b_hk;
  int growth_exponent = 0;
};

enum class ClassicalMoment { ingham_Z4, conrey_Zprime4, conrey_mixed };

std::string_view to_string(ClassicalMoment which);

struct ClassicalMomentConstant {
  ClassicalMoment name;
  PiScaled leading;
  int log_power = 0;
};

/// H(h, k) with K = 2k substituted into the tabulated rational function of K^2.
/// Throws UnsupportedError for h outside [0, 7].
ExactRational h_function(int h, int k);

/// H(h, .) evaluated at an arbitrary rational K. Throws PoleError when K^2
/// is a root of the denominator.
ExactRational h_function_at(int h, const ExactRational& big_k);

/// b(k) = prod_{j=0}^{k-1} j! / (j+k)!.
ExactRational b0(int k);

/// b(h,k) = b(k) (2h)! / (8^h h!) H(h,k), for 0 <= h <= min(k, 7).
ExactRational b_coeff(int h, int k);

struct RatioTableEntry {
  int k = 0;
  ExactRational computed;
  ExactRational published;
  bool matches = false;
};

/// b(0,k)/b(k,k) for k = 1..7 next to the published decimal-free literals.
std::vector<RatioTableEntry> ratio_table();

/// Truncated Euler product
///   a(k) = prod_{p <= cutoff} (1 - 1/p)^{k^2} sum_{m>=0} (Gamma(m+k) / (m! Gamma(k)))^2 p^{-m}.
double a_factor(int k, long prime_cutoff = kDefaultPrimeCutoff);

MomentCoefficients moment_coefficients(int h, int k, long prime_cutoff = kDefaultPrimeCutoff);

struct MonicFactor {
  int odd_a = 0;
  int exponent = 0;

  friend bool operator==(const MonicFactor&, const MonicFactor&) = default;
};

/// Predicted denominator prod_{a odd} (K^2 - a^2)^{floor(4h / (a + sqrt(a^2 + 8h)))}.
/// Terminates at the first a whose exponent is zero.
std::vector<MonicFactor> monic_denominator(int h);

std::vector<ClassicalMomentConstant> classical_constants();

/// Primes up to and including `limit`, ascending.
std::vector<long> primes_up_to(long limit);

}  // namespace zetagaps
