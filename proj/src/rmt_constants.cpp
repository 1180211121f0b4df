#include "zetagaps/rmt_constants.hpp"

#include <cmath>
#include <mutex>
#include <map>

#include "zetagaps/errors.hpp"

namespace zetagaps {

namespace {

// Each H(h,.) is stored as numerator coefficients in x = K^2 (highest power
// first) and denominator factors (a^2, multiplicity).
struct TabulatedH {
  std::vector<std::int64_t> numerator;
  std::vector<std::pair<std::int64_t, int>> denominator;
};

const std::vector<TabulatedH>& h_table() {
  static const std::vector<TabulatedH> table = {
      {{1}, {}},
      {{1}, {{1, 1}}},
      {{1}, {{1, 1}, {9, 1}}},
      {{1}, {{1, 2}, {25, 1}}},
      {{1, -33}, {{1, 2}, {9, 1}, {25, 1}, {49, 1}}},
      {{1, -90, 1497}, {{1, 2}, {9, 2}, {25, 1}, {49, 1}, {81, 1}}},
      {{1, -171, 6867, -27177}, {{1, 3}, {9, 2}, {25, 1}, {49, 1}, {81, 1}, {121, 1}}},
      {{1, -316, 30702, -982572, 6973305},
       {{1, 3}, {9, 2}, {25, 2}, {49, 1}, {81, 1}, {121, 1}, {169, 1}}},
  };
  return table;
}

void check_k(int k) {
  if (k < 1) throw DomainError("k must be a positive integer");
}

// Published b(0,k)/b(k,k) literals, k = 1..7.
const std::vector<ExactRational>& published_ratios() {
  static const std::vector<ExactRational> table = {
      ExactRational(12),
      ExactRational::parse("6720/12"),
      ExactRational::parse("49674240/864"),
      ExactRational::parse("271159356948480") / ExactRational(31 * 870912),
      ExactRational::parse("581050229760/227"),
      ExactRational::parse("114664452340838400/133933"),
      ExactRational::parse("1769682901766011323008/5078125"),
  };
  return table;
}

}  // namespace

std::string_view to_string(ClassicalMoment which) {
  switch (which) {
    case ClassicalMoment::ingham_Z4: return "ingham_Z4";
    case ClassicalMoment::conrey_Zprime4: return "conrey_Zprime4";
    case ClassicalMoment::conrey_mixed: return "conrey_mixed";
  }
  return "unknown";
}

ExactRational h_function_at(int h, const ExactRational& big_k) {
  if (h < 0 || h > kMaxTabulatedH) {
    throw UnsupportedError("H(h,k) is only tabulated for 0 <= h <= 7, got h=" + std::to_string(h));
  }
  const TabulatedH& entry = h_table()[static_cast<std::size_t>(h)];
  const ExactRational x = big_k * big_k;

  ExactRational numerator;
  for (std::int64_t c : entry.numerator) numerator = numerator * x + ExactRational(c);

  ExactRational denominator(1);
  for (auto [a_squared, multiplicity] : entry.denominator) {
    ExactRational factor = x - ExactRational(a_squared);
    if (factor.is_zero()) {
      throw PoleError("H(" + std::to_string(h) + ",k) has a pole at K^2=" + std::to_string(a_squared));
    }
    denominator *= pow(factor, multiplicity);
  }
  return numerator / denominator;
}

ExactRational h_function(int h, int k) {
  check_k(k);
  return h_function_at(h, ExactRational(2 * k));
}

ExactRational b0(int k) {
  check_k(k);
  BigInt numerator = 1;
  BigInt denominator = 1;
  for (int j = 0; j < k; ++j) {
    numerator *= factorial(static_cast<unsigned>(j));
    denominator *= factorial(static_cast<unsigned>(j + k));
  }
  return {numerator, denominator};
}

ExactRational b_coeff(int h, int k) {
  check_k(k);
  if (h < 0 || h > k) {
    throw DomainError("b(h,k) requires 0 <= h <= k, got h=" + std::to_string(h) + " k=" + std::to_string(k));
  }
  const auto uh = static_cast<unsigned>(h);
  ExactRational weight(factorial(2 * uh), boost::multiprecision::pow(BigInt(8), uh) * factorial(uh));
  return b0(k) * weight * h_function(h, k);
}

std::vector<RatioTableEntry> ratio_table() {
  std::vector<RatioTableEntry> rows;
  const auto& published = published_ratios();
  for (int k = 1; k <= kMaxTabulatedH; ++k) {
    RatioTableEntry row;
    row.k = k;
    row.computed = b0(k) / b_coeff(k, k);
    row.published = published[static_cast<std::size_t>(k - 1)];
    row.matches = row.computed == row.published;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<long> primes_up_to(long limit) {
  std::vector<long> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (long p = 2; p <= limit; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (long q = p * p; q <= limit; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return primes;
}

namespace {

const std::vector<long>& cached_primes(long limit) {
  static std::mutex mutex;
  static std::map<long, std::vector<long>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(limit);
  if (it == cache.end()) it = cache.emplace(limit, primes_up_to(limit)).first;
  return it->second;
}

// log of the local factor (1 - x)^{k^2} sum_m C(m+k-1, k-1)^2 x^m at x = 1/p.
// Working with log1p keeps each factor's rounding error proportional to x, so
// errors do not pile up over ~10^5 factors that are each within 1e-12 of one.
double log_local_factor(int k, double x) {
  constexpr int kMaxTerms = 400;
  constexpr double kRelativeTail = 1e-16;
  double term = 1.0;  // m = 0
  double series = 0.0;  // terms m >= 1
  for (int m = 0; m < kMaxTerms; ++m) {
    const double ratio = std::pow(static_cast<double>(m + k) / (m + 1), 2) * x;
    term *= ratio;
    series += term;
    // Once the term ratio drops below one it keeps decreasing, so the tail
    // is bounded by a geometric series.
    if (ratio < 1.0) {
      const double tail = term * ratio / (1.0 - ratio);
      if (tail < kRelativeTail * series) break;
    }
  }
  return k * k * std::log1p(-x) + std::log1p(series);
}

}  // namespace

double a_factor(int k, long prime_cutoff) {
  check_k(k);
  if (prime_cutoff < 2) throw DomainError("prime_cutoff must be at least 2");
  // Compensated sum of logs, in ascending prime order.
  double sum = 0.0;
  double carry = 0.0;
  for (long p : cached_primes(prime_cutoff)) {
    const double y = log_local_factor(k, 1.0 / static_cast<double>(p)) - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return std::exp(sum);
}

MomentCoefficients moment_coefficients(int h, int k, long prime_cutoff) {
  MomentCoefficients c;
  c.k = k;
  c.h = h;
  c.b_hk = b_coeff(h, k);
  c.a_k = a_factor(k, prime_cutoff);
  c.growth_exponent = k * k + 2 * h;
  return c;
}

std::vector<MonicFactor> monic_denominator(int h) {
  if (h < 1 || h > kMaxTabulatedH) throw UnsupportedError("monic_denominator requires 1 <= h <= 7");
  // floor(4h / (a + sqrt(a^2 + 8h))) >= j  <=>  4h - j a >= j sqrt(a^2 + 8h),
  // decided in integers.
  auto exponent = [h](long a) {
    int j = 0;
    while (true) {
      const long next = j + 1;
      const long lhs = 4L * h - next * a;
      if (lhs < 0 || lhs * lhs < next * next * (a * a + 8L * h)) return j;
      ++j;
    }
  };
  std::vector<MonicFactor> factors;
  for (long a = 1;; a += 2) {
    int e = exponent(a);
    if (e == 0) break;
    factors.push_back({static_cast<int>(a), e});
  }
  return factors;
}

std::vector<ClassicalMomentConstant> classical_constants() {
  return {
      {ClassicalMoment::ingham_Z4, {ExactRational(1, 2), -2}, 4},
      {ClassicalMoment::conrey_Zprime4, {ExactRational(1, 1120), -2}, 8},
      {ClassicalMoment::conrey_mixed, {ExactRational(1, 120), -2}, 6},
  };
}

}  // namespace zetagaps
