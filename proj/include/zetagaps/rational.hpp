#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace zetagaps {

using BigInt = boost::multiprecision::cpp_int;

/// pi to 50 significant decimal digits.
inline constexpr std::string_view kPiDigits =
    "3.1415926535897932384626433832795028841971693993751";

/// Signed rational number with arbitrary-precision numerator and denominator.
///
/// Always held in lowest terms with a positive denominator, so two values
/// compare equal exactly when their numerator and denominator match.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of arithmetic
  ExactRational(BigInt value) : num_(std::move(value)) {}  // NOLINT
  ExactRational(BigInt numerator, BigInt denominator);

  /// Parses "num/den" or "num" (optional leading '-').
  static ExactRational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }

  /// Nearest binary64 value; handles magnitudes far outside the range of
  /// either part converted separately.
  double to_double() const;
  /// Natural logarithm of a strictly positive value.
  double log() const;

  /// "num/den", or "num" when the denominator is one.
  std::string to_string() const;

  ExactRational operator-() const;
  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

/// Power of a rational with an integer exponent (negative allowed for nonzero bases).
ExactRational pow(const ExactRational& base, int exponent);

enum class ArithOp { add, sub, mul, div };

/// Exact arithmetic; `div` by zero throws DivisionByZero.
ExactRational rat_arith(const ExactRational& a, const ExactRational& b, ArithOp op);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Exact value coefficient * pi^pi_power.
struct PiScaled {
  ExactRational coefficient;
  int pi_power = 0;

  /// Evaluated with 50-digit pi and rounded once to binary64.
  double to_double() const;
  double log() const;

  friend bool operator==(const PiScaled&, const PiScaled&) = default;
};

PiScaled operator*(const PiScaled& a, const PiScaled& b);

/// 2 Gamma(2k+1) / (pi^{2k} Gamma((2k+1)/2)^2), reduced with
/// Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!) to (2 * 16^k (k!)^2 / (2k)!) pi^{-(2k+1)}.
PiScaled gamma_half_ratio(int k);

}  // namespace zetagaps
