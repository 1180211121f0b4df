#include "zetagaps/rational.hpp"

#include <cstdlib>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/integer.hpp>

#include "zetagaps/errors.hpp"

namespace zetagaps {

namespace mp = boost::multiprecision;
using Dec50 = mp::cpp_dec_float_50;

namespace {

const Dec50& pi50() {
  static const Dec50 value{std::string(kPiDigits)};
  return value;
}

Dec50 to_dec(const ExactRational& r) {
  return Dec50(r.numerator()) / Dec50(r.denominator());
}

}  // namespace

ExactRational::ExactRational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void ExactRational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(mp::abs(num_), den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

ExactRational ExactRational::parse(std::string_view text) {
  auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw DomainError("empty integer in rational literal");
    std::size_t start = (s.front() == '-') ? 1 : 0;
    if (start == s.size()) throw DomainError("malformed rational literal");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw DomainError("malformed rational literal: " + std::string(s));
    }
    return BigInt(std::string(s));
  };
  if (slash == std::string_view::npos) return ExactRational(parse_int(text));
  return ExactRational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

double ExactRational::to_double() const { return to_dec(*this).convert_to<double>(); }

double ExactRational::log() const {
  if (sign() <= 0) throw DomainError("log of a non-positive rational");
  return (mp::log(Dec50(num_)) - mp::log(Dec50(den_))).convert_to<double>();
}

std::string ExactRational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

ExactRational ExactRational::operator-() const {
  ExactRational r = *this;
  r.num_ = -r.num_;
  return r;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) { return *this += -rhs; }

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExactRational pow(const ExactRational& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DivisionByZero();
    return pow(ExactRational(1) / base, -exponent);
  }
  ExactRational result(1);
  ExactRational square = base;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1U) result *= square;
    if (e > 1) square *= square;
  }
  return result;
}

ExactRational rat_arith(const ExactRational& a, const ExactRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw DomainError("unknown arithmetic operation");
}

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

double PiScaled::to_double() const {
  return (to_dec(coefficient) * mp::pow(pi50(), pi_power)).convert_to<double>();
}

double PiScaled::log() const {
  if (coefficient.sign() <= 0) throw DomainError("log of a non-positive value");
  return (mp::log(to_dec(coefficient)) + pi_power * mp::log(pi50())).convert_to<double>();
}

PiScaled operator*(const PiScaled& a, const PiScaled& b) {
  return {a.coefficient * b.coefficient, a.pi_power + b.pi_power};
}

PiScaled gamma_half_ratio(int k) {
  if (k < 1) throw DomainError("gamma_half_ratio requires k >= 1");
  const auto uk = static_cast<unsigned>(k);
  BigInt k_fact = factorial(uk);
  BigInt numerator = 2 * mp::pow(BigInt(16), uk) * k_fact * k_fact;
  return {ExactRational(numerator, factorial(2 * uk)), -(2 * k + 1)};
}

}  // namespace zetagaps
