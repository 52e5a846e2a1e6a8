#include "qtwo/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace qtwo {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational Rational::from_i128(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
  constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi)
    throw std::overflow_error("rational overflows 64-bit storage");
  Rational r;
  r.p_ = static_cast<std::int64_t>(num);
  r.q_ = static_cast<std::int64_t>(den);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_i128(num, den);
}

Rational Rational::inverse() const {
  if (p_ == 0) throw std::domain_error("inverse of zero rational");
  return from_i128(q_, p_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_i128(
      static_cast<__int128>(a.p_) * b.q_ + static_cast<__int128>(b.p_) * a.q_,
      static_cast<__int128>(a.q_) * b.q_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::from_i128(
      static_cast<__int128>(a.p_) * b.q_ - static_cast<__int128>(b.p_) * a.q_,
      static_cast<__int128>(a.q_) * b.q_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_i128(static_cast<__int128>(a.p_) * b.p_,
                             static_cast<__int128>(a.q_) * b.q_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.p_ == 0) throw std::domain_error("rational division by zero");
  return Rational::from_i128(static_cast<__int128>(a.p_) * b.q_,
                             static_cast<__int128>(a.q_) * b.p_);
}

std::string Rational::to_string() const {
  if (q_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "/" + std::to_string(q_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace qtwo
