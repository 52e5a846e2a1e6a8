#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qtwo {

// Exact rational number on 64-bit numerator/denominator.
// Invariants: den > 0 and gcd(num, den) = 1 at all times.
// Arithmetic goes through 128-bit intermediates; results that do not fit
// back into 64 bits after reduction throw std::overflow_error.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : p_(n) {}
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return p_; }
  std::int64_t den() const { return q_; }

  bool is_zero() const { return p_ == 0; }
  bool is_one() const { return p_ == 1 && q_ == 1; }
  bool is_integer() const { return q_ == 1; }
  int sign() const { return (p_ > 0) - (p_ < 0); }

  Rational operator-() const { return from_i128(-static_cast<__int128>(p_), q_); }
  Rational abs() const { return p_ < 0 ? -*this : *this; }
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.p_) * b.q_ < static_cast<__int128>(b.p_) * a.q_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const {
    return static_cast<double>(p_) / static_cast<double>(q_);
  }
  std::string to_string() const;

  // Builds a normalized rational from 128-bit numerator/denominator,
  // throwing if the reduced value exceeds the 64-bit range.
  static Rational from_i128(__int128 num, __int128 den);

private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qtwo
