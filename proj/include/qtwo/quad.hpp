#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qtwo/rational.hpp"

namespace qtwo {

// Element of a real multi-quadratic field Q(sqrt(p_1), ..., sqrt(p_m)) with
// distinct prime generators p_1 < ... < p_m. Coordinates are rationals over
// the subset-product basis: the mask S (bit i selects p_i) indexes the basis
// element sqrt(prod_{i in S} p_i). Radicands supplied from outside may be any
// squarefree positive integers; they are factored into prime generators, so
// elements from different sources always combine into one well-defined field.
// Representation is canonical: generators some nonzero coordinate uses only.
class QuadElem {
public:
  QuadElem() : c_{Rational(0)} {}  // zero
  QuadElem(Rational r);
  QuadElem(std::int64_t n) : QuadElem(Rational(n)) {}

  // sqrt(r) for squarefree r >= 1. Throws if r is not squarefree.
  static QuadElem sqrt_of(std::int64_t r);
  // coeff * sqrt(rad), rad squarefree >= 1.
  static QuadElem term(Rational coeff, std::int64_t rad);

  // Sorted prime generators of the smallest field containing this element.
  const std::vector<std::int64_t>& generators() const { return primes_; }
  // Squarefree products spanned by nonzero coordinates, with coefficients.
  // The rational part appears with product 1.
  std::vector<std::pair<std::int64_t, Rational>> coords() const;

  bool is_zero() const;
  bool is_rational() const;
  // Coefficient of the basis element sqrt(product); product must be a
  // squarefree positive integer (1 selects the rational part).
  Rational coord(std::int64_t product) const;
  Rational rational_part() const { return coord(1); }

  QuadElem operator-() const;
  QuadElem& operator+=(const QuadElem& o) { return *this = *this + o; }
  QuadElem& operator-=(const QuadElem& o) { return *this = *this - o; }
  QuadElem& operator*=(const QuadElem& o) { return *this = *this * o; }
  QuadElem& operator/=(const QuadElem& o) { return *this = *this / o; }

  friend QuadElem operator+(const QuadElem& a, const QuadElem& b);
  friend QuadElem operator-(const QuadElem& a, const QuadElem& b);
  friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
  friend QuadElem operator/(const QuadElem& a, const QuadElem& b);

  QuadElem inverse() const;  // throws std::domain_error on zero

  bool operator==(const QuadElem& o) const;
  bool operator!=(const QuadElem& o) const { return !(*this == o); }

  double to_double() const;
  std::string to_string() const;

private:
  std::vector<std::int64_t> primes_;  // sorted distinct primes
  std::vector<Rational> c_;           // size 1 << primes_.size(), never empty

  // Re-expresses the element over the given superset of generators.
  QuadElem promoted(const std::vector<std::int64_t>& primes) const;
  void prune();  // drop unused generators -> canonical representation
};

std::ostream& operator<<(std::ostream& os, const QuadElem& x);

// Factors a squarefree positive integer into its sorted prime divisors.
// Throws std::domain_error if the argument is < 1 or not squarefree.
std::vector<std::int64_t> squarefree_factors(std::int64_t r);

}  // namespace qtwo
