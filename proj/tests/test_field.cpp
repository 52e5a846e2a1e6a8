#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qtwo/quad.hpp"
#include "qtwo/rational.hpp"

using qtwo::QuadElem;
using qtwo::Rational;

TEST_CASE("rational: normalization and accessors") {
  Rational r(6, -8);
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(7, 7).is_one());
  CHECK(Rational(3).is_integer());
  CHECK(Rational(-2, 3).sign() == -1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational: arithmetic") {
  Rational a(1, 6), b(1, 10);
  CHECK(a + b == Rational(4, 15));
  CHECK(a - b == Rational(1, 15));
  CHECK(a * b == Rational(1, 60));
  CHECK(a / b == Rational(5, 3));
  CHECK(-a == Rational(-1, 6));
  CHECK(Rational(-3, 4).abs() == Rational(3, 4));
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("rational: overflow is detected, not wrapped") {
  Rational big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_THROWS_AS(big + big * Rational(2), std::overflow_error);
}

TEST_CASE("quad: squarefree factoring guards") {
  CHECK(qtwo::squarefree_factors(30) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(qtwo::squarefree_factors(1).empty());
  CHECK_THROWS_AS(qtwo::squarefree_factors(12), std::domain_error);
  CHECK_THROWS_AS(qtwo::squarefree_factors(0), std::domain_error);
}

TEST_CASE("quad: every zero compares equal regardless of history") {
  // Regression: a cancellation used to keep a different internal shape than
  // a freshly constructed zero, so structural equality missed it.
  QuadElem r6 = QuadElem::sqrt_of(6);
  QuadElem cancelled = QuadElem(3) * r6 - QuadElem(3) * r6;
  CHECK(cancelled == QuadElem());
  CHECK(QuadElem(Rational(0)) == QuadElem());
  CHECK(QuadElem::term(Rational(0), 15) == QuadElem());
  CHECK(cancelled.is_zero());
  CHECK(cancelled.is_rational());
  CHECK(cancelled.generators().empty());
}

TEST_CASE("quad: products collapse radicands") {
  QuadElem r2 = QuadElem::sqrt_of(2);
  QuadElem r3 = QuadElem::sqrt_of(3);
  QuadElem r6 = QuadElem::sqrt_of(6);
  CHECK(r2 * r3 == r6);
  CHECK(r2 * r6 == QuadElem::term(Rational(2), 3));
  CHECK(r6 * r6 == QuadElem(6));
  CHECK((r6 * r6).is_rational());
  CHECK(r2 * r2 * r3 * r3 == QuadElem(6));
}

TEST_CASE("quad: coordinates and generators") {
  QuadElem x = QuadElem(Rational(1, 2)) + QuadElem::term(Rational(-2, 3), 10);
  CHECK(x.generators() == std::vector<std::int64_t>{2, 5});
  CHECK(x.coord(1) == Rational(1, 2));
  CHECK(x.coord(10) == Rational(-2, 3));
  CHECK(x.coord(2) == Rational(0));
  CHECK(x.rational_part() == Rational(1, 2));
  auto cs = x.coords();
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].first == 1);
  CHECK(cs[1].first == 10);
}

TEST_CASE("quad: field laws on a pseudorandom sample") {
  // Small deterministic elements over sqrt(2), sqrt(3), sqrt(5).
  std::uint64_t state = 42;
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<std::int64_t>(state >> 60) - 8;  // -8..7
  };
  std::vector<QuadElem> sample;
  for (int i = 0; i < 12; ++i) {
    QuadElem x(Rational(next(), 1 + (i % 3)));
    x += QuadElem::term(Rational(next(), 2), 2);
    x += QuadElem::term(Rational(next(), 3), 3);
    x += QuadElem::term(Rational(next()), 15);
    sample.push_back(x);
  }
  for (std::size_t i = 0; i + 2 < sample.size(); ++i) {
    const QuadElem &a = sample[i], &b = sample[i + 1], &c = sample[i + 2];
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QuadElem());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == QuadElem(1));
      CHECK(a / a == QuadElem(1));
    }
  }
}

TEST_CASE("quad: inverse round-trips a mixed element") {
  QuadElem x = QuadElem(Rational(3, 7)) + QuadElem::term(Rational(1, 2), 2) +
               QuadElem::term(Rational(-5, 3), 30);
  CHECK(x * x.inverse() == QuadElem(1));
  CHECK_THROWS_AS(QuadElem().inverse(), std::domain_error);
}

TEST_CASE("quad: to_double matches the symbolic value") {
  QuadElem x = QuadElem(Rational(1, 2)) + QuadElem::term(Rational(2), 3);
  CHECK(x.to_double() == doctest::Approx(0.5 + 2 * std::sqrt(3.0)));
  CHECK(QuadElem().to_double() == 0.0);
}

TEST_CASE("quad: generator budget is enforced") {
  QuadElem x = QuadElem::sqrt_of(2) + QuadElem::sqrt_of(3) +
               QuadElem::sqrt_of(5) + QuadElem::sqrt_of(7) +
               QuadElem::sqrt_of(11) + QuadElem::sqrt_of(13);
  CHECK_THROWS_AS(x + QuadElem::sqrt_of(17), std::domain_error);
}
