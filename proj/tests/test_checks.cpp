#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qtwo/checks.hpp"
#include "qtwo/graph.hpp"
#include "qtwo/named.hpp"
#include "qtwo/symmatrix.hpp"
#include "qtwo/witnesses.hpp"

using qtwo::EntryMode;
using qtwo::Graph;
using qtwo::QuadElem;
using qtwo::Rational;
using qtwo::Scale;
using qtwo::SymMatrix;

TEST_CASE("checks: exact involution accepts I - (2/n) J") {
  for (int n : {1, 2, 3, 5, 8}) {
    SymMatrix m = qtwo::complete_involution(n);
    auto rep = qtwo::verify_involution(m);
    INFO("n = " << n);
    CHECK(rep.pass);
    CHECK(rep.exact);
    CHECK(rep.residual == 0);
  }
}

TEST_CASE("checks: exact involution rejects a perturbed entry") {
  SymMatrix m = qtwo::complete_involution(4);
  m.set_x(0, 1, m.x(0, 1) + QuadElem(Rational(1, 1000)));
  CHECK_FALSE(qtwo::verify_involution(m).pass);
}

TEST_CASE("checks: scale folds into the exact involution test") {
  // (1/sqrt 2) * [[1, 1], [1, -1]] is an involution; without the scale the
  // entry matrix squares to 2I and must be rejected.
  SymMatrix m(2, EntryMode::Exact);
  m.set_x(0, 0, QuadElem(1));
  m.set_x(0, 1, QuadElem(1));
  m.set_x(1, 1, QuadElem(-1));
  CHECK_FALSE(qtwo::verify_involution(m).pass);
  m.set_scale(qtwo::inverse_sqrt_scale(2));
  CHECK(qtwo::verify_involution(m).pass);
}

TEST_CASE("checks: float involution uses the residual tolerance") {
  SymMatrix m(2, EntryMode::Float);
  m.set_f(0, 0, std::sqrt(0.5));
  m.set_f(0, 1, std::sqrt(0.5));
  m.set_f(1, 1, -std::sqrt(0.5));
  auto rep = qtwo::verify_involution(m);
  CHECK(rep.pass);
  CHECK_FALSE(rep.exact);
  CHECK(rep.residual <= 1e-10);
  m.set_f(0, 0, std::sqrt(0.5) + 1e-6);
  CHECK_FALSE(qtwo::verify_involution(m).pass);
  CHECK(qtwo::verify_involution(m, 1e-4).pass);
}

TEST_CASE("checks: pattern membership") {
  SymMatrix m = qtwo::complete_involution(4);
  CHECK(qtwo::matrix_fits_pattern(m, qtwo::complete(4)));
  CHECK_FALSE(qtwo::matrix_fits_pattern(m, qtwo::cycle(4)));
  Graph p4 = qtwo::path(4);
  CHECK_FALSE(qtwo::matrix_fits_pattern(m, p4));
  CHECK(qtwo::pattern_graph(m) == qtwo::complete(4));
  // A zero off-diagonal entry on an edge breaks membership.
  SymMatrix z(3, EntryMode::Exact);
  z.set_x(0, 1, QuadElem(1));
  z.set_x(1, 2, QuadElem(1));
  Graph path3 = qtwo::path(3);
  CHECK(qtwo::matrix_fits_pattern(z, path3));
  z.set_x(1, 2, QuadElem());
  CHECK_FALSE(qtwo::matrix_fits_pattern(z, path3));
}

TEST_CASE("checks: eigenvalue clustering") {
  SymMatrix m = qtwo::complete_involution(6);
  auto clusters = qtwo::eigenvalue_clusters(m);
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[0].first == doctest::Approx(-1.0));
  CHECK(clusters[0].second == 1);
  CHECK(clusters[1].first == doctest::Approx(1.0));
  CHECK(clusters[1].second == 5);
  CHECK(qtwo::distinct_eigenvalue_count(m) == 2);
  CHECK(qtwo::distinct_eigenvalue_count(qtwo::kronecker_sum_3ev(3, 3)) == 3);
  CHECK(qtwo::distinct_eigenvalue_count(qtwo::kronecker_sum_3ev(4, 4)) == 3);
}

TEST_CASE("checks: strong spectral property on the edge-deleted witness") {
  auto entry = qtwo::catalog_entry("M7_1");
  CHECK(qtwo::verify_ssp(entry.matrix, entry.graph) == qtwo::Tristate::yes);
}

TEST_CASE("checks: ssp edge cases") {
  // No free off-diagonal slot: vacuously yes.
  SymMatrix m = qtwo::complete_involution(3);
  CHECK(qtwo::verify_ssp(m, qtwo::complete(3)) == qtwo::Tristate::yes);
  // Even one freed slot of I - (2/3) J keeps a nonzero commutator.
  Graph broken = qtwo::complete(3);
  broken.remove_edge(0, 1);
  CHECK(qtwo::verify_ssp(m, broken) == qtwo::Tristate::yes);
  // The identity commutes with everything, so on an empty pattern every
  // symmetric zero-diagonal X defeats it.
  SymMatrix id(3, EntryMode::Exact);
  for (int i = 0; i < 3; ++i) id.set_x(i, i, QuadElem(1));
  CHECK(qtwo::verify_ssp(id, Graph(3)) == qtwo::Tristate::no);
}

TEST_CASE("checks: block orthogonality") {
  qtwo::Block b(2, 2, EntryMode::Exact);
  b.set_x(0, 0, QuadElem(1));
  b.set_x(0, 1, QuadElem(1));
  b.set_x(1, 0, QuadElem(1));
  b.set_x(1, 1, QuadElem(-1));
  CHECK_FALSE(qtwo::block_orthogonal(b));
  b.set_scale(qtwo::inverse_sqrt_scale(2));
  CHECK(qtwo::block_orthogonal(b));
  qtwo::Block f(2, 2, EntryMode::Float);
  f.set_f(0, 0, 0.6);
  f.set_f(0, 1, 0.8);
  f.set_f(1, 0, -0.8);
  f.set_f(1, 1, 0.6);
  CHECK(qtwo::block_orthogonal(f));
  f.set_f(1, 1, 0.61);
  CHECK_FALSE(qtwo::block_orthogonal(f));
}

TEST_CASE("checks: candle matrices square to 4I") {
  for (int k : {4, 5, 6, 7, 11, 12}) {
    INFO("k = " << k);
    SymMatrix w = qtwo::candle_matrix(k);
    // Integer entries, no scale.
    CHECK(w.scale().is_one());
    bool integer = true;
    for (int i = 0; i < w.order(); ++i)
      for (int j = i; j < w.order(); ++j) {
        const QuadElem& x = w.x(i, j);
        if (!x.is_rational() || !x.rational_part().is_integer())
          integer = false;
      }
    CHECK(integer);
    CHECK(qtwo::pattern_graph(w) == qtwo::closed_candle(k));
    CHECK(qtwo::verify_involution(qtwo::candle_witness(k)).pass);
  }
}
