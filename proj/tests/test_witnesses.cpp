#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "qtwo/checks.hpp"
#include "qtwo/graph.hpp"
#include "qtwo/isomorphism.hpp"
#include "qtwo/named.hpp"
#include "qtwo/symmatrix.hpp"
#include "qtwo/witnesses.hpp"

using qtwo::EntryMode;
using qtwo::Graph;
using qtwo::QuadElem;
using qtwo::Rational;
using qtwo::SymMatrix;

namespace {

void require_witness(const SymMatrix& m, const Graph& g) {
  CHECK(qtwo::verify_involution(m).pass);
  CHECK(qtwo::matrix_fits_pattern(m, g));
}

}  // namespace

TEST_CASE("witnesses: complete graph involution") {
  for (int n : {1, 2, 3, 6, 11}) {
    INFO("n = " << n);
    require_witness(qtwo::complete_involution(n), qtwo::complete(n));
  }
}

TEST_CASE("witnesses: candle family covers both parities") {
  for (int k = 4; k <= 12; ++k) {
    INFO("k = " << k);
    require_witness(qtwo::candle_witness(k), qtwo::closed_candle(k));
  }
  CHECK_THROWS_AS(qtwo::candle_matrix(3), std::invalid_argument);
}

TEST_CASE("witnesses: bipartite lifts") {
  qtwo::Block b(3, 3, EntryMode::Exact);
  // Signed permutation block, orthogonal by construction.
  b.set_x(0, 1, QuadElem(1));
  b.set_x(1, 2, QuadElem(-1));
  b.set_x(2, 0, QuadElem(1));
  REQUIRE(qtwo::block_orthogonal(b));
  SymMatrix zero_diag = qtwo::bipartite_lift_zero_diag(b);
  CHECK(zero_diag.order() == 6);
  CHECK(qtwo::verify_involution(zero_diag).pass);
  for (int i = 0; i < 6; ++i) CHECK(zero_diag.x(i, i) == QuadElem());
  SymMatrix half = qtwo::bipartite_lift_half_identity(b);
  CHECK(qtwo::verify_involution(half).pass);
  CHECK(half.x(0, 0) == QuadElem(1));
  qtwo::Block bad(2, 2, EntryMode::Exact);
  bad.set_x(0, 0, QuadElem(1));
  bad.set_x(1, 1, QuadElem(2));
  CHECK_THROWS_AS(qtwo::bipartite_lift_zero_diag(bad), std::invalid_argument);
}

TEST_CASE("witnesses: product lift matches the product labeling") {
  SymMatrix m = qtwo::complete_involution(3);
  SymMatrix lifted = qtwo::product_lift(m);
  Graph want = qtwo::cartesian_product(qtwo::complete(3), qtwo::complete(2));
  require_witness(lifted, want);
  // Lift twice: K_3 x K_2 x K_2.
  SymMatrix twice = qtwo::product_lift(lifted);
  Graph want2 = qtwo::cartesian_product(want, qtwo::complete(2));
  require_witness(twice, want2);
}

TEST_CASE("witnesses: kronecker sum has three eigenvalues") {
  SymMatrix m = qtwo::kronecker_sum_3ev(3, 3);
  CHECK(qtwo::matrix_fits_pattern(
      m, qtwo::cartesian_product(qtwo::complete(3), qtwo::complete(3))));
  CHECK(qtwo::distinct_eigenvalue_count(m) == 3);
  auto clusters = qtwo::eigenvalue_clusters(m);
  REQUIRE(clusters.size() == 3);
  CHECK(clusters[0].first == doctest::Approx(-2.0));
  CHECK(clusters[1].first == doctest::Approx(0.0));
  CHECK(clusters[2].first == doctest::Approx(2.0));
}

TEST_CASE("witnesses: catalog entries load verified") {
  for (const auto& key : qtwo::catalog_keys()) {
    INFO(key);
    auto entry = qtwo::catalog_entry(key);
    CHECK(entry.name == key);
    CHECK(qtwo::verify_involution(entry.matrix).pass);
    CHECK(qtwo::matrix_fits_pattern(entry.matrix, entry.graph));
    CHECK(!entry.source.empty());
    CHECK((entry.kind == "witness" || entry.kind == "edge-deleted-ssp" ||
           entry.kind == "quotient"));
  }
  CHECK_THROWS_AS(qtwo::catalog_entry("M99_9"), std::runtime_error);
}

TEST_CASE("witnesses: fit_to relabels onto the target") {
  SymMatrix m = qtwo::catalog_matrix("W10_3");
  Graph target = qtwo::build_named("R10_3");
  std::mt19937 rng(11);
  std::vector<int> perm(target.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph shuffled = qtwo::permuted(target, perm);
  SymMatrix fitted = qtwo::fit_to(m, shuffled);
  CHECK(qtwo::matrix_fits_pattern(fitted, shuffled));
  CHECK(qtwo::verify_involution(fitted).pass);
  CHECK_THROWS_AS(qtwo::fit_to(m, qtwo::build_named("R10_4")),
                  std::invalid_argument);
}

TEST_CASE("witnesses: permuted matrix follows the graph convention") {
  SymMatrix m = qtwo::catalog_matrix("W6_1");
  Graph g = qtwo::pattern_graph(m);
  std::vector<int> perm{3, 0, 4, 1, 5, 2};
  SymMatrix pm = m.permuted(perm);
  CHECK(qtwo::pattern_graph(pm) == qtwo::permuted(g, perm));
  CHECK(qtwo::verify_involution(pm).pass);
}

TEST_CASE("witnesses: witness_for covers the verified q = 2 list") {
  const char* names[] = {
      "K:2",        "K:3",    "K:4",  "K:5",  "K:9",  "K:3,3", "K:4,4",
      "C:3",        "C:4",    "P:2",  "Q:2",  "Q:3",  "Q:4",   "Q:5",
      "H:3",        "H:4",    "H:7",  "H:12", "R6_1", "R7_1",  "R8_1",
      "R8_2",       "R8_3",   "R8_4", "R8_5", "R8_6", "R10_1", "R10_2",
      "R10_3",      "R10_4",  "R12_3", "R14_1", "prod:K3:K2", "prod:K3,3:K2",
      "prod:K3:C4", "prod:K4:K2"};
  for (const char* name : names) {
    INFO(name);
    auto w = qtwo::witness_for(name);
    REQUIRE(w.has_value());
    CHECK(w->name == name);
    CHECK(w->graph == qtwo::build_named(name));
    require_witness(w->matrix, w->graph);
    CHECK(!w->source.empty());
  }
}

TEST_CASE("witnesses: witness_for declines graphs without one") {
  for (const char* name : {"P:3", "C:5", "C:6", "R7_2", "R9_1", "R9_2",
                           "R9_3", "R12_1", "R12_2", "K:2,3"})
    CHECK_FALSE(qtwo::witness_for(name).has_value());
  CHECK_THROWS_AS(qtwo::witness_for("no-such-graph"), std::invalid_argument);
}

TEST_CASE("witnesses: balanced bipartite and hypercube specifics") {
  auto k22 = qtwo::witness_for("K:2,2");
  REQUIRE(k22.has_value());
  CHECK(k22->matrix.order() == 4);
  auto k55 = qtwo::witness_for("K:5,5");
  REQUIRE(k55.has_value());
  for (int i = 0; i < 10; ++i) CHECK(k55->matrix.value(i, i) == 0.0);
  auto q6 = qtwo::witness_for("Q:6");
  REQUIRE(q6.has_value());
  CHECK(q6->matrix.order() == 64);
  CHECK(qtwo::verify_involution(q6->matrix).exact);
}
