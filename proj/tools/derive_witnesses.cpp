// Regenerates every stored matrix under <data_dir>/catalog/. Exact matrices
// are entered as code tables below (symmetry and involution are re-checked
// before anything is written); the remaining witnesses come from the numeric
// search with a fixed seed, snapped to exact values when possible.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <vector>

#include <Eigen/Dense>

#include "qtwo/checks.hpp"
#include "qtwo/graph6.hpp"
#include "qtwo/matrix_json.hpp"
#include "qtwo/named.hpp"
#include "qtwo/search.hpp"
#include "qtwo/witnesses.hpp"

namespace {

using qtwo::Block;
using qtwo::EntryMode;
using qtwo::Graph;
using qtwo::QuadElem;
using qtwo::Rational;
using qtwo::Scale;
using qtwo::SymMatrix;

int failures = 0;

void report(const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "ok   " : "FAIL ") << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

QuadElem q(std::int64_t a) { return QuadElem(Rational(a)); }
QuadElem rt(std::int64_t c, std::int64_t r) {
  return QuadElem::term(Rational(c), r);
}

// Builds a SymMatrix from full rows, insisting on exact symmetry so a
// transcription typo cannot slip through.
SymMatrix from_rows(const std::vector<std::vector<QuadElem>>& rows, Scale s) {
  int n = static_cast<int>(rows.size());
  SymMatrix m(n, EntryMode::Exact);
  m.set_scale(s);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::runtime_error("table row has wrong length");
    for (int j = i; j < n; ++j) {
      if (rows[j][i] != rows[i][j])
        throw std::runtime_error("table is not symmetric at (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
      m.set_x(i, j, rows[i][j]);
    }
  }
  return m;
}

void save(const std::string& key, const std::string& kind,
          const std::string& source, const SymMatrix& m) {
  bool inv = qtwo::verify_involution(m).pass;
  report("involution " + key, inv);
  if (!inv) return;
  Graph pattern = qtwo::pattern_graph(m);
  nlohmann::json j;
  j["name"] = key;
  j["kind"] = kind;
  j["source"] = source;
  j["graph6"] = qtwo::graph6_encode(pattern);
  j["matrix"] = qtwo::matrix_to_json(m);
  std::string path = qtwo::data_dir() + "/catalog/" + key + ".json";
  qtwo::save_json_file(path, j);
  // Round-trip through the public loader as a final self-check.
  try {
    qtwo::catalog_entry(key);
    report("saved " + key, true, path);
  } catch (const std::exception& e) {
    report("saved " + key, false, e.what());
  }
}

// Checks that the matrix pattern equals the named graph label-for-label.
void expect_pattern(const std::string& key, const SymMatrix& m,
                    const std::string& name) {
  report("pattern " + key + " = " + name,
         qtwo::pattern_graph(m) == qtwo::build_named(name));
}

void emit_m7_1() {
  QuadElem Z = q(0);
  std::vector<std::vector<QuadElem>> rows = {
      {q(3), rt(1, 6), q(-3), Z, Z, rt(2, 3), Z},
      {rt(1, 6), Z, rt(1, 6), rt(2, 2), Z, Z, q(-4)},
      {q(-3), rt(1, 6), q(-1), rt(2, 3), rt(2, 2), Z, Z},
      {Z, rt(2, 2), rt(2, 3), q(-3), rt(1, 6), q(1), Z},
      {Z, Z, rt(2, 2), rt(1, 6), q(-2), rt(1, 6), rt(2, 3)},
      {rt(2, 3), Z, Z, q(1), rt(1, 6), q(-3), rt(2, 2)},
      {Z, q(-4), Z, Z, rt(2, 3), rt(2, 2), Z}};
  SymMatrix m = from_rows(rows, Scale{Rational(1, 6), 1});
  Graph host = qtwo::build_named("R7_1");
  host.remove_edge(0, 6);
  report("pattern M7_1 = R7_1 minus {0,6}", qtwo::pattern_graph(m) == host);
  report("ssp M7_1", qtwo::verify_ssp(m, qtwo::pattern_graph(m)) == qtwo::Tristate::yes);
  save("M7_1", "edge-deleted-ssp",
       "hand-entered exact witness for R7_1 with edge {0,6} removed; its "
       "strong spectral property restores the edge",
       m);
}

void emit_m8_2() {
  QuadElem Z = q(0);
  QuadElem a = QuadElem(Rational(1, 2)) + QuadElem::term(Rational(1, 2), 5);
  QuadElem b = QuadElem(Rational(-1, 2)) + QuadElem::term(Rational(1, 2), 5);
  std::vector<std::vector<QuadElem>> rows = {
      {q(1), q(1), q(1), Z, Z, q(1), Z, q(-1)},
      {q(1), q(1), q(-1), Z, q(-1), Z, Z, q(1)},
      {q(1), q(-1), Z, b, Z, Z, a, Z},
      {Z, Z, b, Z, q(1), q(1), Z, a},
      {Z, q(-1), Z, q(1), q(-1), q(1), q(-1), Z},
      {q(1), Z, Z, q(1), q(1), q(-1), q(-1), Z},
      {Z, Z, a, Z, q(-1), q(-1), Z, b},
      {q(-1), q(1), Z, a, Z, Z, b, Z}};
  SymMatrix m = from_rows(rows, Scale{Rational(1, 5), 5});  // 1/sqrt(5)
  expect_pattern("M8_2", m, "R8_2");
  save("M8_2", "witness", "hand-entered exact witness for R8_2", m);
}

void emit_m8_3() {
  QuadElem Z = q(0);
  std::vector<std::vector<QuadElem>> rows = {
      {q(2), rt(1, 2), Z, rt(-1, 2), rt(1, 2), Z, Z, rt(1, 2)},
      {rt(1, 2), Z, rt(1, 2), Z, q(-2), q(-2), Z, Z},
      {Z, rt(1, 2), q(-2), rt(1, 2), Z, rt(-1, 2), rt(-1, 2), Z},
      {rt(-1, 2), Z, rt(1, 2), Z, Z, Z, q(-2), q(2)},
      {rt(1, 2), q(-2), Z, Z, q(1), Z, q(-2), q(-1)},
      {Z, q(-2), rt(-1, 2), Z, Z, q(-1), q(1), q(2)},
      {Z, Z, rt(-1, 2), q(-2), q(-2), q(1), q(-1), Z},
      {rt(1, 2), Z, Z, q(2), q(-1), q(2), Z, q(1)}};
  SymMatrix m = from_rows(rows, Scale{Rational(1, 6), 3});  // 1/sqrt(12)
  expect_pattern("M8_3", m, "R8_3");
  save("M8_3", "witness", "hand-entered exact witness for R8_3", m);
}

void emit_m8_4c() {
  QuadElem Z = q(0);
  std::vector<std::vector<QuadElem>> rows = {
      {Z, rt(-1, 3), Z, Z, rt(1, 3), Z, rt(1, 3)},
      {rt(-1, 3), q(1), rt(-1, 3), q(1), q(1), Z, Z},
      {Z, rt(-1, 3), Z, rt(1, 3), Z, Z, rt(-1, 3)},
      {Z, q(1), rt(1, 3), q(1), q(1), rt(1, 3), Z},
      {rt(1, 3), q(1), Z, q(1), q(1), rt(-1, 3), Z},
      {Z, Z, Z, rt(1, 3), rt(-1, 3), Z, rt(1, 3)},
      {rt(1, 3), Z, rt(-1, 3), Z, Z, rt(1, 3), Z}};
  SymMatrix m = from_rows(rows, Scale{Rational(1, 3), 1});
  report("pattern jdup(M8_4c, 6) = R8_4",
         qtwo::joined_duplicate(qtwo::pattern_graph(m), 6) ==
             qtwo::build_named("R8_4"));
  save("M8_4c", "quotient",
       "hand-entered exact witness for the contraction of R8_4; joined "
       "duplication of the merged vertex recovers R8_4",
       m);
}

void emit_m8_6() {
  QuadElem Z = q(0);
  std::vector<std::vector<QuadElem>> rows = {
      {rt(-1, 2), rt(1, 2), q(-1), Z, Z, Z, q(-1), q(-2)},
      {rt(1, 2), rt(1, 2), q(-2), q(1), Z, Z, Z, q(1)},
      {q(-1), q(-2), rt(-1, 2), rt(1, 2), q(1), Z, Z, Z},
      {Z, q(1), rt(1, 2), rt(1, 2), q(2), q(-1), Z, Z},
      {Z, Z, q(1), q(2), rt(-1, 2), rt(1, 2), q(-1), Z},
      {Z, Z, Z, q(-1), rt(1, 2), rt(1, 2), q(-2), q(1)},
      {q(-1), Z, Z, Z, q(-1), q(-2), rt(-1, 2), rt(1, 2)},
      {q(-2), q(1), Z, Z, Z, q(1), rt(1, 2), rt(1, 2)}};
  SymMatrix m = from_rows(rows, Scale{Rational(1, 10), 10});  // 1/sqrt(10)
  expect_pattern("M8_6", m, "R8_6");
  save("M8_6", "witness", "hand-entered exact witness for R8_6", m);
}

void emit_m10_2() {
  QuadElem Z = q(0);
  std::vector<std::vector<QuadElem>> rows = {
      {rt(-1, 2), q(-2), Z, Z, rt(1, 2), Z, Z, q(2), Z, q(-2)},
      {q(-2), rt(1, 2), q(2), Z, Z, rt(1, 2), Z, Z, q(-2), Z},
      {Z, q(2), rt(-1, 2), q(-2), Z, Z, rt(1, 2), Z, Z, q(-2)},
      {Z, Z, q(-2), rt(1, 2), q(2), Z, Z, rt(-1, 2), q(-2), Z},
      {rt(1, 2), Z, Z, q(2), rt(-1, 2), q(2), Z, Z, Z, q(-2)},
      {Z, rt(1, 2), Z, Z, q(2), rt(1, 2), q(-2), Z, q(2), Z},
      {Z, Z, rt(1, 2), Z, Z, q(-2), rt(-1, 2), q(-2), Z, q(-2)},
      {q(2), Z, Z, rt(-1, 2), Z, Z, q(-2), rt(1, 2), q(-2), Z},
      {Z, q(-2), Z, q(-2), Z, q(2), Z, q(-2), Z, Z},
      {q(-2), Z, q(-2), Z, q(-2), Z, q(-2), Z, Z, Z}};
  SymMatrix m = from_rows(rows, Scale{Rational(1, 4), 1});
  expect_pattern("M10_2", m, "R10_2");
  save("M10_2", "witness", "hand-entered exact witness for R10_2", m);
}

void emit_m14_1() {
  // Circulant block: row i of the 7x7 half is the i-step cyclic shift of
  // (1, 0, 1, 0, 0, -1, 1); the zero-diagonal lift gives the witness.
  const int first[7] = {1, 0, 1, 0, 0, -1, 1};
  Block b(7, 7, EntryMode::Exact);
  b.set_scale(Scale{Rational(1, 2), 1});
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) b.set_x(i, j, q(first[(j - i + 7) % 7]));
  SymMatrix m = qtwo::bipartite_lift_zero_diag(b);
  expect_pattern("M14_1", m, "R14_1");
  save("M14_1", "witness",
       "zero-diagonal lift of a circulant orthogonal sign block", m);
}

void emit_m12_3() {
  double s5 = std::sqrt(5.0);
  double alpha = (s5 + 1) / 2;
  double beta = std::sqrt(2 * s5 / 5 - 4.0 / 5);
  double gamma = std::sqrt(17.0 / 10 - 7 * s5 / 10);
  double delta = s5 / 10 + 0.5;
  double eps = alpha * beta;
  double zeta = alpha * gamma;
  double t = s5 / 5;
  const double rows[6][6] = {
      {-zeta, -beta, zeta, -t, 0, 0},  {eps, -gamma, beta, 0, delta, 0},
      {t, 0, 0, -zeta, -beta, -zeta},  {t, 0, t, 0, -eps, zeta},
      {0, delta, 0, -eps, gamma, beta}, {0, -eps, -zeta, -t, 0, t}};
  Block b(6, 6, EntryMode::Float);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) b.set_f(i, j, rows[i][j]);
  report("block orthogonal B12_3", qtwo::block_orthogonal(b));
  SymMatrix lifted = qtwo::bipartite_lift_zero_diag(b);
  SymMatrix m = qtwo::fit_to(lifted, qtwo::build_named("R12_3"));
  expect_pattern("M12_3", m, "R12_3");
  save("M12_3", "witness",
       "zero-diagonal lift of a closed-form orthogonal block, relabeled to "
       "the circulant ordering",
       m);
}

std::vector<double> variables_of(const Graph& g, const Eigen::MatrixXd& m) {
  int n = g.order();
  std::vector<double> x(qtwo::variable_count(g));
  for (int i = 0; i < n; ++i) x[i] = m(i, i);
  auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e)
    x[n + e] = m(edges[e].first, edges[e].second);
  return x;
}

Eigen::MatrixXd matrix_of(const Graph& g, const std::vector<double>& x) {
  int n = g.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = x[i];
  auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e)
    m(edges[e].first, edges[e].second) = m(edges[e].second, edges[e].first) =
        x[n + e];
  return m;
}

// Drives a near-involution to machine precision. A few rounds of the spectral
// sign map (nearest involution sharing the eigenvectors) followed by
// re-imposing the pattern shrink the residual; Gauss-Newton steps on the
// system M^2 = I in the free entries then converge quadratically.
SymMatrix polish(const Graph& g, const SymMatrix& m0) {
  int n = g.order();
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd mask = id;
  for (auto [u, v] : g.edges()) mask(u, v) = mask(v, u) = 1.0;
  Eigen::MatrixXd m = m0.to_eigen();
  for (int round = 0; round < 20; ++round) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Eigen::VectorXd sg = es.eigenvalues().unaryExpr(
        [](double l) { return l < 0 ? -1.0 : 1.0; });
    m = es.eigenvectors() * sg.asDiagonal() * es.eigenvectors().transpose();
    m = m.cwiseProduct(mask);
    if ((m * m - id).cwiseAbs().maxCoeff() < 1e-14) break;
  }
  std::vector<double> x = variables_of(g, m);
  auto edges = g.edges();
  int dim = qtwo::variable_count(g);
  int rows = n * (n + 1) / 2;
  for (int it = 0; it < 50; ++it) {
    m = matrix_of(g, x);
    Eigen::MatrixXd err = m * m - id;
    if (err.cwiseAbs().maxCoeff() < 1e-14) break;
    Eigen::MatrixXd jac(rows, dim);
    Eigen::VectorXd rhs(rows);
    for (int v = 0; v < dim; ++v) {
      int a, b;
      if (v < n) {
        a = b = v;
      } else {
        a = edges[v - n].first;
        b = edges[v - n].second;
      }
      Eigen::MatrixXd dm = Eigen::MatrixXd::Zero(n, n);
      dm(a, b) = dm(b, a) = 1.0;
      Eigen::MatrixXd dm2 = dm * m + m * dm;
      int row = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) jac(row++, v) = dm2(i, j);
    }
    int row = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) rhs(row++) = -err(i, j);
    Eigen::VectorXd delta =
        jac.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
    for (int v = 0; v < dim; ++v) x[v] += delta(v);
  }
  return qtwo::assemble_matrix(g, x);
}

std::string residual_string(const SymMatrix& m) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2g", qtwo::verify_involution(m).residual);
  return buf;
}

void derive_by_search(const std::string& key, const std::string& name) {
  Graph g = qtwo::build_named(name);
  qtwo::SearchConfig cfg;
  cfg.restarts = 60;
  cfg.seed = 1;
  qtwo::SearchResult sr = qtwo::find_witness(g, cfg);
  if (!sr.found) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2g", sr.residual);
    report("search " + key + " (" + name + ")", false,
           std::string("no witness found; best residual ") + buf);
    return;
  }
  SymMatrix m = polish(g, sr.matrix);
  std::string source;
  if (auto exact = qtwo::rounding_probe(m)) {
    m = *exact;
    source = "numeric search, seed 1, snapped to exact values";
  } else {
    source =
        "numeric search, seed 1, polished to residual " + residual_string(m);
  }
  report("search " + key + " (" + name + ")", true,
         source + ", restarts used " + std::to_string(sr.restarts_used));
  expect_pattern(key, m, name);
  save(key, "witness", source, m);
}

}  // namespace

int main() {
  std::filesystem::create_directories(qtwo::data_dir() + "/catalog");
  std::cout << "writing catalog to " << qtwo::data_dir() << "/catalog\n";

  emit_m7_1();
  emit_m8_2();
  emit_m8_3();
  emit_m8_4c();
  emit_m8_6();
  emit_m10_2();
  emit_m12_3();
  emit_m14_1();

  derive_by_search("W6_1", "R6_1");
  derive_by_search("W7_1", "R7_1");
  derive_by_search("W8_4", "R8_4");
  derive_by_search("W10_3", "R10_3");
  derive_by_search("W10_4", "R10_4");

  if (failures) {
    std::cout << failures << " step(s) FAILED\n";
    return 1;
  }
  std::cout << "catalog complete\n";
  return 0;
}
