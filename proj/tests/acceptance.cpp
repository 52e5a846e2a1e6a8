// Acceptance suite: one PASS/FAIL line per numbered criterion.
//
//   acceptance        runs every criterion
//   acceptance <n>    runs a single criterion
//
// Exit status is 0 iff every criterion that ran passed. Each criterion
// carries a wall-clock budget and fails when it runs over.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qtwo/checks.hpp"
#include "qtwo/enumerate.hpp"
#include "qtwo/graph.hpp"
#include "qtwo/named.hpp"
#include "qtwo/obstructions.hpp"
#include "qtwo/pipeline.hpp"
#include "qtwo/search.hpp"
#include "qtwo/witnesses.hpp"

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ---- 1: candle identity ----------------------------------------------------

qtwo::Rational exact_rational_entry(const qtwo::SymMatrix& m, int i, int j) {
  const qtwo::QuadElem& e = m.x(i, j);
  if (!e.is_rational()) throw std::runtime_error("entry is irrational");
  return e.rational_part();
}

Outcome criterion_candles() {
  Outcome out;
  for (int k = 4; k <= 50; ++k) {
    qtwo::SymMatrix w = qtwo::candle_matrix(k);
    std::string tag = "k=" + std::to_string(k);
    if (w.mode() != qtwo::EntryMode::Exact || !w.scale().is_one()) {
      out.fail(tag + ": not an unscaled exact matrix");
      continue;
    }
    int n = w.order();
    bool integer = true;
    for (int i = 0; i < n && integer; ++i)
      for (int j = i; j < n; ++j) {
        const qtwo::QuadElem& e = w.x(i, j);
        if (!e.is_rational() || !e.rational_part().is_integer()) {
          integer = false;
          break;
        }
      }
    if (!integer) {
      out.fail(tag + ": non-integer entry");
      continue;
    }
    if (!qtwo::matrix_fits_pattern(w, qtwo::closed_candle(k))) {
      out.fail(tag + ": pattern mismatch");
      continue;
    }
    bool squares = true;
    for (int i = 0; i < n && squares; ++i)
      for (int j = i; j < n; ++j) {
        qtwo::Rational sum(0);
        for (int t = 0; t < n; ++t)
          sum = sum + exact_rational_entry(w, i, t) *
                          exact_rational_entry(w, t, j);
        qtwo::Rational want(i == j ? 4 : 0);
        if (!(sum == want)) {
          squares = false;
          break;
        }
      }
    if (!squares) out.fail(tag + ": W^2 != 4I");
  }
  return out;
}

// ---- 2: catalog verification ------------------------------------------------

Outcome criterion_catalog() {
  Outcome out;
  const char* keys[] = {"M7_1",  "M8_2",  "M8_3",  "M8_4c",
                        "M8_6",  "M10_2", "M12_3", "M14_1"};
  for (const char* key : keys) {
    try {
      qtwo::CatalogEntry e = qtwo::catalog_entry(key);
      qtwo::InvolutionReport rep = qtwo::verify_involution(e.matrix, 1e-10);
      if (!rep.pass)
        out.fail(std::string(key) + ": involution residual too large");
      if (e.matrix.mode() == qtwo::EntryMode::Exact && !rep.exact)
        out.fail(std::string(key) + ": exact entries but inexact involution");
      if (!qtwo::matrix_fits_pattern(e.matrix, e.graph))
        out.fail(std::string(key) + ": pattern mismatch");
    } catch (const std::exception& ex) {
      out.fail(std::string(key) + ": " + ex.what());
    }
  }
  try {
    qtwo::CatalogEntry m71 = qtwo::catalog_entry("M7_1");
    if (qtwo::verify_ssp(m71.matrix, m71.graph) != qtwo::Tristate::yes)
      out.fail("M7_1: strong spectral property not confirmed");
  } catch (const std::exception& ex) {
    out.fail(std::string("M7_1 ssp: ") + ex.what());
  }
  return out;
}

// ---- 3: enumeration regression ----------------------------------------------

Outcome criterion_enumeration() {
  Outcome out;
  const int expected[] = {1, 1, 2, 6, 16, 59};
  for (int n = 5; n <= 10; ++n) {
    int got = static_cast<int>(qtwo::enumerate_regular(n, 4).size());
    if (got != expected[n - 5])
      out.fail("n=" + std::to_string(n) + ": " + std::to_string(got) +
               " graphs, expected " + std::to_string(expected[n - 5]));
  }
  // Independent brute-force confirmation where the oracle is affordable.
  for (int n = 5; n <= 8; ++n) {
    int got = oracle::count_connected_regular(n, 4);
    if (got != expected[n - 5])
      out.fail("oracle n=" + std::to_string(n) + ": " + std::to_string(got) +
               ", expected " + std::to_string(expected[n - 5]));
  }
  return out;
}

// ---- 4: census reproduction --------------------------------------------------

Outcome criterion_census() {
  Outcome out;
  qtwo::CensusReport rep = qtwo::run_diameter2_census();
  if (rep.records.size() != 13)
    out.fail(std::to_string(rep.records.size()) + " survivors, expected 13");

  const std::map<std::string, std::string> expected = {
      {"R6_1", "q=2"},     {"R7_1", "q=2"},  {"R7_2", "asserted"},
      {"R8_1", "q=2"},     {"R8_2", "q=2"},  {"R8_3", "q=2"},
      {"R8_4", "q=2"},     {"R8_5", "q=2"},  {"R8_6", "q=2"},
      {"R9_1", "q>2"},     {"R9_2", "q>2"},  {"R9_3", "asserted"},
      {"R10_1", "q=2"}};
  std::map<std::string, std::string> got;
  for (const qtwo::ClassificationRecord& r : rep.records) {
    if (r.matched.empty()) {
      out.fail("unmatched survivor " + r.id);
      continue;
    }
    got[r.matched] = r.status;
    if (!qtwo::verify_record(qtwo::record_to_json(r)))
      out.fail(r.matched + ": record fails re-verification");
    if (r.matched == "R9_1" || r.matched == "R9_2") {
      if (!r.certificate ||
          qtwo::certificate_type(*r.certificate) != "diagonal-parity")
        out.fail(r.matched + ": expected a diagonal-parity certificate");
    }
    if (r.status == "asserted" && r.citation.empty())
      out.fail(r.matched + ": asserted without citation");
  }
  if (got != expected) out.fail("survivor statuses do not match the table");

  int ev = qtwo::distinct_eigenvalue_count(qtwo::kronecker_sum_3ev(3, 3), 1e-8);
  if (ev != 3)
    out.fail("Kronecker-sum matrix has " + std::to_string(ev) +
             " distinct eigenvalues, expected 3");
  return out;
}

// ---- 5: twin-obstruction selectivity ----------------------------------------

Outcome criterion_twins() {
  Outcome out;
  for (const char* name : {"R12_1", "R12_2"}) {
    qtwo::Graph g = qtwo::build_named(name);
    auto cert = qtwo::check_bipartite_twin(g);
    if (!cert)
      out.fail(std::string(name) + ": no certificate fired");
    else if (!qtwo::verify_certificate(g, qtwo::Certificate(*cert)))
      out.fail(std::string(name) + ": certificate fails re-verification");
  }
  std::vector<std::string> silent = {"R12_3", "R14_1", "Q:4"};
  for (int k = 3; k <= 10; ++k) silent.push_back("H:" + std::to_string(k));
  for (const std::string& name : silent) {
    if (qtwo::check_bipartite_twin(qtwo::build_named(name)))
      out.fail(name + ": spurious twin certificate");
  }
  return out;
}

// ---- 6: theorem list verification -------------------------------------------

Outcome criterion_theorem_list() {
  Outcome out;
  qtwo::VerificationReport rep = qtwo::verify_theorem_list();
  int checks = 0;
  for (const qtwo::CheckLine& line : rep.lines) {
    ++checks;
    if (!line.pass) out.fail(line.name + " (" + line.detail + ")");
  }
  if (checks == 0) out.fail("no checks ran");
  if (out.pass) out.detail = std::to_string(checks) + " checks";
  return out;
}

// ---- 7: filter soundness property suite --------------------------------------

Outcome criterion_filter_soundness() {
  Outcome out;
  int total = 0;
  auto check_witnessed = [&](const qtwo::SymMatrix& m, const std::string& tag) {
    ++total;
    qtwo::Graph g = qtwo::pattern_graph(m);
    qtwo::FilterReport fr = qtwo::run_filter_chain(g);
    if (fr.ruled_out) out.fail(tag + ": filter chain ruled out a witnessed graph");
    if (qtwo::check_parity(g)) out.fail(tag + ": spurious parity certificate");
    if (qtwo::check_bipartite_twin(g))
      out.fail(tag + ": spurious twin certificate");
  };

  for (int k = 4; k <= 30; ++k)
    check_witnessed(qtwo::candle_witness(k), "candle k=" + std::to_string(k));
  for (int k = 4; k <= 20; ++k)
    check_witnessed(qtwo::product_lift(qtwo::candle_witness(k)),
                    "lifted candle k=" + std::to_string(k));
  for (const std::string& key : qtwo::catalog_keys()) {
    qtwo::SymMatrix m = qtwo::catalog_matrix(key);
    check_witnessed(m, "catalog " + key);
    qtwo::SymMatrix lifted = qtwo::product_lift(m);
    check_witnessed(lifted, "lifted catalog " + key);
    check_witnessed(qtwo::product_lift(lifted), "double-lifted catalog " + key);
  }

  std::mt19937 rng(40721);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + trial % 6;
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = gauss(rng);
    Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ();
    qtwo::Block b(n, n, qtwo::EntryMode::Float);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b.set_f(i, j, q(i, j));
    std::string tag = "orthogonal trial " + std::to_string(trial);
    check_witnessed(qtwo::bipartite_lift_zero_diag(b), tag + " zero-diag");
    check_witnessed(qtwo::bipartite_lift_half_identity(b),
                    tag + " half-identity");
  }

  if (total < 200)
    out.fail("only " + std::to_string(total) + " witnessed graphs checked");
  if (out.pass) out.detail = std::to_string(total) + " witnessed graphs";
  return out;
}

// ---- 8: gradient check --------------------------------------------------------

Outcome criterion_gradient() {
  Outcome out;
  std::mt19937 rng(2026);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> edge_mag(0.3, 1.2);
  const double mu = 1.0, eps = 0.05, h = 1e-5;

  int done = 0;
  while (done < 50) {
    int n = 4 + static_cast<int>(rng() % 9);  // 4..12
    qtwo::Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2 == 0) g.add_edge(i, j);
    if (g.size() == 0) continue;
    ++done;

    std::vector<double> x(qtwo::variable_count(g));
    for (int i = 0; i < n; ++i) x[i] = unit(rng);
    for (std::size_t i = n; i < x.size(); ++i)
      x[i] = (rng() % 2 ? 1.0 : -1.0) * edge_mag(rng);

    std::vector<double> grad;
    qtwo::objective_and_gradient(g, x, mu, eps, grad);

    double diff2 = 0, norm2 = 0;
    std::vector<double> scratch;
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::vector<double> xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      double fd = (qtwo::objective_and_gradient(g, xp, mu, eps, scratch) -
                   qtwo::objective_and_gradient(g, xm, mu, eps, scratch)) /
                  (2 * h);
      diff2 += (grad[i] - fd) * (grad[i] - fd);
      norm2 += fd * fd;
    }
    double rel = std::sqrt(diff2) / std::max(1e-300, std::sqrt(norm2));
    if (rel > 1e-5)
      out.fail("trial " + std::to_string(done) + " (n=" + std::to_string(n) +
               "): relative error " + std::to_string(rel));
  }
  return out;
}

// ---- 9: search sanity -----------------------------------------------------------

Outcome criterion_search() {
  Outcome out;
  const char* succeed[] = {"R6_1",  "R7_1",  "R8_1",  "R8_2",
                           "R8_3",  "R8_4",  "R8_5",  "R8_6",
                           "R10_1", "R10_2", "R10_3", "R10_4"};
  qtwo::SearchConfig cfg;  // defaults
  for (const char* name : succeed) {
    qtwo::Graph g = qtwo::build_named(name);
    auto t0 = std::chrono::steady_clock::now();
    qtwo::SearchResult sr = qtwo::find_witness(g, cfg);
    double elapsed = seconds_since(t0);
    if (!sr.found) {
      out.fail(std::string(name) + ": no witness found");
      continue;
    }
    if (elapsed > 60.0)
      out.fail(std::string(name) + ": took " + std::to_string(elapsed) + " s");
    if (sr.residual > 1e-8)
      out.fail(std::string(name) + ": residual " + std::to_string(sr.residual));
    if (sr.min_edge < 0.05)
      out.fail(std::string(name) + ": edge entry below floor");
    if (!qtwo::matrix_fits_pattern(sr.matrix, g))
      out.fail(std::string(name) + ": pattern mismatch");
  }
  for (const char* name : {"P:3", "C:5", "R9_1", "R12_1"}) {
    qtwo::SearchResult sr = qtwo::find_witness(qtwo::build_named(name), cfg);
    if (sr.found)
      out.fail(std::string(name) + ": search unexpectedly succeeded");
    else if (sr.restarts_used != cfg.restarts)
      out.fail(std::string(name) + ": gave up after " +
               std::to_string(sr.restarts_used) + " restarts");
  }
  return out;
}

struct Criterion {
  int number;
  const char* name;
  double budget_s;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "candle identity k=4..50", 5, criterion_candles},
    {2, "catalog verification", 5, criterion_catalog},
    {3, "enumeration regression n=5..10", 600, criterion_enumeration},
    {4, "diameter-2 census reproduction", 900, criterion_census},
    {5, "twin-obstruction selectivity", 1, criterion_twins},
    {6, "theorem list verification", 120, criterion_theorem_list},
    {7, "filter soundness on witnessed graphs", 120, criterion_filter_soundness},
    {8, "gradient vs central differences", 30, criterion_gradient},
    {9, "search sanity", 1200, criterion_search},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 9) {
      std::fprintf(stderr, "usage: %s [1-9]\n", argv[0]);
      return 2;
    }
  }

  bool all_pass = true;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& ex) {
      out.fail(std::string("exception: ") + ex.what());
    }
    double elapsed = seconds_since(t0);
    if (elapsed > c.budget_s)
      out.fail("over budget (" + std::to_string(elapsed) + " s > " +
               std::to_string(c.budget_s) + " s)");
    all_pass = all_pass && out.pass;
    std::printf("criterion %d (%s): %s [%.1f s]%s%s\n", c.number, c.name,
                out.pass ? "PASS" : "FAIL", elapsed,
                out.detail.empty() ? "" : " — ", out.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
