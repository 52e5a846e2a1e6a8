#include "qtwo/checks.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qtwo {

namespace {

double numeric_involution_residual(const SymMatrix& m) {
  Eigen::MatrixXd a = m.to_eigen();
  Eigen::MatrixXd e = a * a - Eigen::MatrixXd::Identity(m.order(), m.order());
  return e.cwiseAbs().maxCoeff();
}

// Exact check E^2 = q I with q = 1/scale^2, using row sparsity: witness
// rows have few nonzero entries, so M^2 is accumulated row by row.
bool exact_involution(const SymMatrix& m) {
  int n = m.order();
  Rational q = m.scale().square().inverse();
  std::vector<std::vector<int>> support(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!m.x(i, j).is_zero()) support[i].push_back(j);
  QuadElem qe{q};
  std::vector<QuadElem> row(n);
  for (int i = 0; i < n; ++i) {
    std::fill(row.begin(), row.end(), QuadElem());
    for (int k : support[i]) {
      const QuadElem& mik = m.x(i, k);
      for (int j : support[k])
        if (j >= i) row[j] += mik * m.x(k, j);
    }
    for (int j = i; j < n; ++j) {
      const QuadElem& want = (j == i) ? qe : QuadElem();
      if (!(row[j] == want)) return false;
    }
  }
  return true;
}

}  // namespace

InvolutionReport verify_involution(const SymMatrix& m, double tol) {
  InvolutionReport rep;
  if (m.mode() == EntryMode::Exact) {
    rep.exact = true;
    rep.pass = exact_involution(m);
    rep.residual = rep.pass ? 0.0 : numeric_involution_residual(m);
  } else {
    rep.exact = false;
    rep.residual = numeric_involution_residual(m);
    rep.pass = rep.residual <= tol;
  }
  return rep;
}

bool matrix_fits_pattern(const SymMatrix& m, const Graph& g, double tol) {
  if (m.order() != g.order()) return false;
  for (int i = 0; i < m.order(); ++i)
    for (int j = i + 1; j < m.order(); ++j) {
      bool zero = m.entry_is_zero(i, j, tol);
      if (g.has_edge(i, j) == zero) return false;
    }
  return true;
}

Graph pattern_graph(const SymMatrix& m, double tol) {
  Graph g(m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = i + 1; j < m.order(); ++j)
      if (!m.entry_is_zero(i, j, tol)) g.add_edge(i, j);
  return g;
}

std::vector<std::pair<double, int>> eigenvalue_clusters(const SymMatrix& m,
                                                        double reltol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.to_eigen());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue computation failed");
  Eigen::VectorXd ev = solver.eigenvalues();  // ascending
  int n = static_cast<int>(ev.size());
  std::vector<std::pair<double, int>> clusters;
  if (n == 0) return clusters;
  double scale = std::max(1.0, std::max(std::abs(ev(0)), std::abs(ev(n - 1))));
  double gap = reltol * scale;
  double sum = ev(0);
  int count = 1;
  for (int i = 1; i < n; ++i) {
    if (ev(i) - ev(i - 1) > gap) {
      clusters.emplace_back(sum / count, count);
      sum = 0;
      count = 0;
    }
    sum += ev(i);
    ++count;
  }
  clusters.emplace_back(sum / count, count);
  return clusters;
}

int distinct_eigenvalue_count(const SymMatrix& m, double reltol) {
  return static_cast<int>(eigenvalue_clusters(m, reltol).size());
}

Tristate verify_ssp(const SymMatrix& m, const Graph& g) {
  int n = m.order();
  if (g.order() != n)
    throw std::domain_error("pattern graph order does not match matrix");
  std::vector<std::pair<int, int>> unknowns;  // free positions of X
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (!g.has_edge(p, q)) unknowns.emplace_back(p, q);
  if (unknowns.empty()) return Tristate::yes;
  Eigen::MatrixXd mm = m.to_eigen();
  // Rows: equations (MX - XM)_{ab} = 0 for a < b (the commutator is
  // antisymmetric); columns: unknowns x_{pq}.
  int rows = n * (n - 1) / 2;
  Eigen::MatrixXd sys(rows, static_cast<int>(unknowns.size()));
  int row = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++row)
      for (std::size_t c = 0; c < unknowns.size(); ++c) {
        auto [p, q] = unknowns[c];
        double coeff = 0;
        if (q == b) coeff += mm(a, p);
        if (p == b) coeff += mm(a, q);
        if (a == p) coeff -= mm(q, b);
        if (a == q) coeff -= mm(p, b);
        sys(row, static_cast<int>(c)) = coeff;
      }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys);
  const auto& sing = svd.singularValues();
  double smax = sing(0);
  double smin = sing(sing.size() - 1);
  if (smax == 0.0) return Tristate::no;  // whole system vanishes
  if (smin > 1e-6 * smax) return Tristate::yes;
  if (smin < 1e-10 * smax) return Tristate::no;
  return Tristate::indeterminate;
}

bool block_orthogonal(const Block& b, double tol) {
  if (b.mode() == EntryMode::Exact) {
    Rational q = b.scale().square().inverse();
    QuadElem qe{q};
    // rows
    for (int i = 0; i < b.rows(); ++i)
      for (int j = i; j < b.rows(); ++j) {
        QuadElem dot;
        for (int k = 0; k < b.cols(); ++k) dot += b.x(i, k) * b.x(j, k);
        if (!(dot == (i == j ? qe : QuadElem()))) return false;
      }
    // columns
    for (int i = 0; i < b.cols(); ++i)
      for (int j = i; j < b.cols(); ++j) {
        QuadElem dot;
        for (int k = 0; k < b.rows(); ++k) dot += b.x(k, i) * b.x(k, j);
        if (!(dot == (i == j ? qe : QuadElem()))) return false;
      }
    return true;
  }
  Eigen::MatrixXd mat = b.to_eigen();
  if (mat.rows() != mat.cols()) return false;
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(mat.rows(), mat.cols());
  return (mat * mat.transpose() - id).cwiseAbs().maxCoeff() <= tol &&
         (mat.transpose() * mat - id).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qtwo
