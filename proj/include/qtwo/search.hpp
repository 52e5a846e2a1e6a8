#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtwo/graph.hpp"
#include "qtwo/symmatrix.hpp"

namespace qtwo {

// Numeric search for an involution with a prescribed pattern: minimize
//   f(M) = ||M^2 - I||_F^2 + mu * sum_edges max(0, eps - |m_e|)^2
// over the free entries (diagonal plus one value per edge) with L-BFGS and
// random restarts. The penalty keeps edge entries away from zero so a
// minimizer actually fits the pattern.
struct SearchConfig {
  int restarts = 40;
  int max_iters = 2000;
  double residual_tol = 1e-8;  // success: max |(M^2 - I)_{ij}| <= this
  double edge_floor = 0.05;    // success: min |edge entry| >= this
  double penalty_eps = 0.05;   // entries below this are penalized
  double penalty_mu = 1.0;     // base weight; grows tenfold every 3 restarts
  int lbfgs_memory = 8;
  std::uint64_t seed = 1;
  std::string trace_path;  // if nonempty, JSONL {restart, iter, f} per step

  // Throws std::invalid_argument on inconsistent settings (in particular
  // residual_tol must stay below edge_floor, so a success is never ambiguous
  // between "entry present" and "residual noise").
  void validate() const;
};

struct SearchResult {
  bool found = false;
  SymMatrix matrix;       // float-mode witness when found
  double residual = 0;    // max-norm of M^2 - I for the reported matrix
  double min_edge = 0;    // smallest |edge entry| of the reported matrix
  int restarts_used = 0;  // restarts consumed (== restarts when not found)
};

// Number of free variables for pattern g: order + edge count.
int variable_count(const Graph& g);

// Symmetric float matrix from the variable vector x (diagonal entries first,
// then edge entries in sorted edge order); non-edges are zero.
SymMatrix assemble_matrix(const Graph& g, const std::vector<double>& x);

// Objective value and gradient at x (same variable layout as assemble_matrix).
double objective_and_gradient(const Graph& g, const std::vector<double>& x,
                              double mu, double eps, std::vector<double>& grad);

SearchResult find_witness(const Graph& g, const SearchConfig& cfg = {});

// Tries to snap every entry of a float matrix to c or c*sqrt(r) with c = p/q,
// q <= max_den, r drawn from radicands. Returns the exact matrix when every
// entry snaps within tol of its float value and the snapped matrix is an
// exact involution with the same pattern; nullopt otherwise.
std::optional<SymMatrix> rounding_probe(
    const SymMatrix& m, const std::vector<std::int64_t>& radicands = {2, 3, 5, 6},
    std::int64_t max_den = 24, double tol = 1e-6);

}  // namespace qtwo
