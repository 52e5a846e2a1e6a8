#pragma once

#include <vector>

#include "qtwo/graph.hpp"
#include "qtwo/symmatrix.hpp"

namespace qtwo {

enum class Tristate { yes, no, indeterminate };

struct InvolutionReport {
  bool pass = false;
  bool exact = false;   // whether the decision was made in exact arithmetic
  double residual = 0;  // max |(M^2 - I)_{ij}| (numeric; 0 for exact passes)
};

// Checks M^2 = I. Exact matrices are decided exactly: with scale s the test
// is E^2 = (1/s^2) I over the entry field, and 1/s^2 is rational. Float
// matrices compare the numeric residual against tol.
InvolutionReport verify_involution(const SymMatrix& m, double tol = 1e-10);

// Off-diagonal support must equal the edge set: nonzero on edges, zero on
// non-edges (exactly in exact mode, within tol in float mode). Diagonal
// entries are unconstrained.
bool matrix_fits_pattern(const SymMatrix& m, const Graph& g, double tol = 1e-8);

// Graph whose edges are the off-diagonal entries with |value| > tol.
Graph pattern_graph(const SymMatrix& m, double tol = 1e-8);

// Eigenvalues clustered with relative gap reltol * max(1, largest |lambda|);
// returns (cluster mean, multiplicity) sorted ascending.
std::vector<std::pair<double, int>> eigenvalue_clusters(const SymMatrix& m,
                                                        double reltol = 1e-8);
int distinct_eigenvalue_count(const SymMatrix& m, double reltol = 1e-8);

// Strong Spectral Property of M with respect to pattern graph g: the only
// symmetric X with zero diagonal, zero on edges of g, and MX = XM is X = 0.
// Decided by the singular values of the commutator system: yes if
// sigma_min > 1e-6 * sigma_max, no if sigma_min < 1e-10 * sigma_max,
// indeterminate between. With no free off-diagonal positions the property
// holds vacuously.
Tristate verify_ssp(const SymMatrix& m, const Graph& g);

// B B^T = I and B^T B = I including scale (exact decision in exact mode).
bool block_orthogonal(const Block& b, double tol = 1e-10);

}  // namespace qtwo
