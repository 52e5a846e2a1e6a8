#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtwo/graph.hpp"
#include "qtwo/symmatrix.hpp"

namespace qtwo {

// ---- closed-form constructions -------------------------------------------

// I - (2/n) J: exact involution whose pattern is K_n (n >= 1).
SymMatrix complete_involution(int n);

// Integer matrix W on 2k vertices with W^2 = 4I whose pattern is the closed
// candle H_k, in the closed_candle(k) labeling (k >= 4; both parities).
SymMatrix candle_matrix(int k);
// (1/2) W: the involution witness itself.
SymMatrix candle_witness(int k);

// [[0, B], [B^T, 0]] for square B with B B^T = B^T B = I. The result is an
// involution with zero diagonal; row block first, column block second.
SymMatrix bipartite_lift_zero_diag(const Block& b);

// (1/sqrt 2) [[I, B], [B^T, -I]] for square B with B B^T = B^T B = I.
SymMatrix bipartite_lift_half_identity(const Block& b);

// Involution for G x K_2 from an involution M for G:
//   N = (1/sqrt 2) [[M, I], [I, -M]]
// interleaved so vertex (g, e) gets index 2g + e, matching the labeling of
// cartesian_product(g, K_2). M's own scale is folded into the entries.
SymMatrix product_lift(const SymMatrix& m);

// Kronecker sum A x I + I x B of the K_m and K_n involutions. Its pattern
// is K_m box K_n (vertex (i,j) gets index i*n + j) and its spectrum is
// {2, 0, -2}, so it certifies q <= 3 for that product.
SymMatrix kronecker_sum_3ev(int m, int n);

// ---- stored catalog --------------------------------------------------------

// Directory holding catalog data: $QTWO_DATA_DIR if set, else the path baked
// in at configure time.
std::string data_dir();

// Keys of the stored matrices under <data_dir>/catalog/<key>.json.
const std::vector<std::string>& catalog_keys();

struct CatalogEntry {
  std::string name;    // catalog key
  std::string kind;    // "witness", "edge-deleted-ssp", or "quotient"
  std::string source;  // how the matrix was obtained
  Graph graph;         // pattern graph of the matrix
  SymMatrix matrix;    // verified involution fitting that pattern
};

// Loads a catalog entry and re-verifies the involution and pattern; throws
// std::runtime_error if the file is missing or fails verification.
CatalogEntry catalog_entry(const std::string& key);
SymMatrix catalog_matrix(const std::string& key);

// ---- dispatch ---------------------------------------------------------------

// Relabels m so that its pattern becomes exactly target; throws
// std::invalid_argument if the pattern is not isomorphic to target.
SymMatrix fit_to(const SymMatrix& m, const Graph& target);

struct Witness {
  std::string name;   // the build_named key this certifies
  Graph graph;        // build_named(name)
  SymMatrix matrix;   // involution whose pattern equals graph
  std::string source;
};

// Verified two-eigenvalue witness for the named graph, or nullopt when this
// name is not known to satisfy q = 2. Names follow the build_named grammar.
std::optional<Witness> witness_for(const std::string& name);

}  // namespace qtwo
