#pragma once

#include <string>
#include <vector>

#include "qtwo/graph.hpp"

namespace qtwo {

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph cycle(int n);
Graph path(int n);
Graph hypercube(int d);
// Circulant C(n, +-c_1, ..., +-c_m); connection values taken mod n.
Graph circulant(int n, const std::vector<int>& conns);

// Closed candle on 2k vertices (k >= 3): two k-cycles -- one on the
// odd-labeled vertices 1,3,...,2k-1, one on the even-labeled 2,4,...,2k
// (labels here are 1-based; subtract 1 for vertex indices) -- plus the
// cross edges {i, i+3} and {i, i-1} from each odd i to even labels,
// all arithmetic wrapping in 1..2k. Isomorphic to C(2k, +-1, +-(k-1)).
Graph closed_candle(int k);

// Open candle section on 2t vertices: rungs u_i = 2i, v_i = 2i+1
// (0-based, i = 0..t-1), with edges u_i u_{i+1}, v_i v_{i+1},
// u_{i+1} v_i, u_i v_{i+1}.
Graph candle_section(int t);

// Names of the twenty sporadic graphs R6_1 .. R14_1.
const std::vector<std::string>& sporadic_names();

// Builds a graph from a name. Grammar:
//   "K:n", "C:n", "P:n", "Q:d", "H:k"        families
//   "K:a,b"                                  complete bipartite
//   "circ:n:c1:c2:..."                       circulant
//   "prod:ATOM:ATOM"                         Cartesian product, where ATOM
//                                            is a compact family name like
//                                            K5, K3,3, C4, P3, Q3, H4
//   "R6_1" ... "R14_1"                       sporadic graphs
// Throws std::invalid_argument for anything else.
Graph build_named(const std::string& name);

}  // namespace qtwo
