#pragma once

#include <vector>

#include "qtwo/graph.hpp"

// Reference implementations kept deliberately naive and separate from the
// library code paths they are compared against.
namespace oracle {

// Connected r-regular isomorphism classes on n vertices, counted by
// exhaustive backtracking over adjacency choices plus minimum-over-all-
// permutations canonical forms. Intended for n <= 8.
int count_connected_regular(int n, int r);

// BFS distances with a plain queue over neighbor lists; -1 if unreachable.
std::vector<int> bfs_distances(const qtwo::Graph& g, int src);

// Common neighbors of u and v by direct scan over all vertices.
std::vector<int> common_neighbors(const qtwo::Graph& g, int u, int v);

// Objective of the involution search computed with plain loops:
// ||M^2 - I||_F^2 plus the edge-floor penalty mu * sum max(0, eps - |m_e|)^2.
double objective(const qtwo::Graph& g, const std::vector<double>& x, double mu,
                 double eps);

// Central-difference gradient of the same objective.
std::vector<double> gradient_fd(const qtwo::Graph& g,
                                const std::vector<double>& x, double mu,
                                double eps, double h);

}  // namespace oracle
