#pragma once

#include <vector>

#include "qtwo/graph.hpp"

namespace qtwo {

// All connected r-regular graphs on n vertices, one canonical representative
// per isomorphism class, sorted by canonical form (deterministic output).
// The search fixes N(0) = {1..r} and completes one vertex at a time, which
// visits every isomorphism class at least once; duplicates are removed via
// canonical forms. Throws std::domain_error for n > 12 (the intended range)
// or infeasible (n, r).
std::vector<Graph> enumerate_regular(int n, int r);

}  // namespace qtwo
