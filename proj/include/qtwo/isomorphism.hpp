#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtwo/graph.hpp"

namespace qtwo {

// Canonical labeling by individualization-refinement: color refinement
// (1-dimensional Weisfeiler-Leman) alternating with branching on every
// vertex of the first smallest non-singleton color class; the canonical
// form is the lexicographically smallest upper-triangle adjacency string
// over all discrete leaves. Isomorphic graphs get equal forms. Intended
// for the small graphs handled here (order <= ~20, low degree).
struct CanonicalLabeling {
  std::vector<int> perm;  // old label -> canonical label
  std::string form;       // '0'/'1' upper triangle, column-major
};

CanonicalLabeling canonical_labeling(const Graph& g);
std::string canonical_form(const Graph& g);

// Explicit isomorphism a -> b (perm with permuted(a, perm) == b), if any.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace qtwo
