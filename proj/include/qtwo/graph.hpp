#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtwo {

// Simple undirected graph on vertices 0..n-1, adjacency stored as bitset
// rows (multiple 64-bit words per row, so n is not capped at 64).
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int size() const;  // number of edges

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const {
    return bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63) & 1;
  }

  int degree(int u) const;
  std::vector<int> neighbors(int u) const;
  std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

  int common_neighbor_count(int u, int v) const;
  std::vector<int> common_neighbors(int u, int v) const;

  bool is_regular(int r) const;
  bool is_connected() const;

  // BFS distances from src; unreachable vertices get -1.
  std::vector<int> distances(int src) const;
  // Largest finite distance, or -1 if the graph is disconnected or empty.
  int diameter() const;

  // Proper 2-coloring (colors 0/1) if the graph is bipartite.
  std::optional<std::vector<int>> bipartition() const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }

private:
  void check_vertex(int u) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Relabels vertices: edge (u,v) becomes (perm[u], perm[v]); perm must be a
// permutation of 0..n-1.
Graph permuted(const Graph& g, const std::vector<int>& perm);

// Cartesian product. Vertex (u in g, v in h) gets index u * h.order() + v;
// (u,v) ~ (u',v') iff (u = u' and v ~ v') or (v = v' and u ~ u').
Graph cartesian_product(const Graph& g, const Graph& h);

// Joined duplication of vertex v: appends a new vertex adjacent to v and to
// every neighbor of v.
Graph joined_duplicate(const Graph& g, int v);

// Contracts the edge (u,v): v merges into u, the loop is dropped, parallel
// edges collapse, and vertices above v shift down by one index.
Graph contract_edge(const Graph& g, int u, int v);

// BFS level structure from a root vertex.
struct DistancePartition {
  int origin = 0;
  int eccentricity = 0;
  std::vector<std::vector<int>> levels;  // levels[d] = vertices at distance d
  std::vector<int> pred_count;           // neighbors one level closer, per vertex
};

// Throws std::domain_error if g is disconnected.
DistancePartition distance_partition(const Graph& g, int origin);

// Exact maximum independent set size (branch and bound; intended for the
// small graphs handled here, order <= ~40).
int independence_number(const Graph& g);

}  // namespace qtwo
