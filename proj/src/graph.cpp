#include "qtwo/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace qtwo {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw std::domain_error("graph order must be non-negative");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_)
    throw std::out_of_range("vertex " + std::to_string(u) +
                            " outside graph of order " + std::to_string(n_));
}

int Graph::size() const {
  int total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return total / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::domain_error("loops are not allowed");
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(int u) const {
  check_vertex(u);
  int d = 0;
  for (int w = 0; w < words_; ++w)
    d += std::popcount(bits_[static_cast<std::size_t>(u) * words_ + w]);
  return d;
}

std::vector<int> Graph::neighbors(int u) const {
  check_vertex(u);
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (has_edge(u, v)) out.push_back(v);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

int Graph::common_neighbor_count(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  int c = 0;
  for (int w = 0; w < words_; ++w)
    c += std::popcount(bits_[static_cast<std::size_t>(u) * words_ + w] &
                       bits_[static_cast<std::size_t>(v) * words_ + w]);
  return c;
}

std::vector<int> Graph::common_neighbors(int u, int v) const {
  std::vector<int> out;
  for (int w = 0; w < n_; ++w)
    if (has_edge(u, w) && has_edge(v, w)) out.push_back(w);
  return out;
}

bool Graph::is_regular(int r) const {
  for (int u = 0; u < n_; ++u)
    if (degree(u) != r) return false;
  return true;
}

std::vector<int> Graph::distances(int src) const {
  check_vertex(src);
  std::vector<int> dist(n_, -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < n_; ++v)
      if (has_edge(u, v) && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  auto d = distances(0);
  for (int x : d)
    if (x < 0) return false;
  return true;
}

int Graph::diameter() const {
  if (n_ == 0) return -1;
  int diam = 0;
  for (int u = 0; u < n_; ++u) {
    auto d = distances(u);
    for (int x : d) {
      if (x < 0) return -1;
      if (x > diam) diam = x;
    }
  }
  return diam;
}

std::optional<std::vector<int>> Graph::bipartition() const {
  std::vector<int> color(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n_; ++v) {
        if (!has_edge(u, v)) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::domain_error("permutation size does not match graph order");
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  int ng = g.order(), nh = h.order();
  Graph out(ng * nh);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) {
      for (int v2 = v + 1; v2 < nh; ++v2)
        if (h.has_edge(v, v2)) out.add_edge(u * nh + v, u * nh + v2);
      for (int u2 = u + 1; u2 < ng; ++u2)
        if (g.has_edge(u, u2)) out.add_edge(u * nh + v, u2 * nh + v);
    }
  return out;
}

Graph joined_duplicate(const Graph& g, int v) {
  int n = g.order();
  Graph out(n + 1);
  for (auto [a, b] : g.edges()) out.add_edge(a, b);
  for (int w : g.neighbors(v)) out.add_edge(n, w);
  out.add_edge(n, v);
  return out;
}

Graph contract_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::domain_error("contract_edge needs an edge");
  Graph out(g.order() - 1);
  auto shift = [&](int w) { return w < v ? w : w - 1; };
  int merged = shift(u);
  for (auto [a, b] : g.edges()) {
    int a2 = a == v ? merged : shift(a);
    int b2 = b == v ? merged : shift(b);
    if (a2 != b2) out.add_edge(a2, b2);
  }
  return out;
}

DistancePartition distance_partition(const Graph& g, int origin) {
  std::vector<int> dist = g.distances(origin);
  DistancePartition p;
  p.origin = origin;
  p.pred_count.assign(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    if (dist[v] < 0) throw std::domain_error("distance partition needs a connected graph");
    p.eccentricity = std::max(p.eccentricity, dist[v]);
  }
  p.levels.assign(p.eccentricity + 1, {});
  for (int v = 0; v < g.order(); ++v) {
    p.levels[dist[v]].push_back(v);
    for (int w : g.neighbors(v))
      if (dist[w] == dist[v] - 1) ++p.pred_count[v];
  }
  return p;
}

namespace {

struct MisState {
  const Graph* g;
  int n;
  int best = 0;

  int count(const std::vector<char>& cand) const {
    int c = 0;
    for (char x : cand) c += x;
    return c;
  }

  void run(std::vector<char>& cand, int cur) {
    int remaining = count(cand);
    if (cur + remaining <= best) return;
    if (remaining == 0) {
      best = cur;
      return;
    }
    // Branch on the candidate vertex with the most candidate neighbors.
    int pick = -1, pickdeg = -1;
    for (int v = 0; v < n; ++v) {
      if (!cand[v]) continue;
      int d = 0;
      for (int w = 0; w < n; ++w)
        if (cand[w] && g->has_edge(v, w)) ++d;
      if (d > pickdeg) {
        pickdeg = d;
        pick = v;
      }
    }
    std::vector<char> inc = cand;
    inc[pick] = 0;
    for (int w = 0; w < n; ++w)
      if (g->has_edge(pick, w)) inc[w] = 0;
    run(inc, cur + 1);
    cand[pick] = 0;
    run(cand, cur);
  }
};

}  // namespace

int independence_number(const Graph& g) {
  MisState st{&g, g.order()};
  std::vector<char> cand(g.order(), 1);
  st.run(cand, 0);
  return st.best;
}

}  // namespace qtwo
