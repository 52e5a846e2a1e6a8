#include "qtwo/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "qtwo/isomorphism.hpp"

namespace qtwo {

namespace {

struct Enumerator {
  int n, r;
  std::vector<std::vector<char>> adj;
  std::vector<int> deg;
  std::unordered_set<std::string> seen;
  std::vector<Graph> out;

  Enumerator(int n, int r)
      : n(n), r(r), adj(n, std::vector<char>(n, 0)), deg(n, 0) {}

  void leaf() {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adj[u][v]) g.add_edge(u, v);
    if (!g.is_connected()) return;
    auto canon = canonical_labeling(g);
    if (seen.insert(canon.form).second) out.push_back(permuted(g, canon.perm));
  }

  // Completes vertex v by picking its remaining neighbors among higher
  // vertices; edges (u, w) with u < w are decided at row u, so deg(v) is
  // final when the row is done.
  void extend(int v) {
    if (v == n) {
      leaf();
      return;
    }
    int need = r - deg[v];
    if (need == 0) {
      extend(v + 1);
      return;
    }
    if (need < 0) return;
    std::vector<int> cand;
    for (int w = v + 1; w < n; ++w)
      if (deg[w] < r) cand.push_back(w);
    if (static_cast<int>(cand.size()) < need) return;
    choose(v, need, cand, 0);
  }

  bool feasible(int v) const {
    // Every later vertex must still be able to reach degree r using rows
    // after v; vertex w can gain at most n - 2 - v more edges.
    for (int w = v + 1; w < n; ++w)
      if (deg[w] + (n - 2 - v) < r) return false;
    return true;
  }

  void choose(int v, int need, const std::vector<int>& cand, int start) {
    if (need == 0) {
      if (feasible(v)) extend(v + 1);
      return;
    }
    if (static_cast<int>(cand.size()) - start < need) return;
    for (int i = start; i < static_cast<int>(cand.size()); ++i) {
      int w = cand[i];
      if (deg[w] >= r) continue;
      adj[v][w] = adj[w][v] = 1;
      ++deg[v];
      ++deg[w];
      choose(v, need - 1, cand, i + 1);
      adj[v][w] = adj[w][v] = 0;
      --deg[v];
      --deg[w];
    }
  }
};

}  // namespace

std::vector<Graph> enumerate_regular(int n, int r) {
  if (n > 12) throw std::domain_error("enumeration supported up to order 12");
  if (n < 1 || r < 0 || r >= n || (n * r) % 2 != 0)
    throw std::domain_error("no r-regular graphs for these parameters");
  if (r == 0) {
    if (n != 1) return {};
    return {Graph(1)};
  }
  Enumerator e(n, r);
  for (int w = 1; w <= r; ++w) {
    e.adj[0][w] = e.adj[w][0] = 1;
    ++e.deg[0];
    ++e.deg[w];
  }
  e.extend(1);
  // Representatives are already canonically labeled; sort by their forms.
  std::vector<std::pair<std::string, Graph>> keyed;
  keyed.reserve(e.out.size());
  for (auto& g : e.out) keyed.emplace_back(canonical_form(g), std::move(g));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& [form, g] : keyed) out.push_back(std::move(g));
  return out;
}

}  // namespace qtwo
