#include "qtwo/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qtwo {

namespace {

// Refines the coloring until stable: vertices are recolored by the pair
// (current color, sorted multiset of neighbor colors). Colors stay
// contiguous 0..k-1 and the partition only ever gets finer.
void refine(const Graph& g, std::vector<int>& color) {
  int n = g.order();
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s;
      s.push_back(color[v]);
      for (int w : g.neighbors(v)) s.push_back(color[w]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a].first < sig[b].first; });
    std::vector<int> nc(n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++k;
      nc[order[i]] = k;
    }
    int oldk = *std::max_element(color.begin(), color.end());
    if (k == oldk) return;  // class count unchanged -> stable
    color = std::move(nc);
  }
}

std::string adjacency_string(const Graph& g, const std::vector<int>& perm) {
  int n = g.order();
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[perm[v]] = v;
  std::string s;
  s.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      s += g.has_edge(inv[i], inv[j]) ? '1' : '0';
  return s;
}

struct Canonizer {
  const Graph& g;
  int n;
  bool have_best = false;
  CanonicalLabeling best;

  void descend(std::vector<int> color) {
    refine(g, color);
    // First smallest non-singleton class, by (size, color value).
    int k = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<int> count(k, 0);
    for (int c : color) ++count[c];
    int target = -1;
    for (int c = 0; c < k; ++c)
      if (count[c] > 1 && (target < 0 || count[c] < count[target])) target = c;
    if (target < 0) {
      // Discrete coloring: color values are a permutation of 0..n-1.
      std::string form = adjacency_string(g, color);
      if (!have_best || form < best.form) {
        best = {color, std::move(form)};
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      std::vector<int> child = color;
      // Individualize v: give it a fresh color below its old class.
      for (int& c : child)
        if (c >= target) ++c;
      child[v] = target;
      descend(std::move(child));
    }
  }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  Canonizer cz{g, g.order()};
  if (g.order() == 0) return {{}, ""};
  cz.descend(std::vector<int>(g.order(), 0));
  return cz.best;
}

std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  auto ca = canonical_labeling(a);
  auto cb = canonical_labeling(b);
  if (ca.form != cb.form) return std::nullopt;
  int n = a.order();
  std::vector<int> binv(n);
  for (int v = 0; v < n; ++v) binv[cb.perm[v]] = v;
  std::vector<int> map(n);
  for (int v = 0; v < n; ++v) map[v] = binv[ca.perm[v]];
  if (!(permuted(a, map) == b))
    throw std::logic_error("canonical labelings disagree with composed map");
  return map;
}

}  // namespace qtwo
