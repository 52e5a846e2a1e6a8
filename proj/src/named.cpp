#include "qtwo/named.hpp"

#include <initializer_list>
#include <stdexcept>

namespace qtwo {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::domain_error("cycle needs at least 3 vertices");
  Graph g(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

Graph path(int n) {
  if (n < 1) throw std::domain_error("path needs at least 1 vertex");
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph hypercube(int d) {
  if (d < 0 || d > 20) throw std::domain_error("hypercube dimension out of range");
  Graph g(1 << d);
  for (int u = 0; u < (1 << d); ++u)
    for (int b = 0; b < d; ++b)
      if (!(u >> b & 1)) g.add_edge(u, u | 1 << b);
  return g;
}

Graph circulant(int n, const std::vector<int>& conns) {
  Graph g(n);
  for (int c : conns) {
    int m = ((c % n) + n) % n;
    if (m == 0) throw std::domain_error("circulant connection is 0 mod n");
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + m) % n);
  }
  return g;
}

Graph closed_candle(int k) {
  if (k < 3) throw std::domain_error("closed candle needs k >= 3");
  int n = 2 * k;
  // Work with 1-based labels 1..2k, wrapping with wrap(x) in 1..2k.
  auto wrap = [n](int x) { return ((x - 1) % n + n) % n + 1; };
  Graph g(n);
  auto add = [&](int a, int b) {
    if (!g.has_edge(a - 1, b - 1)) g.add_edge(a - 1, b - 1);
  };
  for (int i = 1; i <= n; i += 2) {
    add(i, wrap(i + 2));  // odd cycle
    add(i, wrap(i + 3));  // cross edge
    add(i, wrap(i - 1));  // cross edge
  }
  for (int i = 2; i <= n; i += 2) add(i, wrap(i + 2));  // even cycle
  return g;
}

Graph candle_section(int t) {
  if (t < 1) throw std::domain_error("candle section needs t >= 1");
  Graph g(2 * t);
  for (int i = 0; i + 1 < t; ++i) {
    int u = 2 * i, v = 2 * i + 1, un = 2 * (i + 1), vn = 2 * (i + 1) + 1;
    g.add_edge(u, un);
    g.add_edge(v, vn);
    g.add_edge(un, v);
    g.add_edge(u, vn);
  }
  return g;
}

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> es) {
  Graph g(n);
  for (auto [u, v] : es) g.add_edge(u, v);
  return g;
}

Graph sporadic(const std::string& name) {
  if (name == "R6_1") return closed_candle(3);
  if (name == "R7_1") return circulant(7, {1, 2});
  if (name == "R7_2") {
    Graph g = complete_bipartite(4, 3);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    return g;
  }
  if (name == "R8_1") return closed_candle(4);
  if (name == "R8_2")
    return from_edges(8, {{0, 1}, {0, 2}, {0, 5}, {0, 7}, {1, 2}, {1, 4},
                          {1, 7}, {2, 3}, {2, 6}, {3, 4}, {3, 5}, {3, 7},
                          {4, 5}, {4, 6}, {5, 6}, {6, 7}});
  if (name == "R8_3")
    return from_edges(8, {{0, 1}, {0, 3}, {0, 4}, {0, 7}, {1, 2}, {1, 4},
                          {1, 5}, {2, 3}, {2, 5}, {2, 6}, {3, 6}, {3, 7},
                          {4, 6}, {4, 7}, {5, 6}, {5, 7}});
  if (name == "R8_4") {
    // Joined duplication of the last vertex of the 7-vertex contraction.
    Graph c = from_edges(7, {{0, 1}, {0, 4}, {0, 6}, {1, 2}, {1, 3}, {1, 4},
                             {2, 3}, {2, 6}, {3, 4}, {3, 5}, {4, 5}, {5, 6}});
    return joined_duplicate(c, 6);
  }
  if (name == "R8_5") return cartesian_product(complete(4), complete(2));
  if (name == "R8_6") return circulant(8, {1, 2});
  if (name == "R9_1") {
    Graph g = cycle(9);
    for (int s = 0; s < 3; ++s) {
      g.add_edge(s, s + 3);
      g.add_edge(s + 3, s + 6);
      g.add_edge(s, s + 6);
    }
    return g;
  }
  if (name == "R9_2")
    // The unique connected 4-regular diameter-2 graph on 9 vertices, other
    // than R9_1 and R9_3, in which no two vertices at distance 2 have a
    // unique common neighbor (see tests for the defining properties).
    return from_edges(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 5},
                          {1, 6}, {2, 7}, {2, 8}, {3, 4}, {3, 5}, {3, 7},
                          {4, 6}, {4, 8}, {5, 6}, {5, 8}, {6, 7}, {7, 8}});
  if (name == "R9_3")
    // Union of the six triangles {0,1,2},{3,4,8},{5,6,7},{0,7,8},{1,4,5},
    // {2,3,6}; isomorphic to K3 box K3.
    return from_edges(9, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 8}, {4, 8},
                          {5, 6}, {5, 7}, {6, 7}, {0, 7}, {0, 8}, {7, 8},
                          {1, 4}, {1, 5}, {4, 5}, {2, 3}, {2, 6}, {3, 6}});
  if (name == "R10_1") return closed_candle(5);
  if (name == "R10_2")
    return from_edges(10, {{0, 1}, {0, 4}, {0, 7}, {0, 9}, {1, 2}, {1, 5},
                           {1, 8}, {2, 3}, {2, 6}, {2, 9}, {3, 4}, {3, 7},
                           {3, 8}, {4, 5}, {4, 9}, {5, 6}, {5, 8}, {6, 7},
                           {6, 9}, {7, 8}});
  if (name == "R10_3")
    return from_edges(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                           {1, 4}, {5, 6}, {5, 7}, {5, 8}, {5, 9}, {6, 7},
                           {6, 8}, {6, 9}, {2, 7}, {2, 9}, {3, 7}, {3, 8},
                           {4, 8}, {4, 9}});
  if (name == "R10_4") return circulant(10, {1, 3});
  if (name == "R12_1") {
    Graph g = cycle(8);
    Graph out(12);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int w : {0, 2, 4, 6}) {
      out.add_edge(8, w);
      out.add_edge(10, w);
    }
    for (int w : {1, 3, 5, 7}) {
      out.add_edge(9, w);
      out.add_edge(11, w);
    }
    return out;
  }
  if (name == "R12_2")
    return from_edges(12, {{0, 1},  {0, 2},  {0, 3},  {0, 4},  {5, 1},  {5, 2},
                           {5, 3},  {5, 10}, {6, 1},  {6, 4},  {6, 10}, {6, 11},
                           {7, 1},  {7, 4},  {7, 10}, {7, 11}, {8, 2},  {8, 3},
                           {8, 10}, {8, 11}, {9, 2},  {9, 3},  {9, 4},  {9, 11}});
  if (name == "R12_3") return circulant(12, {1, 3});
  if (name == "R14_1")
    return from_edges(14, {{0, 7},  {0, 9},  {0, 12}, {0, 13}, {1, 7},  {1, 8},
                           {1, 10}, {1, 13}, {2, 7},  {2, 8},  {2, 9},  {2, 11},
                           {3, 8},  {3, 9},  {3, 10}, {3, 12}, {4, 9},  {4, 10},
                           {4, 11}, {4, 13}, {5, 7},  {5, 10}, {5, 11}, {5, 12},
                           {6, 8},  {6, 11}, {6, 12}, {6, 13}});
  throw std::invalid_argument("unknown graph name: " + name);
}

// Compact family atom: K5, K3,3, C4, P3, Q3, H4, ...
Graph parse_atom(const std::string& atom) {
  if (atom.size() < 2) throw std::invalid_argument("bad graph atom: " + atom);
  char kind = atom[0];
  std::string rest = atom.substr(1);
  auto comma = rest.find(',');
  if (comma != std::string::npos) {
    if (kind != 'K') throw std::invalid_argument("bad graph atom: " + atom);
    return complete_bipartite(std::stoi(rest.substr(0, comma)),
                              std::stoi(rest.substr(comma + 1)));
  }
  int n = std::stoi(rest);
  switch (kind) {
    case 'K': return complete(n);
    case 'C': return cycle(n);
    case 'P': return path(n);
    case 'Q': return hypercube(n);
    case 'H': return closed_candle(n);
    default: throw std::invalid_argument("bad graph atom: " + atom);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

}  // namespace

const std::vector<std::string>& sporadic_names() {
  static const std::vector<std::string> names = {
      "R6_1", "R7_1", "R7_2", "R8_1",  "R8_2",  "R8_3",  "R8_4",
      "R8_5", "R8_6", "R9_1", "R9_2",  "R9_3",  "R10_1", "R10_2",
      "R10_3", "R10_4", "R12_1", "R12_2", "R12_3", "R14_1"};
  return names;
}

Graph build_named(const std::string& name) {
  if (!name.empty() && name[0] == 'R' && name.find('_') != std::string::npos)
    return sporadic(name);
  auto parts = split(name, ':');
  try {
    if (parts.size() == 2 && parts[0] == "K") {
      auto comma = parts[1].find(',');
      if (comma != std::string::npos)
        return complete_bipartite(std::stoi(parts[1].substr(0, comma)),
                                  std::stoi(parts[1].substr(comma + 1)));
      return complete(std::stoi(parts[1]));
    }
    if (parts.size() == 2 && parts[0] == "C") return cycle(std::stoi(parts[1]));
    if (parts.size() == 2 && parts[0] == "P") return path(std::stoi(parts[1]));
    if (parts.size() == 2 && parts[0] == "Q") return hypercube(std::stoi(parts[1]));
    if (parts.size() == 2 && parts[0] == "H") return closed_candle(std::stoi(parts[1]));
    if (parts.size() >= 3 && parts[0] == "circ") {
      int n = std::stoi(parts[1]);
      std::vector<int> conns;
      for (std::size_t i = 2; i < parts.size(); ++i)
        conns.push_back(std::stoi(parts[i]));
      return circulant(n, conns);
    }
    if (parts.size() == 3 && parts[0] == "prod")
      return cartesian_product(parse_atom(parts[1]), parse_atom(parts[2]));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown graph name: " + name);
  }
  throw std::invalid_argument("unknown graph name: " + name);
}

}  // namespace qtwo
