#include "qtwo/graph6.hpp"

#include <stdexcept>

namespace qtwo {

namespace {

[[noreturn]] void fail(std::size_t offset, const std::string& what) {
  throw std::runtime_error("graph6: " + what + " at byte " +
                           std::to_string(offset));
}

}  // namespace

Graph graph6_decode(const std::string& s) {
  if (s.empty()) throw std::runtime_error("graph6: empty string");
  if (s[0] == ':') fail(0, "sparse6 input not supported");
  if (s[0] == '~') fail(0, "extended order field not supported");
  if (s[0] < 63 || s[0] > 126) fail(0, "byte outside printable range 63..126");
  int n = s[0] - 63;
  Graph g(n);
  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (s.size() != 1 + nbytes)
    throw std::runtime_error("graph6: expected " + std::to_string(1 + nbytes) +
                             " bytes for order " + std::to_string(n) + ", got " +
                             std::to_string(s.size()));
  std::size_t bit = 0;
  int u = 0, v = 1;
  for (std::size_t i = 1; i < s.size(); ++i) {
    char c = s[i];
    if (c < 63 || c > 126) fail(i, "byte outside printable range 63..126");
    int group = c - 63;
    for (int b = 5; b >= 0; --b, ++bit) {
      int x = group >> b & 1;
      if (bit >= nbits) {
        if (x) fail(i, "nonzero padding bit");
        continue;
      }
      if (x) g.add_edge(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return g;
}

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  if (n > 62)
    throw std::domain_error("graph6 encoding limited to order <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int group = 0, nb = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      group = group << 1 | (g.has_edge(u, v) ? 1 : 0);
      if (++nb == 6) {
        out += static_cast<char>(group + 63);
        group = 0;
        nb = 0;
      }
    }
  if (nb > 0) out += static_cast<char>((group << (6 - nb)) + 63);
  return out;
}

}  // namespace qtwo
