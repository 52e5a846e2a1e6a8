#include "qtwo/witnesses.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "qtwo/checks.hpp"
#include "qtwo/graph6.hpp"
#include "qtwo/isomorphism.hpp"
#include "qtwo/matrix_json.hpp"
#include "qtwo/named.hpp"

#ifndef QTWO_DATA_DIR_DEFAULT
#define QTWO_DATA_DIR_DEFAULT "data"
#endif

namespace qtwo {

SymMatrix complete_involution(int n) {
  if (n < 1) throw std::invalid_argument("complete_involution needs n >= 1");
  SymMatrix m(n, EntryMode::Exact);
  Rational off(-2, n);
  for (int i = 0; i < n; ++i) {
    m.set_x(i, i, QuadElem(Rational(1) + off));
    for (int j = i + 1; j < n; ++j) m.set_x(i, j, QuadElem(off));
  }
  return m;
}

namespace {

// 2x2 cell types used by the candle construction. R and S annihilate or
// complete each other so that every diagonal block of W^2 sums to 4I:
// R^2 + J^2 = 2J + S S^T = S^T S + R^2 = S S^T + S^T S = 4I, and all the
// mixed products J R, R J, J S, S^T J, S R, R S^T, S^2 vanish.
constexpr int kR[2][2] = {{-1, 1}, {1, -1}};
constexpr int kS[2][2] = {{1, 1}, {-1, -1}};
constexpr int kSt[2][2] = {{1, -1}, {1, -1}};
constexpr int kJ[2][2] = {{1, 1}, {1, 1}};

// Writes cell (2x2 integer block) into block position (bi, bj), 1-based,
// bi < bj; the symmetric storage supplies the transposed lower block.
void put_cell(SymMatrix& m, int bi, int bj, const int cell[2][2]) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      m.set_x(2 * (bi - 1) + a, 2 * (bj - 1) + b, QuadElem(cell[a][b]));
}

}  // namespace

SymMatrix candle_matrix(int k) {
  if (k < 4) throw std::invalid_argument("candle_matrix needs k >= 4");
  SymMatrix m(2 * k, EntryMode::Exact);
  if (k % 2 == 0) {
    for (int i = 1; i <= k - 1; i += 2) put_cell(m, i, i + 1, kR);
    for (int i = 2; i <= k - 2; i += 2) put_cell(m, i, i + 1, kJ);
    put_cell(m, 1, k, kJ);
  } else {
    for (int i = 1; i <= k - 4; i += 2) put_cell(m, i, i + 1, kJ);
    for (int i = 2; i <= k - 5; i += 2) put_cell(m, i, i + 1, kR);
    put_cell(m, k - 2, k - 1, kR);
    put_cell(m, 1, k, kS);
    put_cell(m, k - 3, k - 2, kS);
    put_cell(m, k - 1, k, kSt);
  }
  return m;
}

SymMatrix candle_witness(int k) {
  SymMatrix m = candle_matrix(k);
  m.set_scale(Scale{Rational(1, 2), 1});
  return m;
}

SymMatrix bipartite_lift_zero_diag(const Block& b) {
  if (b.rows() != b.cols())
    throw std::invalid_argument("bipartite lift needs a square block");
  if (!block_orthogonal(b))
    throw std::invalid_argument("bipartite lift needs B B^T = B^T B = I");
  int r = b.rows();
  SymMatrix m(2 * r, b.mode());
  m.set_scale(b.scale());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (b.mode() == EntryMode::Exact)
        m.set_x(i, r + j, b.x(i, j));
      else
        m.set_f(i, r + j, b.f(i, j));
    }
  return m;
}

SymMatrix bipartite_lift_half_identity(const Block& b) {
  if (b.rows() != b.cols())
    throw std::invalid_argument("bipartite lift needs a square block");
  if (!block_orthogonal(b))
    throw std::invalid_argument("bipartite lift needs B B^T = B^T B = I");
  int r = b.rows();
  SymMatrix m(2 * r, b.mode());
  m.set_scale(Scale{Rational(1, 2), 2});  // 1/sqrt(2)
  if (b.mode() == EntryMode::Exact) {
    QuadElem s = b.scale().to_quad();
    for (int i = 0; i < r; ++i) {
      m.set_x(i, i, QuadElem(1));
      m.set_x(r + i, r + i, QuadElem(-1));
      for (int j = 0; j < r; ++j) m.set_x(i, r + j, s * b.x(i, j));
    }
  } else {
    for (int i = 0; i < r; ++i) {
      m.set_f(i, i, 1);
      m.set_f(r + i, r + i, -1);
      for (int j = 0; j < r; ++j) m.set_f(i, r + j, b.value(i, j));
    }
  }
  return m;
}

SymMatrix product_lift(const SymMatrix& m) {
  int n = m.order();
  SymMatrix out(2 * n, m.mode());
  out.set_scale(Scale{Rational(1, 2), 2});  // 1/sqrt(2)
  if (m.mode() == EntryMode::Exact) {
    QuadElem s = m.scale().to_quad();
    for (int g = 0; g < n; ++g) {
      QuadElem x = s * m.x(g, g);
      out.set_x(2 * g, 2 * g, x);
      out.set_x(2 * g + 1, 2 * g + 1, -x);
      out.set_x(2 * g, 2 * g + 1, QuadElem(1));
      for (int h = g + 1; h < n; ++h) {
        QuadElem y = s * m.x(g, h);
        out.set_x(2 * g, 2 * h, y);
        out.set_x(2 * g + 1, 2 * h + 1, -y);
      }
    }
  } else {
    for (int g = 0; g < n; ++g) {
      double x = m.value(g, g);
      out.set_f(2 * g, 2 * g, x);
      out.set_f(2 * g + 1, 2 * g + 1, -x);
      out.set_f(2 * g, 2 * g + 1, 1);
      for (int h = g + 1; h < n; ++h) {
        double y = m.value(g, h);
        out.set_f(2 * g, 2 * h, y);
        out.set_f(2 * g + 1, 2 * h + 1, -y);
      }
    }
  }
  return out;
}

SymMatrix kronecker_sum_3ev(int m, int n) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("kronecker_sum_3ev needs m, n >= 2");
  Rational am(-2, m), bn(-2, n);
  Rational diag = (Rational(1) + am) + (Rational(1) + bn);
  SymMatrix k(m * n, EntryMode::Exact);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      int v = i * n + j;
      k.set_x(v, v, QuadElem(diag));
      for (int i2 = i + 1; i2 < m; ++i2) k.set_x(v, i2 * n + j, QuadElem(am));
      for (int j2 = j + 1; j2 < n; ++j2) k.set_x(v, i * n + j2, QuadElem(bn));
    }
  return k;
}

std::string data_dir() {
  if (const char* env = std::getenv("QTWO_DATA_DIR")) return env;
  return QTWO_DATA_DIR_DEFAULT;
}

const std::vector<std::string>& catalog_keys() {
  static const std::vector<std::string> keys = {
      "M7_1",  "M8_2",  "M8_3",  "M8_4c", "M8_6",  "M10_2", "M12_3",
      "M14_1", "W6_1",  "W7_1",  "W8_4",  "W10_3", "W10_4"};
  return keys;
}

CatalogEntry catalog_entry(const std::string& key) {
  std::string path = data_dir() + "/catalog/" + key + ".json";
  nlohmann::json j = load_json_file(path);
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.kind = j.at("kind").get<std::string>();
  e.source = j.at("source").get<std::string>();
  e.graph = graph6_decode(j.at("graph6").get<std::string>());
  e.matrix = matrix_from_json(j.at("matrix"));
  if (e.matrix.order() != e.graph.order())
    throw std::runtime_error(path + ": matrix order does not match graph");
  if (!matrix_fits_pattern(e.matrix, e.graph))
    throw std::runtime_error(path + ": matrix does not fit the stored pattern");
  if (!verify_involution(e.matrix).pass)
    throw std::runtime_error(path + ": matrix is not an involution");
  return e;
}

SymMatrix catalog_matrix(const std::string& key) {
  return catalog_entry(key).matrix;
}

SymMatrix fit_to(const SymMatrix& m, const Graph& target) {
  Graph p = pattern_graph(m);
  if (p == target) return m;
  auto perm = find_isomorphism(p, target);
  if (!perm)
    throw std::invalid_argument(
        "matrix pattern is not isomorphic to the target graph");
  return m.permuted(*perm);
}

namespace {

// Two-eigenvalue witness for K_{n,n}: lift an n x n orthogonal block with no
// zero entries. n = 2 uses the Hadamard matrix (I - J would have zero
// diagonal); n >= 3 uses the K_n involution, whose entries are all nonzero.
SymMatrix balanced_bipartite_witness(int n) {
  Block b(n, n, EntryMode::Exact);
  if (n == 2) {
    b.set_scale(Scale{Rational(1, 2), 2});
    b.set_x(0, 0, QuadElem(1));
    b.set_x(0, 1, QuadElem(1));
    b.set_x(1, 0, QuadElem(1));
    b.set_x(1, 1, QuadElem(-1));
  } else {
    SymMatrix kn = complete_involution(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b.set_x(i, j, kn.x(std::min(i, j), std::max(i, j)));
  }
  return bipartite_lift_zero_diag(b);
}

SymMatrix hypercube_witness(int d) {
  SymMatrix m = complete_involution(2);
  for (int i = 1; i < d; ++i) m = product_lift(m);
  return m;
}

// Expands the compact product-atom names accepted by build_named.
std::optional<std::string> atom_to_name(const std::string& atom) {
  if (atom.size() >= 2 && (atom[0] == 'K' || atom[0] == 'C' || atom[0] == 'P' ||
                           atom[0] == 'Q' || atom[0] == 'H')) {
    return std::string(1, atom[0]) + ":" + atom.substr(1);
  }
  return std::nullopt;
}

std::optional<std::pair<SymMatrix, std::string>> matrix_for(
    const std::string& name);

// Witness for "prod:X:Y". Cartesian products with K_2 lift directly; C_4
// counts as K_2 box K_2 and lifts twice.
std::optional<std::pair<SymMatrix, std::string>> product_witness(
    const std::string& left, const std::string& right) {
  int lifts = 0;
  if (right == "K2") {
    lifts = 1;
  } else if (right == "C4") {
    lifts = 2;
  } else {
    return std::nullopt;
  }
  auto base_name = atom_to_name(left);
  if (!base_name) return std::nullopt;
  auto base = matrix_for(*base_name);
  if (!base) return std::nullopt;
  SymMatrix m = base->first;
  for (int i = 0; i < lifts; ++i) m = product_lift(m);
  return std::make_pair(m, base->second + " lifted through the product");
}

// The construction dispatch. Returns the matrix in its native labeling along
// with a description of the source; the caller aligns labels.
std::optional<std::pair<SymMatrix, std::string>> matrix_for(
    const std::string& name) {
  auto colon = name.find(':');
  std::string head = name.substr(0, colon == std::string::npos ? name.size() : colon);
  std::string rest = colon == std::string::npos ? "" : name.substr(colon + 1);

  if (head == "K" && !rest.empty()) {
    auto comma = rest.find(',');
    if (comma == std::string::npos) {
      int n = std::stoi(rest);
      if (n < 2) return std::nullopt;
      return std::make_pair(complete_involution(n), "complete-graph involution");
    }
    int a = std::stoi(rest.substr(0, comma));
    int b = std::stoi(rest.substr(comma + 1));
    if (a != b) return std::nullopt;
    if (a == 1)
      return std::make_pair(complete_involution(2), "complete-graph involution");
    return std::make_pair(balanced_bipartite_witness(a),
                          "orthogonal-block bipartite lift");
  }
  if (head == "C") {
    int n = std::stoi(rest);
    if (n == 3)
      return std::make_pair(complete_involution(3), "complete-graph involution");
    if (n == 4)
      return std::make_pair(balanced_bipartite_witness(2),
                            "orthogonal-block bipartite lift");
    return std::nullopt;
  }
  if (head == "P") {
    if (std::stoi(rest) != 2) return std::nullopt;
    return std::make_pair(complete_involution(2), "complete-graph involution");
  }
  if (head == "Q") {
    int d = std::stoi(rest);
    if (d < 1) return std::nullopt;
    return std::make_pair(hypercube_witness(d), "iterated product lift of K_2");
  }
  if (head == "H") {
    int k = std::stoi(rest);
    if (k == 3) return std::make_pair(catalog_matrix("W6_1"), "stored catalog");
    if (k >= 4) return std::make_pair(candle_witness(k), "candle construction");
    return std::nullopt;
  }
  if (head == "prod") {
    auto second = rest.find(':');
    if (second == std::string::npos) return std::nullopt;
    return product_witness(rest.substr(0, second), rest.substr(second + 1));
  }

  // Sporadic names.
  if (name == "R6_1") return std::make_pair(catalog_matrix("W6_1"), "stored catalog");
  if (name == "R7_1") return std::make_pair(catalog_matrix("W7_1"), "stored catalog");
  if (name == "R8_1") return std::make_pair(candle_witness(4), "candle construction");
  if (name == "R8_2") return std::make_pair(catalog_matrix("M8_2"), "stored catalog");
  if (name == "R8_3") return std::make_pair(catalog_matrix("M8_3"), "stored catalog");
  if (name == "R8_4") return std::make_pair(catalog_matrix("W8_4"), "stored catalog");
  if (name == "R8_5")
    return std::make_pair(product_lift(complete_involution(4)),
                          "product lift of the K_4 involution");
  if (name == "R8_6") return std::make_pair(catalog_matrix("M8_6"), "stored catalog");
  if (name == "R10_1") return std::make_pair(candle_witness(5), "candle construction");
  if (name == "R10_2") return std::make_pair(catalog_matrix("M10_2"), "stored catalog");
  if (name == "R10_3") return std::make_pair(catalog_matrix("W10_3"), "stored catalog");
  if (name == "R10_4") return std::make_pair(catalog_matrix("W10_4"), "stored catalog");
  if (name == "R12_3") return std::make_pair(catalog_matrix("M12_3"), "stored catalog");
  if (name == "R14_1") return std::make_pair(catalog_matrix("M14_1"), "stored catalog");
  return std::nullopt;
}

}  // namespace

std::optional<Witness> witness_for(const std::string& name) {
  Graph g = build_named(name);  // rejects names outside the grammar
  auto got = matrix_for(name);
  if (!got) return std::nullopt;
  Witness w;
  w.name = name;
  w.graph = g;
  w.matrix = fit_to(got->first, w.graph);
  w.source = got->second;
  if (!verify_involution(w.matrix).pass)
    throw std::logic_error("witness for " + name + " failed the involution check");
  return w;
}

}  // namespace qtwo
