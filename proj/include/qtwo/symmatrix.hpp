#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qtwo/quad.hpp"
#include "qtwo/rational.hpp"

namespace qtwo {

enum class EntryMode { Exact, Float };

// Symbolic scalar c * sqrt(r) (c rational, r squarefree >= 1) applied to a
// whole matrix, e.g. 1/sqrt(12) is stored as (1/6)*sqrt(3). Its square is
// always rational, which keeps involution checks inside the entry field.
struct Scale {
  Rational c{1};
  std::int64_t r{1};

  bool is_one() const { return c.is_one() && r == 1; }
  Rational square() const { return c * c * Rational(r); }
  QuadElem to_quad() const { return QuadElem::term(c, r); }
  double to_double() const { return to_quad().to_double(); }
};

// Returns the scale c*sqrt(r) with value 1/sqrt(s) for squarefree s >= 1.
Scale inverse_sqrt_scale(std::int64_t s);

// Symmetric matrix with only the upper triangle stored (entry (i,j), i <= j,
// lives at index i*n - i*(i-1)/2 + (j-i)), so symmetry holds by construction.
// Entries are either all exact field elements or all doubles; an optional
// Scale multiplies the whole matrix.
class SymMatrix {
public:
  SymMatrix() = default;
  SymMatrix(int n, EntryMode mode);

  int order() const { return n_; }
  EntryMode mode() const { return mode_; }
  const Scale& scale() const { return scale_; }
  void set_scale(const Scale& s) { scale_ = s; }

  const QuadElem& x(int i, int j) const;    // exact entry, before scale
  void set_x(int i, int j, QuadElem v);
  double f(int i, int j) const;             // float entry, before scale
  void set_f(int i, int j, double v);

  // Numeric value of entry (i,j) including the scale.
  double value(int i, int j) const;
  // True if the stored entry is zero (exactly in exact mode, |.| <= tol in
  // float mode). The scale never affects zeroness.
  bool entry_is_zero(int i, int j, double tol) const;

  Eigen::MatrixXd to_eigen() const;  // includes the scale

  SymMatrix permuted(const std::vector<int>& perm) const;

private:
  std::size_t idx(int i, int j) const;

  int n_ = 0;
  EntryMode mode_ = EntryMode::Exact;
  Scale scale_;
  std::vector<QuadElem> xs_;
  std::vector<double> fs_;
};

// Rectangular block with the same entry conventions as SymMatrix; used for
// the off-diagonal block of bipartite constructions.
class Block {
public:
  Block() = default;
  Block(int rows, int cols, EntryMode mode);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  EntryMode mode() const { return mode_; }
  const Scale& scale() const { return scale_; }
  void set_scale(const Scale& s) { scale_ = s; }

  const QuadElem& x(int i, int j) const;
  void set_x(int i, int j, QuadElem v);
  double f(int i, int j) const;
  void set_f(int i, int j, double v);

  double value(int i, int j) const;
  Eigen::MatrixXd to_eigen() const;

private:
  std::size_t idx(int i, int j) const;

  int rows_ = 0, cols_ = 0;
  EntryMode mode_ = EntryMode::Exact;
  Scale scale_;
  std::vector<QuadElem> xs_;
  std::vector<double> fs_;
};

}  // namespace qtwo
