#include "qtwo/symmatrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qtwo {

Scale inverse_sqrt_scale(std::int64_t s) {
  // 1/sqrt(s) = (1/s) * sqrt(s) for squarefree s.
  squarefree_factors(s);  // validates
  return Scale{Rational(1, s), s};
}

SymMatrix::SymMatrix(int n, EntryMode mode) : n_(n), mode_(mode) {
  if (n < 0) throw std::domain_error("matrix order must be non-negative");
  std::size_t len = static_cast<std::size_t>(n) * (n + 1) / 2;
  if (mode_ == EntryMode::Exact)
    xs_.assign(len, QuadElem());
  else
    fs_.assign(len, 0.0);
}

std::size_t SymMatrix::idx(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::out_of_range("matrix index out of range");
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 +
         (j - i);
}

const QuadElem& SymMatrix::x(int i, int j) const {
  if (mode_ != EntryMode::Exact)
    throw std::logic_error("exact entry access on float matrix");
  return xs_[idx(i, j)];
}

void SymMatrix::set_x(int i, int j, QuadElem v) {
  if (mode_ != EntryMode::Exact)
    throw std::logic_error("exact entry access on float matrix");
  xs_[idx(i, j)] = std::move(v);
}

double SymMatrix::f(int i, int j) const {
  if (mode_ != EntryMode::Float)
    throw std::logic_error("float entry access on exact matrix");
  return fs_[idx(i, j)];
}

void SymMatrix::set_f(int i, int j, double v) {
  if (mode_ != EntryMode::Float)
    throw std::logic_error("float entry access on exact matrix");
  fs_[idx(i, j)] = v;
}

double SymMatrix::value(int i, int j) const {
  double raw = mode_ == EntryMode::Exact ? xs_[idx(i, j)].to_double() : fs_[idx(i, j)];
  return scale_.is_one() ? raw : raw * scale_.to_double();
}

bool SymMatrix::entry_is_zero(int i, int j, double tol) const {
  if (mode_ == EntryMode::Exact) return xs_[idx(i, j)].is_zero();
  return std::abs(fs_[idx(i, j)]) <= tol;
}

Eigen::MatrixXd SymMatrix::to_eigen() const {
  Eigen::MatrixXd m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) m(i, j) = m(j, i) = value(i, j);
  return m;
}

SymMatrix SymMatrix::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::domain_error("permutation size does not match matrix order");
  SymMatrix out(n_, mode_);
  out.scale_ = scale_;
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) {
      if (mode_ == EntryMode::Exact)
        out.set_x(perm[i], perm[j], x(i, j));
      else
        out.set_f(perm[i], perm[j], f(i, j));
    }
  return out;
}

Block::Block(int rows, int cols, EntryMode mode)
    : rows_(rows), cols_(cols), mode_(mode) {
  if (rows < 0 || cols < 0) throw std::domain_error("negative block shape");
  std::size_t len = static_cast<std::size_t>(rows) * cols;
  if (mode_ == EntryMode::Exact)
    xs_.assign(len, QuadElem());
  else
    fs_.assign(len, 0.0);
}

std::size_t Block::idx(int i, int j) const {
  if (i < 0 || j < 0 || i >= rows_ || j >= cols_)
    throw std::out_of_range("block index out of range");
  return static_cast<std::size_t>(i) * cols_ + j;
}

const QuadElem& Block::x(int i, int j) const {
  if (mode_ != EntryMode::Exact)
    throw std::logic_error("exact entry access on float block");
  return xs_[idx(i, j)];
}

void Block::set_x(int i, int j, QuadElem v) {
  if (mode_ != EntryMode::Exact)
    throw std::logic_error("exact entry access on float block");
  xs_[idx(i, j)] = std::move(v);
}

double Block::f(int i, int j) const {
  if (mode_ != EntryMode::Float)
    throw std::logic_error("float entry access on exact block");
  return fs_[idx(i, j)];
}

void Block::set_f(int i, int j, double v) {
  if (mode_ != EntryMode::Float)
    throw std::logic_error("float entry access on exact block");
  fs_[idx(i, j)] = v;
}

double Block::value(int i, int j) const {
  double raw = mode_ == EntryMode::Exact ? xs_[idx(i, j)].to_double() : fs_[idx(i, j)];
  return scale_.is_one() ? raw : raw * scale_.to_double();
}

Eigen::MatrixXd Block::to_eigen() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = value(i, j);
  return m;
}

}  // namespace qtwo
