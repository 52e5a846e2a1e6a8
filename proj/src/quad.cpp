#include "qtwo/quad.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qtwo {

namespace {

constexpr std::size_t kMaxGenerators = 6;

// Position of each prime of `sub` inside the superset `sup`.
std::vector<int> embedding(const std::vector<std::int64_t>& sub,
                           const std::vector<std::int64_t>& sup) {
  std::vector<int> pos(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) {
    auto it = std::lower_bound(sup.begin(), sup.end(), sub[i]);
    if (it == sup.end() || *it != sub[i])
      throw std::logic_error("generator embedding into non-superset");
    pos[i] = static_cast<int>(it - sup.begin());
  }
  return pos;
}

std::vector<std::int64_t> merge_primes(const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (out.size() > kMaxGenerators)
    throw std::domain_error("quadratic field degree limit exceeded");
  return out;
}

}  // namespace

std::vector<std::int64_t> squarefree_factors(std::int64_t r) {
  if (r < 1) throw std::domain_error("radicand must be a positive integer");
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= r; ++p) {
    if (r % p == 0) {
      r /= p;
      if (r % p == 0) throw std::domain_error("radicand is not squarefree");
      ps.push_back(p);
    }
  }
  if (r > 1) ps.push_back(r);
  return ps;
}

QuadElem::QuadElem(Rational r) : c_{r} {}

QuadElem QuadElem::sqrt_of(std::int64_t r) {
  auto ps = squarefree_factors(r);
  if (ps.size() > kMaxGenerators)
    throw std::domain_error("quadratic field degree limit exceeded");
  QuadElem x;
  x.primes_ = std::move(ps);
  x.c_.assign(std::size_t{1} << x.primes_.size(), Rational(0));
  x.c_.back() = Rational(1);  // top mask = product of all prime factors = r
  return x;
}

QuadElem QuadElem::term(Rational coeff, std::int64_t rad) {
  return sqrt_of(rad) * QuadElem(coeff);
}

std::vector<std::pair<std::int64_t, Rational>> QuadElem::coords() const {
  std::vector<std::pair<std::int64_t, Rational>> out;
  for (std::size_t s = 0; s < c_.size(); ++s) {
    if (c_[s].is_zero()) continue;
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < primes_.size(); ++i)
      if (s >> i & 1) prod *= primes_[i];
    out.emplace_back(prod, c_[s]);
  }
  if (out.empty()) out.emplace_back(1, Rational(0));
  return out;
}

bool QuadElem::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool QuadElem::is_rational() const { return primes_.empty(); }

Rational QuadElem::coord(std::int64_t product) const {
  auto ps = squarefree_factors(product);
  std::size_t mask = 0;
  for (std::int64_t p : ps) {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) return Rational(0);
    mask |= std::size_t{1} << (it - primes_.begin());
  }
  return c_[mask];
}

QuadElem QuadElem::promoted(const std::vector<std::int64_t>& primes) const {
  QuadElem out;
  out.primes_ = primes;
  out.c_.assign(std::size_t{1} << primes.size(), Rational(0));
  auto pos = embedding(primes_, primes);
  for (std::size_t s = 0; s < c_.size(); ++s) {
    if (c_[s].is_zero()) continue;
    std::size_t t = 0;
    for (std::size_t i = 0; i < primes_.size(); ++i)
      if (s >> i & 1) t |= std::size_t{1} << pos[i];
    out.c_[t] = c_[s];
  }
  return out;
}

void QuadElem::prune() {
  std::size_t support = 0;
  for (std::size_t s = 0; s < c_.size(); ++s)
    if (!c_[s].is_zero()) support |= s;
  if (support + 1 == c_.size()) return;  // every generator is in use
  std::vector<std::int64_t> keep;
  std::vector<int> newbit(primes_.size(), -1);
  for (std::size_t i = 0; i < primes_.size(); ++i)
    if (support >> i & 1) {
      newbit[i] = static_cast<int>(keep.size());
      keep.push_back(primes_[i]);
    }
  std::vector<Rational> nc(std::size_t{1} << keep.size(), Rational(0));
  for (std::size_t s = 0; s < c_.size(); ++s) {
    if (c_[s].is_zero()) continue;
    std::size_t t = 0;
    for (std::size_t i = 0; i < primes_.size(); ++i)
      if (s >> i & 1) t |= std::size_t{1} << newbit[i];
    nc[t] = c_[s];
  }
  primes_ = std::move(keep);
  c_ = std::move(nc);
}

QuadElem QuadElem::operator-() const {
  QuadElem out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
  auto primes = merge_primes(a.primes_, b.primes_);
  QuadElem pa = a.promoted(primes);
  QuadElem pb = b.promoted(primes);
  for (std::size_t s = 0; s < pa.c_.size(); ++s) pa.c_[s] += pb.c_[s];
  pa.prune();
  return pa;
}

QuadElem operator-(const QuadElem& a, const QuadElem& b) { return a + (-b); }

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
  auto primes = merge_primes(a.primes_, b.primes_);
  QuadElem pa = a.promoted(primes);
  QuadElem pb = b.promoted(primes);
  QuadElem out;
  out.primes_ = primes;
  out.c_.assign(std::size_t{1} << primes.size(), Rational(0));
  for (std::size_t s = 0; s < pa.c_.size(); ++s) {
    if (pa.c_[s].is_zero()) continue;
    for (std::size_t t = 0; t < pb.c_.size(); ++t) {
      if (pb.c_[t].is_zero()) continue;
      // sqrt(P_S) * sqrt(P_T) = (prod of primes in S&T) * sqrt(P_{S^T})
      Rational factor(1);
      std::size_t common = s & t;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (common >> i & 1) factor *= Rational(primes[i]);
      out.c_[s ^ t] += pa.c_[s] * pb.c_[t] * factor;
    }
  }
  out.prune();
  return out;
}

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  if (primes_.empty()) return QuadElem(c_[0].inverse());
  // Write x = a + b*sqrt(p) over the subfield without the largest generator p.
  // Then 1/x = (a - b*sqrt(p)) / (a^2 - p*b^2), and a^2 - p*b^2 is a nonzero
  // subfield element (it is the product of the two conjugates of x).
  std::size_t m = primes_.size();
  std::int64_t p = primes_.back();
  std::vector<std::int64_t> sub(primes_.begin(), primes_.end() - 1);
  std::size_t half = std::size_t{1} << (m - 1);
  QuadElem a, b;
  a.primes_ = sub;
  b.primes_ = sub;
  a.c_.assign(half, Rational(0));
  b.c_.assign(half, Rational(0));
  for (std::size_t s = 0; s < half; ++s) {
    a.c_[s] = c_[s];
    b.c_[s] = c_[s | half];
  }
  a.prune();
  b.prune();
  QuadElem d = a * a - QuadElem(Rational(p)) * b * b;
  QuadElem di = d.inverse();
  QuadElem na = a * di;
  QuadElem nb = -b * di;
  QuadElem out;
  out.primes_ = primes_;
  out.c_.assign(std::size_t{1} << m, Rational(0));
  QuadElem pna = na.promoted(sub);
  QuadElem pnb = nb.promoted(sub);
  for (std::size_t s = 0; s < half; ++s) {
    out.c_[s] = pna.c_[s];
    out.c_[s | half] = pnb.c_[s];
  }
  out.prune();
  return out;
}

QuadElem operator/(const QuadElem& a, const QuadElem& b) { return a * b.inverse(); }

bool QuadElem::operator==(const QuadElem& o) const {
  // Both representations are canonical (pruned), so equality is structural.
  return primes_ == o.primes_ && c_ == o.c_;
}

double QuadElem::to_double() const {
  double sum = 0;
  for (std::size_t s = 0; s < c_.size(); ++s) {
    if (c_[s].is_zero()) continue;
    double prod = 1;
    for (std::size_t i = 0; i < primes_.size(); ++i)
      if (s >> i & 1) prod *= static_cast<double>(primes_[i]);
    sum += c_[s].to_double() * std::sqrt(prod);
  }
  return sum;
}

std::string QuadElem::to_string() const {
  auto cs = coords();
  if (cs.size() == 1 && cs[0].second.is_zero()) return "0";
  std::string out;
  for (const auto& [prod, coeff] : cs) {
    std::string t;
    if (prod == 1) {
      t = coeff.to_string();
    } else if (coeff.is_one()) {
      t = "sqrt(" + std::to_string(prod) + ")";
    } else if (coeff == Rational(-1)) {
      t = "-sqrt(" + std::to_string(prod) + ")";
    } else {
      t = coeff.to_string() + "*sqrt(" + std::to_string(prod) + ")";
    }
    if (out.empty()) {
      out = t;
    } else if (!t.empty() && t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) {
  return os << x.to_string();
}

}  // namespace qtwo
