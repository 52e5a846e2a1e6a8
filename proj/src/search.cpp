#include "qtwo/search.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <deque>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "qtwo/checks.hpp"

namespace qtwo {

namespace {

// splitmix64: tiny deterministic generator, identical on every platform
// (the standard library's normal_distribution is implementation-defined,
// which would make frozen witness derivations non-reproducible).
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
  return (splitmix64(state) >> 11) * 0x1.0p-53;
}

// Box-Muller transform; one value per call keeps the call sites simple.
double gaussian(std::uint64_t& state) {
  double u = uniform01(state);
  double v = uniform01(state);
  if (u < 1e-300) u = 1e-300;
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

}  // namespace

void SearchConfig::validate() const {
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (residual_tol <= 0) throw std::invalid_argument("residual_tol must be > 0");
  if (edge_floor <= residual_tol)
    throw std::invalid_argument("edge_floor must exceed residual_tol");
  if (penalty_eps < edge_floor)
    throw std::invalid_argument("penalty_eps must be >= edge_floor");
  if (penalty_mu <= 0) throw std::invalid_argument("penalty_mu must be > 0");
  if (lbfgs_memory < 1) throw std::invalid_argument("lbfgs_memory must be >= 1");
}

int variable_count(const Graph& g) { return g.order() + g.size(); }

SymMatrix assemble_matrix(const Graph& g, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != variable_count(g))
    throw std::invalid_argument("variable vector does not match the pattern");
  int n = g.order();
  SymMatrix m(n, EntryMode::Float);
  for (int i = 0; i < n; ++i) m.set_f(i, i, x[i]);
  auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e)
    m.set_f(edges[e].first, edges[e].second, x[n + e]);
  return m;
}

double objective_and_gradient(const Graph& g, const std::vector<double>& x,
                              double mu, double eps, std::vector<double>& grad) {
  int n = g.order();
  auto edges = g.edges();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = x[i];
  for (std::size_t e = 0; e < edges.size(); ++e) {
    m(edges[e].first, edges[e].second) = x[n + e];
    m(edges[e].second, edges[e].first) = x[n + e];
  }
  Eigen::MatrixXd m2 = m * m;
  Eigen::MatrixXd err = m2 - Eigen::MatrixXd::Identity(n, n);
  // d/dM ||M^2 - I||_F^2 = 4 (M^3 - M); tying m_ij = m_ji doubles the
  // off-diagonal components.
  Eigen::MatrixXd gm = 4.0 * (m2 * m - m);
  double f = err.squaredNorm();
  grad.assign(x.size(), 0.0);
  for (int i = 0; i < n; ++i) grad[i] = gm(i, i);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    double v = x[n + e];
    grad[n + e] = 2.0 * gm(edges[e].first, edges[e].second);
    double gap = eps - std::abs(v);
    if (gap > 0) {
      f += mu * gap * gap;
      grad[n + e] -= 2.0 * mu * gap * (v > 0 ? 1.0 : v < 0 ? -1.0 : 0.0);
    }
  }
  return f;
}

namespace {

struct Quality {
  double residual;  // max-norm of M^2 - I
  double min_edge;  // smallest |edge entry|
};

Quality measure(const Graph& g, const std::vector<double>& x) {
  int n = g.order();
  auto edges = g.edges();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = x[i];
  for (std::size_t e = 0; e < edges.size(); ++e) {
    m(edges[e].first, edges[e].second) = x[n + e];
    m(edges[e].second, edges[e].first) = x[n + e];
  }
  Eigen::MatrixXd err = m * m - Eigen::MatrixXd::Identity(n, n);
  double min_edge = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < edges.size(); ++e)
    min_edge = std::min(min_edge, std::abs(x[n + e]));
  if (edges.empty()) min_edge = 0;
  return {err.cwiseAbs().maxCoeff(), min_edge};
}

std::vector<double> random_start(const Graph& g, std::uint64_t& state,
                                 double min_edge_mag) {
  int n = g.order();
  std::vector<double> x(variable_count(g));
  for (int i = 0; i < n; ++i) x[i] = uniform01(state) - 0.5;
  for (int e = 0; e < g.size(); ++e) x[n + e] = gaussian(state);
  // Normalize to spectral norm ~1 so the iterate starts near the involution
  // shell instead of far outside it.
  Eigen::MatrixXd m = assemble_matrix(g, x).to_eigen();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  double top = es.eigenvalues().cwiseAbs().maxCoeff();
  if (top > 1e-12)
    for (double& v : x) v /= top;
  // Push near-zero edge entries out to the penalty floor so every restart
  // begins penalty-free; otherwise late restarts (large mu) die in the line
  // search before escaping the infeasible region.
  for (int e = 0; e < g.size(); ++e) {
    double& v = x[n + e];
    if (std::abs(v) < min_edge_mag) v = v < 0 ? -min_edge_mag : min_edge_mag;
  }
  return x;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// One L-BFGS restart. Returns true on a certified success (residual and
// edge-floor criteria), leaving the final iterate in x.
bool lbfgs_run(const Graph& g, const SearchConfig& cfg, double mu,
               std::vector<double>& x, Quality& best, int restart,
               std::ofstream* trace) {
  const std::size_t dim = x.size();
  std::deque<std::vector<double>> s_hist, y_hist;
  std::vector<double> grad(dim), next_grad(dim);
  double f = objective_and_gradient(g, x, mu, cfg.penalty_eps, grad);
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    if (trace && trace->is_open())
      *trace << "{\"restart\":" << restart << ",\"iter\":" << iter
             << ",\"f\":" << f << "}\n";
    Quality q = measure(g, x);
    if (q.residual < best.residual) best = q;
    if (q.residual <= cfg.residual_tol && q.min_edge >= cfg.edge_floor) {
      best = q;
      return true;
    }

    // Two-loop recursion for the search direction.
    std::vector<double> d = grad;
    std::vector<double> alpha(s_hist.size());
    for (int i = static_cast<int>(s_hist.size()) - 1; i >= 0; --i) {
      double rho = dot(y_hist[i], s_hist[i]);
      alpha[i] = dot(s_hist[i], d) / rho;
      for (std::size_t k = 0; k < dim; ++k) d[k] -= alpha[i] * y_hist[i][k];
    }
    if (!s_hist.empty()) {
      double gamma = dot(s_hist.back(), y_hist.back()) /
                     dot(y_hist.back(), y_hist.back());
      for (double& v : d) v *= gamma;
    }
    for (std::size_t i = 0; i < s_hist.size(); ++i) {
      double beta = dot(y_hist[i], d) / dot(y_hist[i], s_hist[i]);
      for (std::size_t k = 0; k < dim; ++k)
        d[k] += (alpha[i] - beta) * s_hist[i][k];
    }
    for (double& v : d) v = -v;

    double slope = dot(grad, d);
    if (slope >= 0) {  // not a descent direction; fall back to steepest
      s_hist.clear();
      y_hist.clear();
      for (std::size_t k = 0; k < dim; ++k) d[k] = -grad[k];
      slope = -dot(grad, grad);
    }
    if (-slope <= 1e-18 * (1 + std::abs(f))) return false;  // flat point

    // Armijo backtracking.
    double step = 1.0;
    std::vector<double> xn(dim);
    double fn = f;
    bool moved = false;
    while (step > 1e-20) {
      for (std::size_t k = 0; k < dim; ++k) xn[k] = x[k] + step * d[k];
      fn = objective_and_gradient(g, xn, mu, cfg.penalty_eps, next_grad);
      if (fn <= f + 1e-4 * step * slope) {
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) return false;

    std::vector<double> s(dim), y(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      s[k] = xn[k] - x[k];
      y[k] = next_grad[k] - grad[k];
    }
    if (dot(y, s) > 1e-12) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      if (static_cast<int>(s_hist.size()) > cfg.lbfgs_memory) {
        s_hist.pop_front();
        y_hist.pop_front();
      }
    }
    x = std::move(xn);
    grad = next_grad;
    f = fn;
  }
  Quality q = measure(g, x);
  if (q.residual < best.residual) best = q;
  return q.residual <= cfg.residual_tol && q.min_edge >= cfg.edge_floor;
}

}  // namespace

SearchResult find_witness(const Graph& g, const SearchConfig& cfg) {
  cfg.validate();
  SearchResult result;
  result.residual = std::numeric_limits<double>::infinity();
  if (g.order() == 0) return result;

  std::ofstream trace;
  if (!cfg.trace_path.empty()) {
    trace.open(cfg.trace_path);
    if (!trace) throw std::runtime_error("cannot open trace file " + cfg.trace_path);
  }

  for (int r = 0; r < cfg.restarts; ++r) {
    // Hash the (seed, restart) pair once: splitmix's increment is this same
    // constant, so an unhashed affine state would replay the previous
    // restart's draw stream shifted by one position.
    std::uint64_t salt = cfg.seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(r);
    std::uint64_t state = splitmix64(salt);
    std::vector<double> x = random_start(g, state, 1.2 * cfg.penalty_eps);
    double mu = cfg.penalty_mu * std::pow(10.0, r / 3);
    Quality best{std::numeric_limits<double>::infinity(), 0};
    bool ok = lbfgs_run(g, cfg, mu, x, best, r, trace.is_open() ? &trace : nullptr);
    result.restarts_used = r + 1;
    if (best.residual < result.residual) result.residual = best.residual;
    if (ok) {
      Quality q = measure(g, x);
      result.found = true;
      result.matrix = assemble_matrix(g, x);
      result.residual = q.residual;
      result.min_edge = q.min_edge;
      return result;
    }
  }
  return result;
}

namespace {

// Best p/q approximation of v with 1 <= q <= max_den.
std::pair<std::int64_t, std::int64_t> nearest_rational(double v,
                                                       std::int64_t max_den) {
  std::int64_t bp = 0, bq = 1;
  double best = std::abs(v);
  for (std::int64_t q = 1; q <= max_den; ++q) {
    double pd = std::nearbyint(v * static_cast<double>(q));
    if (std::abs(pd) > 9e15) continue;
    auto p = static_cast<std::int64_t>(pd);
    double err = std::abs(v - static_cast<double>(p) / static_cast<double>(q));
    if (err < best - 1e-18) {
      best = err;
      bp = p;
      bq = q;
    }
  }
  return {bp, bq};
}

}  // namespace

std::optional<SymMatrix> rounding_probe(const SymMatrix& m,
                                        const std::vector<std::int64_t>& radicands,
                                        std::int64_t max_den, double tol) {
  if (m.mode() != EntryMode::Float)
    throw std::invalid_argument("rounding_probe expects a float matrix");
  int n = m.order();
  SymMatrix out(n, EntryMode::Exact);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double v = m.value(i, j);
      if (std::abs(v) <= tol) continue;  // exact zero entry
      double best_err = tol;
      QuadElem best;
      bool found = false;
      auto consider = [&](std::int64_t r) {
        double root = std::sqrt(static_cast<double>(r));
        auto [p, q] = nearest_rational(v / root, max_den);
        if (p == 0) return;
        double err = std::abs(v - root * static_cast<double>(p) / static_cast<double>(q));
        if (err <= best_err) {
          best_err = err;
          best = QuadElem::term(Rational(p, q), r);
          found = true;
        }
      };
      consider(1);
      for (std::int64_t r : radicands)
        if (r > 1) consider(r);
      if (!found) return std::nullopt;
      out.set_x(i, j, best);
    }
  }
  if (pattern_graph(out) != pattern_graph(m)) return std::nullopt;
  if (!verify_involution(out).pass) return std::nullopt;
  return out;
}

}  // namespace qtwo
