#include "critedge/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace critedge {

namespace {

struct ComponentResult {
  SpectralEstimate estimate;
  std::array<double, kMaxOrder> x{};
};

// Power iteration on A + shift*I restricted to one component. The shift makes
// every eigenvalue nonnegative, so the -rho eigenvalue of a bipartite
// component cannot compete with rho.
ComponentResult iterate_component(const Graph& g, VertexSet comp, const SpectralOptions& opts) {
  ComponentResult out;
  if (comp.size() == 1) {
    out.x[comp.first()] = 1.0;
    return out;
  }
  const double shift = static_cast<double>(g.order());
  const double start = 1.0 / std::sqrt(static_cast<double>(comp.size()));
  auto& x = out.x;
  for (Vertex v : comp) x[v] = start;

  std::array<double, kMaxOrder> y{};
  for (std::int64_t it = 1;; ++it) {
    double mu = 0.0;
    for (Vertex v : comp) {
      double sum = 0.0;
      for (Vertex w : g.neighbors(v)) sum += x[w];
      y[v] = sum;
      mu += x[v] * sum;
    }
    double res2 = 0.0;
    for (Vertex v : comp) {
      const double d = y[v] - mu * x[v];
      res2 += d * d;
    }
    const double residual = std::sqrt(res2);
    if (residual <= opts.tol) {
      out.estimate = SpectralEstimate{mu, mu, mu + residual, residual, it};
      return out;
    }
    if (it >= opts.max_iterations) {
      throw Error(ErrorKind::IterationCap, "power iteration did not reach residual " + std::to_string(opts.tol) +
                                               " within " + std::to_string(opts.max_iterations) +
                                               " iterations (residual " + std::to_string(residual) + ")");
    }
    double norm2 = 0.0;
    for (Vertex v : comp) {
      y[v] += shift * x[v];
      norm2 += y[v] * y[v];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Vertex v : comp) x[v] = y[v] * inv;
  }
}

void check_options(const SpectralOptions& opts) {
  if (!(opts.tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (opts.max_iterations < 1) throw Error(ErrorKind::InvalidArgument, "iteration budget must be positive");
}

}  // namespace

SpectralEstimate spectral_radius(const Graph& g, const SpectralOptions& opts) {
  check_options(opts);
  SpectralEstimate best;
  bool first = true;
  for (VertexSet comp : g.components()) {
    if (comp.size() == 1) continue;
    const SpectralEstimate e = iterate_component(g, comp, opts).estimate;
    if (first) {
      best = e;
      first = false;
      continue;
    }
    best.value = std::max(best.value, e.value);
    best.lower = std::max(best.lower, e.lower);
    best.upper = std::max(best.upper, e.upper);
    best.residual = std::max(best.residual, e.residual);
    best.iterations += e.iterations;
  }
  return best;
}

PerronVector perron_vector(const Graph& g, const SpectralOptions& opts) {
  check_options(opts);
  if (g.size() == 0) throw Error(ErrorKind::EdgelessGraph, "Perron vector needs at least one edge");
  std::vector<std::pair<VertexSet, ComponentResult>> results;
  double max_value = 0.0;
  for (VertexSet comp : g.components()) {
    if (comp.size() == 1) continue;
    results.emplace_back(comp, iterate_component(g, comp, opts));
    max_value = std::max(max_value, results.back().second.estimate.value);
  }
  for (const auto& [comp, res] : results) {
    if (res.estimate.value >= max_value - 2.0 * opts.tol) {
      PerronVector out;
      out.entries.assign(g.order(), 0.0);
      for (Vertex v : comp) out.entries[v] = res.x[v];
      out.support = comp;
      out.estimate = res.estimate;
      return out;
    }
  }
  throw Error(ErrorKind::EdgelessGraph, "no nontrivial component");
}

double turan_rho_closed_form(int n, int k) {
  if (k < 1 || k > n) throw Error(ErrorKind::InvalidArgument, "turan_rho_closed_form requires 1 <= k <= n");
  if (k == 1) return 0.0;
  const double s = std::floor(static_cast<double>(n) / k);
  const double a = n - 2.0 * s - 1.0;
  return 0.5 * (a + std::sqrt(a * a + 4.0 * s * (s + 1.0) * (k - 1.0)));
}

double turan_rho_bipartite(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "turan_rho_bipartite requires n >= 1");
  const std::int64_t lo = n / 2;
  const std::int64_t hi = n - lo;
  return std::sqrt(static_cast<double>(lo * hi));
}

std::int64_t turan_edge_count(std::int64_t n, std::int64_t k) {
  if (k < 1 || k > n) throw Error(ErrorKind::InvalidArgument, "turan_edge_count requires 1 <= k <= n");
  const std::int64_t s = n / k;
  return (n * (n - 2 * s - 1) + s * (s + 1) * k) / 2;
}

double avg_degree_bound(const Graph& g) { return 2.0 * g.size() / g.order(); }

double clique_join_rho(std::int64_t n, std::int64_t k) {
  if (k < 1 || k >= n) throw Error(ErrorKind::InvalidArgument, "clique_join_rho requires 1 <= k < n");
  const double a = static_cast<double>(k - 1);
  return 0.5 * (a + std::sqrt(a * a + 4.0 * static_cast<double>(k) * static_cast<double>(n - k)));
}

GammaDecomposition gamma_star(const Graph& g, const SpectralOptions& opts) {
  if (g.size() == 0) throw Error(ErrorKind::EdgelessGraph, "gamma_star needs at least one edge");
  if (!g.connected()) throw Error(ErrorKind::Disconnected, "gamma_star requires a connected graph");
  // Tighter than the caller's tolerance so symmetric vertices resolve as ties.
  SpectralOptions tight = opts;
  tight.tol = std::min(opts.tol, 1e-12);
  const PerronVector pv = perron_vector(g, tight);
  const double max_entry = *std::max_element(pv.entries.begin(), pv.entries.end());
  Vertex u_star = 0;
  while (pv.entries[u_star] < max_entry * (1.0 - 1e-9)) ++u_star;

  GammaDecomposition out;
  out.u_star = u_star;
  out.a = g.neighbors(u_star);
  out.b = g.vertices() - out.a - VertexSet::single(u_star);
  out.e_a = g.edges_within(out.a);
  out.e_ab = g.edges_between(out.a, out.b);
  out.gamma = static_cast<std::int64_t>(out.a.size()) + 2LL * out.e_a + out.e_ab;
  out.rho = pv.estimate;
  return out;
}

}  // namespace critedge
