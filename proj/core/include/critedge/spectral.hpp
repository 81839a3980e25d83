#pragma once

#include <cstdint>
#include <vector>

#include "critedge/graph.hpp"

namespace critedge {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::int64_t kDefaultIterationBudget = 1'000'000;

/// Certified bracket around the spectral radius.
///
/// `value` is the Rayleigh quotient at the final iterate and therefore a lower
/// bound; `upper` adds the residual norm, which bounds the distance from the
/// Rayleigh quotient to the nearest eigenvalue. For a disconnected graph the
/// fields are the componentwise maxima.
struct SpectralEstimate {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double residual = 0.0;
  std::int64_t iterations = 0;
};

struct SpectralOptions {
  double tol = kDefaultTolerance;
  std::int64_t max_iterations = kDefaultIterationBudget;
};

/// Throws IterationCap when some component does not converge within budget.
SpectralEstimate spectral_radius(const Graph& g, const SpectralOptions& opts = {});
inline SpectralEstimate spectral_radius(const Graph& g, double tol) {
  return spectral_radius(g, SpectralOptions{tol, kDefaultIterationBudget});
}

struct PerronVector {
  std::vector<double> entries;  // unit 2-norm, zero off `support`
  VertexSet support;            // component achieving the spectral radius
  SpectralEstimate estimate;
};

/// Nonnegative unit eigenvector on the component of largest spectral radius
/// (ties go to the component with the lowest vertex). Throws EdgelessGraph.
PerronVector perron_vector(const Graph& g, const SpectralOptions& opts = {});
inline PerronVector perron_vector(const Graph& g, double tol) {
  return perron_vector(g, SpectralOptions{tol, kDefaultIterationBudget});
}

/// rho(T_{n,k}) = (n-2s-1 + sqrt((n-2s-1)^2 + 4s(s+1)(k-1))) / 2 with s = floor(n/k);
/// 0 for k = 1.
double turan_rho_closed_form(int n, int k);

/// sqrt(floor(n/2) * ceil(n/2)).
double turan_rho_bipartite(int n);

/// e(T_{n,k}) = (n(n-2s-1) + s(s+1)k) / 2.
std::int64_t turan_edge_count(std::int64_t n, std::int64_t k);

/// 2e(G)/n, a lower bound on rho(G).
double avg_degree_bound(const Graph& g);

/// Largest eigenvalue of the 2x2 equitable quotient of K_k joined with an
/// independent set of size n-k: ((k-1) + sqrt((k-1)^2 + 4k(n-k))) / 2.
double clique_join_rho(std::int64_t n, std::int64_t k);

/// Split at the vertex of maximum Perron weight u*: A = N(u*), B = the rest.
struct GammaDecomposition {
  Vertex u_star = 0;
  VertexSet a;
  VertexSet b;
  int e_a = 0;
  int e_ab = 0;
  std::int64_t gamma = 0;  // |A| + 2 e(A) + e(A,B)
  SpectralEstimate rho;
};

/// Requires a connected graph with at least one edge. Perron weights within a
/// relative 1e-9 of the maximum count as ties, resolved to the lowest index.
GammaDecomposition gamma_star(const Graph& g, const SpectralOptions& opts = {});
inline GammaDecomposition gamma_star(const Graph& g, double tol) {
  return gamma_star(g, SpectralOptions{tol, kDefaultIterationBudget});
}

}  // namespace critedge
