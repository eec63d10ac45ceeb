#include "trilow/synergy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trilow {

double default_density(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("default_density: need n >= 2");
  return static_cast<double>(g.size()) / static_cast<double>(pair_count(g.order()));
}

namespace {

double synergy_from_counts(int n, double p, int codeg, int du, int dw) {
  return static_cast<double>(codeg) - p * static_cast<double>(du) - p * static_cast<double>(dw) +
         p * p * static_cast<double>(n - 2);
}

// The formula is defined for any distinct pair; only non-edges matter for
// the split, but degree accounting evaluates it on edges too.
void check_synergy_pair(const Graph& g, int u, int w) {
  if (g.order() < 3) throw std::invalid_argument("synergy: need n >= 3");
  if (u == w) throw std::invalid_argument("synergy: identical endpoints");
  if (u < 0 || u >= g.order() || w < 0 || w >= g.order())
    throw std::invalid_argument("synergy: vertex out of range");
}

}  // namespace

double synergy(const Graph& g, int u, int w, double p) {
  check_synergy_pair(g, u, w);
  return synergy_from_counts(g.order(), p, g.codegree(u, w), g.degree(u), g.degree(w));
}

double synergy(const Graph& g, int u, int w) { return synergy(g, u, w, default_density(g)); }

double sigma_p(int n, double p) {
  if (n < 2) throw std::invalid_argument("sigma_p: need n >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sigma_p: p outside [0,1]");
  return p * (1.0 - p) * std::sqrt(static_cast<double>(n - 2));
}

double sigma_u(int n, int k, int d_u, double p) {
  if (k < 0 || d_u < 0 || n - k - d_u - 1 < 0)
    throw std::invalid_argument("sigma_u: inconsistent counts");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sigma_u: p outside [0,1]");
  const double q = 1.0 - p;
  const double var = p * q * q * q * static_cast<double>(d_u) +
                     p * p * p * q * static_cast<double>(n - k - d_u - 1);
  return std::sqrt(var);
}

SynergyVector normalized_synergy_vector(const Graph& g, int u, double p) {
  if (g.order() < 3) throw std::invalid_argument("normalized_synergy_vector: need n >= 3");
  SynergyVector out;
  out.vertex = u;
  out.p_used = p;
  out.sigma = sigma_p(g.order(), p);
  if (out.sigma == 0.0)
    throw std::invalid_argument("normalized_synergy_vector: degenerate density");
  const int n = g.order();
  const int du = g.degree(u);
  out.values.reserve(static_cast<size_t>(n - 1 - du));
  for (int w = 0; w < n; ++w) {
    if (w == u || g.has_edge(u, w)) continue;
    out.values.push_back(synergy_from_counts(n, p, g.codegree(u, w), du, g.degree(w)) / out.sigma);
  }
  return out;
}

SynergyVector normalized_synergy_vector(const Graph& g, int u) {
  return normalized_synergy_vector(g, u, default_density(g));
}

double relative_synergy(const Graph& g, int u, int w, std::span<const int> inner, double p) {
  check_synergy_pair(g, u, w);
  const int n = g.order();
  bool w_in_inner = false;
  int nbrs_of_w_in_inner = 0;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (const int v : inner) {
    if (v < 0 || v >= n) throw std::invalid_argument("relative_synergy: inner vertex out of range");
    if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("relative_synergy: repeated inner vertex");
    seen[static_cast<size_t>(v)] = 1;
    if (v == u) throw std::invalid_argument("relative_synergy: inner set contains the pin");
    if (g.has_edge(u, v)) throw std::invalid_argument("relative_synergy: inner vertex adjacent to the pin");
    if (v == w) w_in_inner = true;
    if (v != w && g.has_edge(w, v)) ++nbrs_of_w_in_inner;
  }
  if (!w_in_inner) throw std::invalid_argument("relative_synergy: w must belong to the inner set");
  const auto k = static_cast<double>(inner.size());
  // u is not a neighbor of w, so |N(w) \ (I u {u})| = d(w) - |N(w) n I|.
  const double outer_nbrs = static_cast<double>(g.degree(w) - nbrs_of_w_in_inner);
  return static_cast<double>(g.codegree(u, w)) - p * static_cast<double>(g.degree(u)) -
         p * outer_nbrs + p * p * (static_cast<double>(n) - k - 1.0);
}

FSplit split_f(const Graph& g0) {
  const int n = g0.order();
  const int64_t non_edges = pair_count(n) - g0.size();
  if (non_edges < 2) throw std::invalid_argument("split_f: need at least two non-edges");
  const double p = default_density(g0);
  const Graph comp = g0.complement();
  std::vector<std::pair<double, int64_t>> ranked;
  ranked.reserve(static_cast<size_t>(non_edges));
  const auto deg = g0.degrees();
  for (int u = 0; u < n; ++u) {
    bits::for_each_bit(comp.row(u), comp.words(), [&](int w) {
      if (w <= u) return;
      const double s = synergy_from_counts(n, p, g0.codegree(u, w), deg[u], deg[w]);
      ranked.emplace_back(s, pair_index(n, u, w));
    });
  }
  std::sort(ranked.begin(), ranked.end());
  const auto cut = static_cast<size_t>(non_edges / 2);
  FSplit out;
  out.p_used = p;
  out.f_minus = Graph(n);
  out.f_plus = Graph(n);
  for (size_t i = 0; i < ranked.size(); ++i) {
    const auto [u, w] = pair_from_index(n, ranked[i].second);
    (i < cut ? out.f_minus : out.f_plus).add_edge(u, w);
  }
  out.median_synergy = ranked[cut - 1].first;
  for (size_t i = 0; i < ranked.size(); ++i) {
    if (ranked[i].first == out.median_synergy) (i < cut ? out.ties_to_minus : out.ties_to_plus)++;
  }
  return out;
}

Graph f_plus_zero(const Graph& g0) {
  const int n = g0.order();
  if (n < 3) throw std::invalid_argument("f_plus_zero: need n >= 3");
  const double p = default_density(g0);
  const Graph comp = g0.complement();
  const auto deg = g0.degrees();
  Graph out(n);
  for (int u = 0; u < n; ++u) {
    bits::for_each_bit(comp.row(u), comp.words(), [&](int w) {
      if (w <= u) return;
      if (synergy_from_counts(n, p, g0.codegree(u, w), deg[u], deg[w]) >= 0.0) out.add_edge(u, w);
    });
  }
  return out;
}

}  // namespace trilow
