#pragma once
// Pair synergy: how much the codegree of a non-adjacent pair exceeds what
// independent p-density neighborhoods would give,
//   S_p(u,w) = d(u,w) - p d(u) - p d(w) + p^2 (n-2),
// together with its scale sigma_p, per-vertex normalized synergy vectors,
// the relative variant that freezes an inner vertex set, and the split of
// the non-edges into a low-synergy half and its complement.

#include <cstdint>
#include <span>
#include <vector>

#include "trilow/graph.hpp"

namespace trilow {

// e(g) / C(n,2): the plug-in density used whenever p is not given.
double default_density(const Graph& g);

// Requires non-adjacent u != w and n >= 3.
double synergy(const Graph& g, int u, int w, double p);
double synergy(const Graph& g, int u, int w);

// sqrt(p^2 (1-p)^2 (n-2)): the null scale of a single synergy.
double sigma_p(int n, double p);

// Scale of the one-vertex component X_w = d(u,w) - p |N(w) minus the inner
// set|, for a pin vertex u of degree d_u and an inner set of size k:
// sigma_u^2 = p(1-p)^3 d_u + p^3 (1-p) (n - k - d_u - 1).
double sigma_u(int n, int k, int d_u, double p);

struct SynergyVector {
  int vertex = 0;
  double p_used = 0.0;
  double sigma = 0.0;            // sigma_p(n, p_used)
  std::vector<double> values;    // S(u,w)/sigma over non-neighbors w, ascending w
};

SynergyVector normalized_synergy_vector(const Graph& g, int u, double p);
SynergyVector normalized_synergy_vector(const Graph& g, int u);

// Synergy of {u,w} relative to an inner set I: the contribution of N(w)
// inside I is frozen out,
//   S_p(u,w | I) = d(u,w) - p d(u) - p |N(w) \ (I u {u})| + p^2 (n - |I| - 1).
// Requires w in I, u not in I, and I a set of non-neighbors of u.
double relative_synergy(const Graph& g, int u, int w, std::span<const int> inner, double p);

struct FSplit {
  Graph f_minus;                // floor(K/2) lowest-synergy non-edges, K = #non-edges
  Graph f_plus;                 // the remaining ceil(K/2)
  double median_synergy = 0.0;  // synergy of the largest f_minus element
  double p_used = 0.0;
  // Equal-synergy pairs at the cut value are ordered by pair index; these
  // record how many of them landed on each side.
  int64_t ties_to_minus = 0;
  int64_t ties_to_plus = 0;
};

// Sorts the non-edges of g0 by (synergy, pair index) at p = default_density
// and cuts at floor(K/2). Requires at least two non-edges.
FSplit split_f(const Graph& g0);

// Non-edges with nonnegative synergy at p = default_density, as a graph.
Graph f_plus_zero(const Graph& g0);

}  // namespace trilow
