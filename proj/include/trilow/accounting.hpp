#pragma once
// Bookkeeping over a low/high-synergy split of the non-edges: codegree and
// synergy sums per side, per-vertex split-degree balance, neighborhood edge
// counts, exact conditional expectations of the mixed triangle classes under
// the skewed second phase, the two-coloring monochromatic triangle identity,
// and the classification of complement triangles by low-synergy edge count.
// Every function validates that (g0, f_minus, f_plus) partition the pairs.

#include <cstdint>

#include "trilow/graph.hpp"
#include "trilow/synergy.hpp"

namespace trilow {

// Throws unless f_minus and f_plus are edge-disjoint from each other and
// from g0 and the three edge sets cover every vertex pair.
void validate_split_partition(const Graph& g0, const FSplit& split);

// sum over the low side of d_{g0}(u,w) minus the same sum over the high side.
double codegree_sum_gap(const Graph& g0, const FSplit& split);

struct SynergyGapReport {
  double codeg_gap = 0.0;
  double syn_gap = 0.0;        // synergy sums at split.p_used, low minus high
  double transfer_error = 0.0; // |codeg_gap - syn_gap|
};
SynergyGapReport synergy_sum_gap(const Graph& g0, const FSplit& split);

struct DegreeProfileReport {
  double max_rel_dev = 0.0;  // max_u |d_minus(u) - (n-d(u)-1)/2| / (n-d(u)-1)
  int64_t violations = 0;    // vertices with relative deviation above 2*eps
  double eps_used = 0.0;
};
DegreeProfileReport f_minus_degree_profile(const Graph& g0, const FSplit& split, double eps);

struct FPlusZeroSums {
  double sum_fp0 = 0.0;    // synergy mass of the nonnegative-synergy non-edges
  double sum_fplus = 0.0;  // synergy mass of the high half
  double sum_fminus = 0.0;
  int64_t fp0_size = 0;
  int64_t symm_diff_vs_fplus = 0;  // |F_{+,0} symmetric-difference F_+|
};
FPlusZeroSums f_plus_zero_sums(const Graph& g0, const FSplit& split);

struct NeighborhoodEdgeCounts {
  int64_t e_minus = 0;  // edges of g0 inside the low-side neighborhood of u
  int64_t e_pm = 0;     // edges of g0 across the two neighborhoods
  int64_t e_plus = 0;   // edges of g0 inside the high-side neighborhood
  double dev_minus = 0.0;  // d_minus(u) - (n - d(u) - 1)/2
  double dev_plus = 0.0;
};
NeighborhoodEdgeCounts neighborhood_edge_counts(const Graph& g0, const FSplit& split, int u);

// Exact conditional expectations of the triangle classes added by a second
// phase of m1 edges conditioned on k_minus = round-half-even((1+alpha)m1/2)
// of them landing in the low half. Single-edge, pair and triple inclusion
// probabilities are the exact falling-factorial ratios of the two urns.
double exact_class21_expectation(const Graph& g0, const FSplit& split, int64_t m1, double alpha);
double exact_class12_expectation(const Graph& g0, const FSplit& split, int64_t m1, double alpha);

// First-order form r1^2 sum_u ((1+a)^2 e_minus + (1-a^2) e_pm + (1-a)^2 e_plus)
// with r1 = m1 / #non-edges, kept for comparison against the exact value.
double class12_approximation(const Graph& g0, const FSplit& split, int64_t m1, double alpha);

struct ClassExpectation {
  double exact = 0.0;
  double approx = 0.0;
};
// Exact triple-class expectation and its cubic expansion
//   p1^3 C(n,3) + a r1^3 (3T3+T2-T1-3T0) + a^2 r1^3 (3T3-T2-T1+3T0)
//                + a^3 r1^3 (T3-T2+T1-T0).
ClassExpectation class03_expectation(const Graph& g0, const FSplit& split, int64_t m1,
                                     double alpha);

struct GoodmanCheck {
  int64_t n_mc = 0;  // monochromatic triangles under the red/blue edge coloring
  int64_t rhs = 0;   // sum_v e(G[N_red(v)]) + sum_v e(G[N_blue(v)]) - #triangles
};
// red must be a subgraph of g; blue is the rest. 2 * n_mc = rhs exactly.
GoodmanCheck goodman_monochromatic(const Graph& g, const Graph& red);

struct TClassProfile {
  int64_t t0 = 0;  // complement triangles with no low-half edge
  int64_t t1 = 0;
  int64_t t2 = 0;
  int64_t t3 = 0;
  int64_t n_mc = 0;        // t3 plus triangles entirely in the high half
  int64_t n_tri_comp = 0;  // all complement triangles
};
// Computed from popcount aggregates: t3 directly, t2 from same-apex low-edge
// pairs, t1 from low-edge codegree sums, t0 by difference. n_mc is counted
// independently, so t0 + t3 == n_mc cross-checks the aggregates.
TClassProfile t_class_profile(const Graph& g0, const FSplit& split);

}  // namespace trilow
