#pragma once
// Quasirandomness gate for a first-phase graph. Six checks, all against the
// plug-in density p0 = e(g0)/C(n,2), with eps = n^{-1/5}:
//   1. sum over all vertex pairs of the squared centered complement codegree
//      is at most c_d * n^3;
//   2. every per-vertex normalized synergy vector is eps-close to normal;
//   3. every degree is within sqrt(n) log(n) of p0 n;
//   4. every codegree is within sqrt(n) log(n) of p0^2 n;
//   5. edge counts of the downstream vertex subsets (low/high-synergy
//      neighborhoods of every vertex plus seeded random subsets) are within
//      n^{3/2} of p0 C(|U|,2);
//   6. same for edge counts across the downstream disjoint subset pairs,
//      centered at p0 |U||W|.

#include <cstdint>

#include "trilow/graph.hpp"
#include "trilow/synergy.hpp"

namespace trilow {

struct QuasirandomReport {
  int n = 0;
  double p0 = 0.0;
  double eps_used = 0.0;
  double c_d_used = 0.0;

  double p1_codeg_sq_sum = 0.0;
  double p1_threshold = 0.0;
  int64_t p2_far_count = 0;
  double p2_max_distance = 0.0;
  double p3_max_deg_dev = 0.0;
  double p4_max_codeg_dev = 0.0;
  double p5_max_edge_dev = 0.0;
  double p6_max_bipartite_dev = 0.0;
  double deg_codeg_threshold = 0.0;  // sqrt(n) log(n)
  double edge_dev_threshold = 0.0;   // n^{3/2}

  bool p1 = false, p2 = false, p3 = false, p4 = false, p5 = false, p6 = false;
  bool pass() const { return p1 && p2 && p3 && p4 && p5 && p6; }
};

// The seed drives the random subsets of checks 5 and 6 (200 each).
QuasirandomReport check_quasirandom(const Graph& g0, double c_d, const FSplit& split,
                                    uint64_t seed);
// Convenience overload that computes the split itself.
QuasirandomReport check_quasirandom(const Graph& g0, double c_d, uint64_t seed);

}  // namespace trilow
