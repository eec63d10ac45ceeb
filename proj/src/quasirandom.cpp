#include "trilow/quasirandom.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "trilow/ks.hpp"
#include "trilow/rng.hpp"

namespace trilow {

namespace {
constexpr int kRandomSubsets = 200;
}

QuasirandomReport check_quasirandom(const Graph& g0, double c_d, const FSplit& split,
                                    uint64_t seed) {
  const int n = g0.order();
  if (n < 3) throw std::invalid_argument("check_quasirandom: need n >= 3");
  if (!(c_d > 0.0)) throw std::invalid_argument("check_quasirandom: c_d must be positive");

  QuasirandomReport r;
  r.n = n;
  r.p0 = default_density(g0);
  r.eps_used = std::pow(static_cast<double>(n), -0.2);
  r.c_d_used = c_d;
  const double n_d = static_cast<double>(n);
  r.deg_codeg_threshold = std::sqrt(n_d) * std::log(n_d);
  r.edge_dev_threshold = std::pow(n_d, 1.5);
  r.p1_threshold = c_d * n_d * n_d * n_d;

  const Graph comp = g0.complement();
  const auto deg = g0.degrees();
  const double comp_density = 1.0 - r.p0;

  // Checks 1, 3, 4 in one pass over pairs.
  const double comp_codeg_center = comp_density * comp_density * (n_d - 2.0);
  for (int u = 0; u < n; ++u) {
    r.p3_max_deg_dev = std::max(r.p3_max_deg_dev, std::abs(static_cast<double>(deg[u]) - r.p0 * n_d));
    for (int w = u + 1; w < n; ++w) {
      const double dc = static_cast<double>(comp.codegree(u, w)) - comp_codeg_center;
      r.p1_codeg_sq_sum += dc * dc;
      const double dev = std::abs(static_cast<double>(g0.codegree(u, w)) - r.p0 * r.p0 * n_d);
      r.p4_max_codeg_dev = std::max(r.p4_max_codeg_dev, dev);
    }
  }

  // Check 2: per-vertex synergy vectors against the normal.
  for (int u = 0; u < n; ++u) {
    if (deg[u] >= n - 1) continue;  // no non-neighbors, nothing to test
    const auto vec = normalized_synergy_vector(g0, u, r.p0);
    const auto ks = ks_distance_to_normal(vec.values, r.eps_used);
    r.p2_max_distance = std::max(r.p2_max_distance, ks.distance);
    if (!ks.close) ++r.p2_far_count;
  }

  // Checks 5 and 6 over the downstream subset family.
  auto edge_dev = [&](const uint64_t* mask) {
    const double size = static_cast<double>(bits::popcount(mask, g0.words()));
    const double expected = r.p0 * size * (size - 1.0) / 2.0;
    return std::abs(static_cast<double>(edges_in_subset(g0, mask)) - expected);
  };
  auto bipartite_dev = [&](const uint64_t* a, const uint64_t* b) {
    const double sa = static_cast<double>(bits::popcount(a, g0.words()));
    const double sb = static_cast<double>(bits::popcount(b, g0.words()));
    return std::abs(static_cast<double>(edges_between(g0, a, b)) - r.p0 * sa * sb);
  };
  for (int u = 0; u < n; ++u) {
    r.p5_max_edge_dev = std::max({r.p5_max_edge_dev, edge_dev(split.f_minus.row(u)),
                                  edge_dev(split.f_plus.row(u))});
    r.p6_max_bipartite_dev =
        std::max(r.p6_max_bipartite_dev, bipartite_dev(split.f_minus.row(u), split.f_plus.row(u)));
  }
  Rng rng(seed);
  std::vector<int> perm(static_cast<size_t>(n));
  auto draw_subset = [&](int size, Mask& out) {
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (int i = 0; i < size; ++i) {
      const int j = i + rng.below_int(n - i);
      std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
      mask_set(out, perm[static_cast<size_t>(i)]);
    }
  };
  for (int t = 0; t < kRandomSubsets; ++t) {
    Mask mask = make_mask(n);
    draw_subset(2 + rng.below_int(n - 1), mask);
    r.p5_max_edge_dev = std::max(r.p5_max_edge_dev, edge_dev(mask.data()));
  }
  for (int t = 0; t < kRandomSubsets; ++t) {
    // One draw split in half gives a uniform disjoint pair.
    const int size = 2 + rng.below_int(n - 1);
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    Mask a = make_mask(n);
    Mask b = make_mask(n);
    for (int i = 0; i < size; ++i) {
      const int j = i + rng.below_int(n - i);
      std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
      mask_set(i < size / 2 ? a : b, perm[static_cast<size_t>(i)]);
    }
    r.p6_max_bipartite_dev = std::max(r.p6_max_bipartite_dev, bipartite_dev(a.data(), b.data()));
  }

  r.p1 = r.p1_codeg_sq_sum <= r.p1_threshold;
  r.p2 = r.p2_far_count == 0;
  r.p3 = r.p3_max_deg_dev <= r.deg_codeg_threshold;
  r.p4 = r.p4_max_codeg_dev <= r.deg_codeg_threshold;
  r.p5 = r.p5_max_edge_dev <= r.edge_dev_threshold;
  r.p6 = r.p6_max_bipartite_dev <= r.edge_dev_threshold;
  return r;
}

QuasirandomReport check_quasirandom(const Graph& g0, double c_d, uint64_t seed) {
  return check_quasirandom(g0, c_d, split_f(g0), seed);
}

}  // namespace trilow
