#include "trilow/accounting.hpp"

#include <cmath>
#include <stdexcept>

#include "trilow/hypergeom.hpp"

namespace trilow {

void validate_split_partition(const Graph& g0, const FSplit& split) {
  const int n = g0.order();
  if (split.f_minus.order() != n || split.f_plus.order() != n)
    throw std::invalid_argument("split partition: order mismatch");
  if (split.f_minus.size() + split.f_plus.size() + g0.size() != pair_count(n))
    throw std::invalid_argument("split partition: sizes do not cover all pairs");
  const int W = g0.words();
  for (int u = 0; u < n; ++u) {
    const uint64_t* a = g0.row(u);
    const uint64_t* fm = split.f_minus.row(u);
    const uint64_t* fp = split.f_plus.row(u);
    for (int i = 0; i < W; ++i) {
      if ((a[i] & fm[i]) | (a[i] & fp[i]) | (fm[i] & fp[i]))
        throw std::invalid_argument("split partition: overlapping edge sets");
    }
  }
}

namespace {

double codegree_sum(const Graph& g0, const Graph& side) {
  double total = 0.0;
  for (int u = 0; u < side.order(); ++u) {
    bits::for_each_bit(side.row(u), side.words(), [&](int w) {
      if (w > u) total += static_cast<double>(g0.codegree(u, w));
    });
  }
  return total;
}

double synergy_sum(const Graph& g0, const Graph& side, double p) {
  const int n = g0.order();
  const auto deg = g0.degrees();
  double total = 0.0;
  for (int u = 0; u < n; ++u) {
    bits::for_each_bit(side.row(u), side.words(), [&](int w) {
      if (w > u)
        total += static_cast<double>(g0.codegree(u, w)) -
                 p * static_cast<double>(deg[u] + deg[w]) + p * p * static_cast<double>(n - 2);
    });
  }
  return total;
}

struct UrnProbabilities {
  double single_minus, single_plus;  // one fixed edge included
  double pair_mm, pair_mp, pair_pp;  // two fixed edges included
  double triple[4];                  // three fixed edges, indexed by low-half count
};

double falling_ratio(int64_t take, int64_t from, int count) {
  double r = 1.0;
  for (int i = 0; i < count; ++i) {
    if (from - i <= 0) return 0.0;
    r *= static_cast<double>(take - i) / static_cast<double>(from - i);
    if (r < 0.0) return 0.0;  // take < count: no way to include that many
  }
  return r;
}

UrnProbabilities urn_probabilities(const FSplit& split, int64_t m1, double alpha) {
  const int64_t k_minus = conditioned_k_minus(m1, alpha);
  const int64_t k_plus = m1 - k_minus;
  const int64_t f = split.f_minus.size();
  const int64_t p = split.f_plus.size();
  if (k_minus > f || k_plus > p)
    throw std::invalid_argument("urn probabilities: counts exceed a split side");
  UrnProbabilities out;
  out.single_minus = falling_ratio(k_minus, f, 1);
  out.single_plus = falling_ratio(k_plus, p, 1);
  out.pair_mm = falling_ratio(k_minus, f, 2);
  out.pair_mp = falling_ratio(k_minus, f, 1) * falling_ratio(k_plus, p, 1);
  out.pair_pp = falling_ratio(k_plus, p, 2);
  for (int i = 0; i <= 3; ++i)
    out.triple[i] = falling_ratio(k_minus, f, i) * falling_ratio(k_plus, p, 3 - i);
  return out;
}

NeighborhoodEdgeCounts neighborhood_counts_unchecked(const Graph& g0, const FSplit& split, int u) {
  NeighborhoodEdgeCounts r;
  r.e_minus = edges_in_subset(g0, split.f_minus.row(u));
  r.e_pm = edges_between(g0, split.f_minus.row(u), split.f_plus.row(u));
  r.e_plus = edges_in_subset(g0, split.f_plus.row(u));
  const double half = static_cast<double>(g0.order() - 1 - g0.degree(u)) / 2.0;
  r.dev_minus = static_cast<double>(split.f_minus.degree(u)) - half;
  r.dev_plus = static_cast<double>(split.f_plus.degree(u)) - half;
  return r;
}

}  // namespace

double codegree_sum_gap(const Graph& g0, const FSplit& split) {
  validate_split_partition(g0, split);
  return codegree_sum(g0, split.f_minus) - codegree_sum(g0, split.f_plus);
}

SynergyGapReport synergy_sum_gap(const Graph& g0, const FSplit& split) {
  validate_split_partition(g0, split);
  SynergyGapReport r;
  r.codeg_gap = codegree_sum(g0, split.f_minus) - codegree_sum(g0, split.f_plus);
  r.syn_gap =
      synergy_sum(g0, split.f_minus, split.p_used) - synergy_sum(g0, split.f_plus, split.p_used);
  r.transfer_error = std::abs(r.codeg_gap - r.syn_gap);
  return r;
}

DegreeProfileReport f_minus_degree_profile(const Graph& g0, const FSplit& split, double eps) {
  validate_split_partition(g0, split);
  if (!(eps > 0.0)) throw std::invalid_argument("f_minus_degree_profile: eps must be positive");
  const int n = g0.order();
  DegreeProfileReport r;
  r.eps_used = eps;
  for (int u = 0; u < n; ++u) {
    const double non_nbrs = static_cast<double>(n - 1 - g0.degree(u));
    if (non_nbrs <= 0.0) continue;
    const double rel =
        std::abs(static_cast<double>(split.f_minus.degree(u)) - non_nbrs / 2.0) / non_nbrs;
    r.max_rel_dev = std::max(r.max_rel_dev, rel);
    if (rel > 2.0 * eps) ++r.violations;
  }
  return r;
}

FPlusZeroSums f_plus_zero_sums(const Graph& g0, const FSplit& split) {
  validate_split_partition(g0, split);
  const Graph fp0 = f_plus_zero(g0);
  FPlusZeroSums r;
  r.sum_fp0 = synergy_sum(g0, fp0, split.p_used);
  r.sum_fplus = synergy_sum(g0, split.f_plus, split.p_used);
  r.sum_fminus = synergy_sum(g0, split.f_minus, split.p_used);
  r.fp0_size = fp0.size();
  const int W = g0.words();
  int64_t twice = 0;
  for (int u = 0; u < g0.order(); ++u) {
    const uint64_t* a = fp0.row(u);
    const uint64_t* b = split.f_plus.row(u);
    for (int i = 0; i < W; ++i) twice += std::popcount(a[i] ^ b[i]);
  }
  r.symm_diff_vs_fplus = twice / 2;
  return r;
}

NeighborhoodEdgeCounts neighborhood_edge_counts(const Graph& g0, const FSplit& split, int u) {
  validate_split_partition(g0, split);
  return neighborhood_counts_unchecked(g0, split, u);
}

double exact_class21_expectation(const Graph& g0, const FSplit& split, int64_t m1, double alpha) {
  validate_split_partition(g0, split);
  const auto urn = urn_probabilities(split, m1, alpha);
  return urn.single_minus * codegree_sum(g0, split.f_minus) +
         urn.single_plus * codegree_sum(g0, split.f_plus);
}

double exact_class12_expectation(const Graph& g0, const FSplit& split, int64_t m1, double alpha) {
  validate_split_partition(g0, split);
  const auto urn = urn_probabilities(split, m1, alpha);
  double total = 0.0;
  for (int u = 0; u < g0.order(); ++u) {
    const auto counts = neighborhood_counts_unchecked(g0, split, u);
    total += urn.pair_mm * static_cast<double>(counts.e_minus) +
             urn.pair_mp * static_cast<double>(counts.e_pm) +
             urn.pair_pp * static_cast<double>(counts.e_plus);
  }
  return total;
}

double class12_approximation(const Graph& g0, const FSplit& split, int64_t m1, double alpha) {
  validate_split_partition(g0, split);
  const double r1 =
      static_cast<double>(m1) / static_cast<double>(split.f_minus.size() + split.f_plus.size());
  double total = 0.0;
  for (int u = 0; u < g0.order(); ++u) {
    const auto counts = neighborhood_counts_unchecked(g0, split, u);
    total += (1.0 + alpha) * (1.0 + alpha) * static_cast<double>(counts.e_minus) +
             (1.0 - alpha * alpha) * static_cast<double>(counts.e_pm) +
             (1.0 - alpha) * (1.0 - alpha) * static_cast<double>(counts.e_plus);
  }
  return r1 * r1 * total;
}

ClassExpectation class03_expectation(const Graph& g0, const FSplit& split, int64_t m1,
                                     double alpha) {
  const auto urn = urn_probabilities(split, m1, alpha);
  const auto profile = t_class_profile(g0, split);
  ClassExpectation out;
  const double t[4] = {static_cast<double>(profile.t0), static_cast<double>(profile.t1),
                       static_cast<double>(profile.t2), static_cast<double>(profile.t3)};
  for (int i = 0; i <= 3; ++i) out.exact += t[i] * urn.triple[i];
  const int n = g0.order();
  const double non_edges = static_cast<double>(split.f_minus.size() + split.f_plus.size());
  const double p1 = static_cast<double>(m1) / static_cast<double>(pair_count(n));
  const double r1 = static_cast<double>(m1) / non_edges;
  const double r13 = r1 * r1 * r1;
  const double triples = static_cast<double>(n) * (n - 1) * (n - 2) / 6.0;
  out.approx = p1 * p1 * p1 * triples +
               alpha * r13 * (3.0 * t[3] + t[2] - t[1] - 3.0 * t[0]) +
               alpha * alpha * r13 * (3.0 * t[3] - t[2] - t[1] + 3.0 * t[0]) +
               alpha * alpha * alpha * r13 * (t[3] - t[2] + t[1] - t[0]);
  return out;
}

GoodmanCheck goodman_monochromatic(const Graph& g, const Graph& red) {
  if (red.order() != g.order()) throw std::invalid_argument("goodman_monochromatic: order mismatch");
  Graph blue(g.order());
  for (const auto& [u, w] : g.edges()) {
    if (!red.has_edge(u, w)) blue.add_edge(u, w);
  }
  if (blue.size() + red.size() != g.size())
    throw std::invalid_argument("goodman_monochromatic: red is not a subgraph");
  GoodmanCheck r;
  r.n_mc = count_triangles(red) + count_triangles(blue);
  int64_t nbhd = 0;
  for (int v = 0; v < g.order(); ++v) {
    nbhd += edges_in_subset(g, red.row(v));
    nbhd += edges_in_subset(g, blue.row(v));
  }
  r.rhs = nbhd - count_triangles(g);
  return r;
}

TClassProfile t_class_profile(const Graph& g0, const FSplit& split) {
  validate_split_partition(g0, split);
  const Graph comp = g0.complement();
  TClassProfile r;
  r.n_tri_comp = count_triangles(comp);
  r.t3 = count_triangles(split.f_minus);
  // Same-apex low-edge pairs closed by a complement edge count t2 + 3*t3;
  // low-edge complement codegrees count t1 + 2*t2 + 3*t3.
  int64_t apex_pairs = 0;
  for (int u = 0; u < g0.order(); ++u) apex_pairs += edges_in_subset(comp, split.f_minus.row(u));
  int64_t low_codeg = 0;
  for (const auto& [u, w] : split.f_minus.edges()) low_codeg += comp.codegree(u, w);
  r.t2 = apex_pairs - 3 * r.t3;
  r.t1 = low_codeg - 2 * r.t2 - 3 * r.t3;
  r.t0 = r.n_tri_comp - r.t1 - r.t2 - r.t3;
  r.n_mc = r.t3 + count_triangles(split.f_plus);
  return r;
}

}  // namespace trilow
