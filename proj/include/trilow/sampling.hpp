#pragma once
// Uniform random graph models and the two-phase edge split. The split draws
// one uniform ordered m-subset of pairs and cuts it at m0, so the first part
// is itself a uniform graph with m0 edges and the union has the same law as
// a single m-edge draw with the same seed.

#include <cstdint>
#include <optional>
#include <utility>

#include "trilow/graph.hpp"

namespace trilow {

struct ProcessParams {
  int n = 0;
  int64_t m = 0;
  double eta = 0.0;    // fraction of edges withheld for the second phase
  double delta = 0.0;  // target relative triangle deficit
  double lambda = 0.4; // density margin: lambda*N <= m <= (1-lambda)*N
  std::optional<double> alpha;    // direct skew toward the low-synergy side
  std::optional<double> c_prime;  // or alpha = c_prime * delta * sqrt(n)

  int64_t pair_total() const { return pair_count(n); }
  // floor((1-eta)*m), snapped so binary representation drift of eta cannot
  // push an exact product across the floor.
  int64_t m0() const;
  int64_t m1() const { return m - m0(); }

  double effective_alpha() const;

  // Field ranges used by graph sampling only.
  void validate_core() const;
  // Full contract, including the density window and the alpha/c_prime
  // exclusivity rule.
  void validate() const;
};

Graph sample_gnm(int n, int64_t m, uint64_t seed);
Graph sample_gnp(int n, double p, uint64_t seed);

std::pair<Graph, Graph> two_phase_split(const ProcessParams& params, uint64_t seed);

}  // namespace trilow
