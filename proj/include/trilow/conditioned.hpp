#pragma once
// Second-phase sampler conditioned on the skewed low-synergy edge count:
// exactly k_minus = round-half-even((1+alpha) m1 / 2) edges drawn uniformly
// from the low-synergy half and the remaining m1 - k_minus from the other
// half. Two independent uniform subsets realize the conditional law of a
// uniform m1-subset given its low-synergy count, with no rejection step.

#include <cstdint>

#include "trilow/graph.hpp"
#include "trilow/synergy.hpp"

namespace trilow {

Graph sample_conditioned_g1(const FSplit& split, int64_t m1, double alpha, uint64_t seed);

}  // namespace trilow
