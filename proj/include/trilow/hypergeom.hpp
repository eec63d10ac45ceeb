#pragma once
// Exact hypergeometric log-pmf through log-gamma, the two-term exponent
// estimate for the symmetric-urn point probability at relative skew alpha,
// and the cost check for conditioning the second-phase edges on hitting the
// skewed low-synergy count.

#include <cstdint>

namespace trilow {

// log P(X = k), X ~ Hypergeometric(population, successes, draws).
// Returns -infinity outside the support; throws on inconsistent parameters.
double hypergeom_log_pmf(int64_t population, int64_t successes, int64_t draws, int64_t k);

// Interior exponent of P(|A n [M]| = (1+alpha) p M) for a uniform 2pM-subset
// A of [2M]:
//   -(p/(1-p)) alpha^2 M - ((p - 2p^2 + 2p^3)/(1-p)^2) alpha^3 M,
// accurate to O(alpha^4 M + log M). Requires p in (0,1) and
// 0 <= alpha <= min(1, (1-p)/p).
double stirling_tail_estimate(double m_half, double p, double alpha);

// round-half-even of (1+alpha) m1 / 2: the skewed low-synergy edge count.
int64_t conditioned_k_minus(int64_t m1, double alpha);

struct HyperTailResult {
  double exact_log_prob = 0.0;
  double stirling_estimate = 0.0;
  double lower_bound_cost = 0.0;  // -(1/lambda) alpha^2 (N - m0)
  double log_gap = 0.0;           // exact_log_prob - stirling_estimate
  // True when 3 log(n)/n <= alpha <= 1/2: the skew window where the
  // quadratic exponent dominates the point-probability prefactor, so the
  // closed lower bound is meaningful. Callers assert it only in the window.
  bool in_regime = false;
};

// Skew cost for n vertices, m edges, second-phase fraction eta and density
// margin lambda: the chance that a uniform m1-subset of the K = N - m0
// non-edges puts exactly round-half-even((1+alpha) m1 / 2) edges into a
// floor(K/2)-element half.
HyperTailResult e_alpha_cost_check(int n, int64_t m, double eta, double alpha, double lambda);

}  // namespace trilow
