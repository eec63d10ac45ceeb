#include "trilow/hypergeom.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "trilow/graph.hpp"
#include "trilow/sampling.hpp"

namespace trilow {

namespace {

double log_binom(int64_t n, int64_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

}  // namespace

double hypergeom_log_pmf(int64_t population, int64_t successes, int64_t draws, int64_t k) {
  if (population < 0 || successes < 0 || draws < 0)
    throw std::invalid_argument("hypergeom_log_pmf: negative parameter");
  if (successes > population || draws > population)
    throw std::invalid_argument("hypergeom_log_pmf: successes and draws cannot exceed the population");
  const int64_t lo = std::max<int64_t>(0, draws - (population - successes));
  const int64_t hi = std::min(successes, draws);
  if (k < lo || k > hi) return -std::numeric_limits<double>::infinity();
  return log_binom(successes, k) + log_binom(population - successes, draws - k) -
         log_binom(population, draws);
}

double stirling_tail_estimate(double m_half, double p, double alpha) {
  if (!(m_half > 0.0)) throw std::invalid_argument("stirling_tail_estimate: M must be positive");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("stirling_tail_estimate: p outside (0,1)");
  const double alpha_max = std::min(1.0, (1.0 - p) / p);
  if (!(alpha >= 0.0 && alpha <= alpha_max))
    throw std::invalid_argument("stirling_tail_estimate: alpha outside [0, min(1,(1-p)/p)]");
  const double q = 1.0 - p;
  const double quad = p / q;
  const double cubic = (p - 2.0 * p * p + 2.0 * p * p * p) / (q * q);
  return -(quad * alpha * alpha + cubic * alpha * alpha * alpha) * m_half;
}

int64_t conditioned_k_minus(int64_t m1, double alpha) {
  if (m1 < 0) throw std::invalid_argument("conditioned_k_minus: negative m1");
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("conditioned_k_minus: alpha outside [0,1]");
  const double x = (1.0 + alpha) * static_cast<double>(m1) / 2.0;
  const double f = std::floor(x);
  const double r = x - f;
  auto fi = static_cast<int64_t>(f);
  if (r > 0.5) return fi + 1;
  if (r < 0.5) return fi;
  return (fi % 2 == 0) ? fi : fi + 1;
}

HyperTailResult e_alpha_cost_check(int n, int64_t m, double eta, double alpha, double lambda) {
  ProcessParams params;
  params.n = n;
  params.m = m;
  params.eta = eta;
  params.lambda = lambda;
  params.alpha = alpha;
  params.validate();
  const int64_t non_edges = params.pair_total() - params.m0();
  const int64_t half = non_edges / 2;
  const int64_t m1 = params.m1();
  if (m1 > non_edges) throw std::invalid_argument("e_alpha_cost_check: m1 exceeds the non-edge count");
  const int64_t k_minus = conditioned_k_minus(m1, alpha);

  HyperTailResult out;
  out.exact_log_prob = hypergeom_log_pmf(non_edges, half, m1, k_minus);
  const double m_half = static_cast<double>(non_edges) / 2.0;
  const double p_draw = static_cast<double>(m1) / static_cast<double>(non_edges);
  out.stirling_estimate = stirling_tail_estimate(m_half, p_draw, alpha);
  out.lower_bound_cost = -(1.0 / lambda) * alpha * alpha * static_cast<double>(non_edges);
  out.log_gap = out.exact_log_prob - out.stirling_estimate;
  const double n_d = static_cast<double>(n);
  out.in_regime = alpha >= 3.0 * std::log(n_d) / n_d && alpha <= 0.5;
  return out;
}

}  // namespace trilow
