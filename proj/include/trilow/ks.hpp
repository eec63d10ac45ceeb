#pragma once
// Distance of an empirical sample to the standard normal, plus the coarse
// quantile-net upper bound, the Berry-Esseen style bound for weighted
// Bernoulli sums, the Chernoff far-probability bound for iid samples, and
// a subsampling stability check. Distances are exact sup norms evaluated
// at the sorted jump points.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace trilow {

struct KSReport {
  double distance = 0.0;  // sup_t |F_x(t) - Phi(t)|, in [0,1]
  double argmax_t = 0.0;  // jump point attaining the sup
  int64_t n_points = 0;
  double eps = 1.0;
  bool close = true;  // distance <= eps
  std::string verdict() const { return close ? "close" : "far"; }
};

// eps is the caller's closeness threshold; with the default every sample
// is reported close.
KSReport ks_distance_to_normal(std::span<const double> x, double eps = 1.0);

// Upper bound from checking only the quantile grid t_j = Phi^{-1}(j*eps):
// max_j |F_x(t_j) - Phi(t_j)| + eps, always >= the exact distance.
// Requires 0 < eps < 1/2.
double epsnet_bound(std::span<const double> x, double eps);

// 2*max|a_i| / sqrt(p(1-p) sum a_i^2) for the normalized weighted sum
// sum a_i xi_i with xi_i Bernoulli(p).
double berry_esseen_bound(std::span<const double> a, double p);

// min(1, (2/eps) exp(-eps^2 k / 2)): probability bound for k iid draws from
// an eps-close distribution landing 3*eps-far from normal.
double iid_far_probability_bound(double eps, int64_t k);

// k independent copies of the normalized sum (sum_i a_i xi_i - mu) / sigma.
std::vector<double> weighted_bernoulli_vector(std::span<const double> a, double p, int64_t k,
                                              uint64_t seed);

// x must be 2*eps-far. Returns the empirical frequency, over uniform
// k-subsets, of the subsample staying eps-far. Requires eps^2 k >= 2.
double subsample_preservation_check(std::span<const double> x, double eps, int64_t k,
                                    int64_t trials, uint64_t seed);

}  // namespace trilow
