#include "trilow/ks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trilow/normal.hpp"
#include "trilow/rng.hpp"

namespace trilow {

KSReport ks_distance_to_normal(std::span<const double> x, double eps) {
  if (x.empty()) throw std::invalid_argument("ks_distance_to_normal: empty sample");
  std::vector<double> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());
  const auto k = static_cast<double>(s.size());
  KSReport r;
  r.n_points = static_cast<int64_t>(s.size());
  r.eps = eps;
  for (size_t i = 0; i < s.size(); ++i) {
    const double phi = std_normal_cdf(s[i]);
    // The empirical cdf jumps from i/k to (i+1)/k at s[i].
    const double lo = std::abs(phi - static_cast<double>(i) / k);
    const double hi = std::abs(static_cast<double>(i + 1) / k - phi);
    const double d = std::max(lo, hi);
    if (d > r.distance) {
      r.distance = d;
      r.argmax_t = s[i];
    }
  }
  r.close = r.distance <= eps;
  return r;
}

double epsnet_bound(std::span<const double> x, double eps) {
  if (x.empty()) throw std::invalid_argument("epsnet_bound: empty sample");
  if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("epsnet_bound: eps outside (0,1/2)");
  std::vector<double> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());
  const auto k = static_cast<double>(s.size());
  const auto grid = static_cast<int64_t>(std::floor(1.0 / eps));
  double worst = 0.0;  // grid points at probability 0 or 1 contribute zero
  for (int64_t j = 1; j <= grid; ++j) {
    const double q = static_cast<double>(j) * eps;
    if (q >= 1.0) break;
    const double t = std_normal_quantile(q);
    const auto below = std::upper_bound(s.begin(), s.end(), t) - s.begin();
    worst = std::max(worst, std::abs(static_cast<double>(below) / k - q));
  }
  return worst + eps;
}

double berry_esseen_bound(std::span<const double> a, double p) {
  if (a.empty()) throw std::invalid_argument("berry_esseen_bound: empty weights");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("berry_esseen_bound: p outside (0,1)");
  double max_abs = 0.0;
  double sum_sq = 0.0;
  for (const double v : a) {
    max_abs = std::max(max_abs, std::abs(v));
    sum_sq += v * v;
  }
  if (sum_sq == 0.0) throw std::invalid_argument("berry_esseen_bound: all weights zero");
  return 2.0 * max_abs / std::sqrt(p * (1.0 - p) * sum_sq);
}

double iid_far_probability_bound(double eps, int64_t k) {
  if (!(eps > 0.0)) throw std::invalid_argument("iid_far_probability_bound: eps must be positive");
  if (k < 1) throw std::invalid_argument("iid_far_probability_bound: k must be positive");
  const double b = (2.0 / eps) * std::exp(-0.5 * eps * eps * static_cast<double>(k));
  return std::min(1.0, b);
}

std::vector<double> weighted_bernoulli_vector(std::span<const double> a, double p, int64_t k,
                                              uint64_t seed) {
  if (a.empty()) throw std::invalid_argument("weighted_bernoulli_vector: empty weights");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("weighted_bernoulli_vector: p outside (0,1)");
  if (k < 1) throw std::invalid_argument("weighted_bernoulli_vector: k must be positive");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const double v : a) {
    sum += v;
    sum_sq += v * v;
  }
  const double sigma2 = p * (1.0 - p) * sum_sq;
  if (sigma2 == 0.0) throw std::invalid_argument("weighted_bernoulli_vector: zero variance");
  const double mu = p * sum;
  const double inv_sigma = 1.0 / std::sqrt(sigma2);
  Rng rng(seed);
  std::vector<double> out(static_cast<size_t>(k));
  for (auto& val : out) {
    double s = 0.0;
    for (const double v : a)
      if (rng.bernoulli(p)) s += v;
    val = (s - mu) * inv_sigma;
  }
  return out;
}

double subsample_preservation_check(std::span<const double> x, double eps, int64_t k,
                                    int64_t trials, uint64_t seed) {
  const auto total = static_cast<int64_t>(x.size());
  if (k < 1 || k > total) throw std::invalid_argument("subsample_preservation_check: bad k");
  if (trials < 1) throw std::invalid_argument("subsample_preservation_check: bad trial count");
  if (!(eps > 0.0)) throw std::invalid_argument("subsample_preservation_check: eps must be positive");
  if (eps * eps * static_cast<double>(k) < 2.0)
    throw std::invalid_argument("subsample_preservation_check: need eps^2 k >= 2");
  if (ks_distance_to_normal(x).distance <= 2.0 * eps)
    throw std::invalid_argument("subsample_preservation_check: sample is not 2*eps-far");
  Rng rng(seed);
  std::vector<int64_t> index(static_cast<size_t>(total));
  std::vector<double> sub(static_cast<size_t>(k));
  int64_t far = 0;
  for (int64_t t = 0; t < trials; ++t) {
    for (int64_t i = 0; i < total; ++i) index[static_cast<size_t>(i)] = i;
    for (int64_t i = 0; i < k; ++i) {
      const auto j = i + static_cast<int64_t>(rng.below(static_cast<uint64_t>(total - i)));
      std::swap(index[static_cast<size_t>(i)], index[static_cast<size_t>(j)]);
      sub[static_cast<size_t>(i)] = x[static_cast<size_t>(index[static_cast<size_t>(i)])];
    }
    if (ks_distance_to_normal(sub).distance > eps) ++far;
  }
  return static_cast<double>(far) / static_cast<double>(trials);
}

}  // namespace trilow
