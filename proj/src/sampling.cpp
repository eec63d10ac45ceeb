#include "trilow/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "trilow/rng.hpp"

namespace trilow {

int64_t ProcessParams::m0() const {
  const double v = (1.0 - eta) * static_cast<double>(m);
  return static_cast<int64_t>(std::floor(v + 1e-9 * (std::abs(v) + 1.0)));
}

double ProcessParams::effective_alpha() const {
  if (alpha && c_prime) throw std::invalid_argument("ProcessParams: set only one of alpha, c_prime");
  if (alpha) return *alpha;
  if (c_prime) return *c_prime * delta * std::sqrt(static_cast<double>(n));
  throw std::invalid_argument("ProcessParams: neither alpha nor c_prime set");
}

void ProcessParams::validate_core() const {
  if (n < 2) throw std::invalid_argument("ProcessParams: need n >= 2");
  if (m < 0 || m > pair_total()) throw std::invalid_argument("ProcessParams: m out of range");
  if (!(eta >= 0.0 && eta < 1.0)) throw std::invalid_argument("ProcessParams: eta outside [0,1)");
}

void ProcessParams::validate() const {
  validate_core();
  if (!(lambda > 0.0 && lambda <= 0.5)) throw std::invalid_argument("ProcessParams: lambda outside (0,1/2]");
  const double nn = static_cast<double>(pair_total());
  if (static_cast<double>(m) < lambda * nn - 1e-9 || static_cast<double>(m) > (1.0 - lambda) * nn + 1e-9)
    throw std::invalid_argument("ProcessParams: m outside the density window");
  if (delta < 0.0) throw std::invalid_argument("ProcessParams: negative delta");
  const double a = effective_alpha();
  if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("ProcessParams: derived alpha outside [0,1]");
}

namespace {

// Uniform ordered m-subset of pair indices via a partial Fisher-Yates shuffle
// of the virtual array a[i] = i, touched entries kept in a hash map.
std::vector<int64_t> sample_pair_sequence(int n, int64_t m, Rng& rng) {
  const int64_t total = pair_count(n);
  if (m < 0 || m > total) throw std::invalid_argument("sample_pair_sequence: m out of range");
  std::unordered_map<int64_t, int64_t> moved;
  moved.reserve(static_cast<size_t>(m) * 2);
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(m));
  auto look = [&moved](int64_t i) {
    const auto it = moved.find(i);
    return it == moved.end() ? i : it->second;
  };
  for (int64_t t = 0; t < m; ++t) {
    const int64_t j = t + static_cast<int64_t>(rng.below(static_cast<uint64_t>(total - t)));
    const int64_t picked = look(j);
    moved[j] = look(t);
    out.push_back(picked);
  }
  return out;
}

Graph graph_from_pair_indices(int n, const std::vector<int64_t>& idx, size_t begin, size_t end) {
  Graph g(n);
  for (size_t i = begin; i < end; ++i) {
    const auto [u, w] = pair_from_index(n, idx[i]);
    g.add_edge(u, w);
  }
  return g;
}

}  // namespace

Graph sample_gnm(int n, int64_t m, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample_gnm: negative order");
  Rng rng(seed);
  const auto seq = sample_pair_sequence(n, m, rng);
  return graph_from_pair_indices(n, seq, 0, seq.size());
}

Graph sample_gnp(int n, double p, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample_gnp: negative order");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_gnp: p outside [0,1]");
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (rng.bernoulli(p)) g.add_edge(u, w);
  return g;
}

std::pair<Graph, Graph> two_phase_split(const ProcessParams& params, uint64_t seed) {
  params.validate_core();
  Rng rng(seed);
  const auto seq = sample_pair_sequence(params.n, params.m, rng);
  const auto cut = static_cast<size_t>(params.m0());
  return {graph_from_pair_indices(params.n, seq, 0, cut),
          graph_from_pair_indices(params.n, seq, cut, seq.size())};
}

}  // namespace trilow
