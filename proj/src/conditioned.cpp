#include "trilow/conditioned.hpp"

#include <stdexcept>

#include "trilow/hypergeom.hpp"
#include "trilow/rng.hpp"

namespace trilow {

namespace {

void add_uniform_subset(Graph& g, const EdgeList& pool, int64_t take, Rng& rng) {
  EdgeList local = pool;
  const auto total = static_cast<int64_t>(local.size());
  for (int64_t i = 0; i < take; ++i) {
    const auto j = i + static_cast<int64_t>(rng.below(static_cast<uint64_t>(total - i)));
    std::swap(local[static_cast<size_t>(i)], local[static_cast<size_t>(j)]);
    g.add_edge(local[static_cast<size_t>(i)].first, local[static_cast<size_t>(i)].second);
  }
}

}  // namespace

Graph sample_conditioned_g1(const FSplit& split, int64_t m1, double alpha, uint64_t seed) {
  if (m1 < 0) throw std::invalid_argument("sample_conditioned_g1: negative m1");
  const int64_t k_minus = conditioned_k_minus(m1, alpha);
  const int64_t k_plus = m1 - k_minus;
  if (k_minus > split.f_minus.size() || k_plus > split.f_plus.size())
    throw std::invalid_argument("sample_conditioned_g1: counts exceed a split side");
  Rng rng(seed);
  Graph g1(split.f_minus.order());
  add_uniform_subset(g1, split.f_minus.edges(), k_minus, rng);
  add_uniform_subset(g1, split.f_plus.edges(), k_plus, rng);
  return g1;
}

}  // namespace trilow
