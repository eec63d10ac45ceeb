#include "trilow/graph.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trilow {

int64_t pair_count(int n) { return static_cast<int64_t>(n) * (n - 1) / 2; }

int64_t pair_index(int n, int u, int w) {
  if (u > w) std::swap(u, w);
  if (u < 0 || w >= n || u == w) throw std::invalid_argument("pair_index: bad pair");
  return static_cast<int64_t>(u) * n - static_cast<int64_t>(u) * (u + 1) / 2 + (w - u - 1);
}

Edge pair_from_index(int n, int64_t idx) {
  if (idx < 0 || idx >= pair_count(n)) throw std::invalid_argument("pair_from_index: out of range");
  // Float inversion of the row offset, fixed up exactly.
  int u = static_cast<int>(n - 0.5 - std::sqrt((n - 0.5) * (n - 0.5) - 2.0 * static_cast<double>(idx)));
  if (u < 0) u = 0;
  if (u > n - 2) u = n - 2;
  auto offset = [n](int v) { return static_cast<int64_t>(v) * n - static_cast<int64_t>(v) * (v + 1) / 2; };
  while (offset(u) > idx) --u;
  while (u + 1 <= n - 2 && offset(u + 1) <= idx) ++u;
  const int w = static_cast<int>(idx - offset(u)) + u + 1;
  return {u, w};
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), m_(0) {
  if (n < 0) throw std::invalid_argument("Graph: negative order");
  rows_.assign(static_cast<size_t>(n_) * words_, 0ull);
}

Graph Graph::from_edges(int n, const EdgeList& edges) {
  Graph g(n);
  for (const auto& [u, w] : edges) g.add_edge(u, w);
  return g;
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_) throw std::invalid_argument("Graph: vertex out of range");
}

bool Graph::has_edge(int u, int w) const {
  check_vertex(u);
  check_vertex(w);
  if (u == w) return false;
  return (row(u)[w >> 6] >> (w & 63)) & 1ull;
}

void Graph::add_edge(int u, int w) {
  check_vertex(u);
  check_vertex(w);
  if (u == w) throw std::invalid_argument("Graph::add_edge: self-loop");
  if (has_edge(u, w)) throw std::invalid_argument("Graph::add_edge: duplicate edge");
  mutable_row(u)[w >> 6] |= 1ull << (w & 63);
  mutable_row(w)[u >> 6] |= 1ull << (u & 63);
  ++m_;
}

int Graph::degree(int u) const {
  check_vertex(u);
  return static_cast<int>(bits::popcount(row(u), words_));
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int u = 0; u < n_; ++u) d[u] = static_cast<int>(bits::popcount(row(u), words_));
  return d;
}

int Graph::codegree(int u, int w) const {
  check_vertex(u);
  check_vertex(w);
  return static_cast<int>(bits::and_popcount(row(u), row(w), words_));
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    bits::for_each_bit(row(u), words_, [&](int w) {
      if (w > u) out.emplace_back(u, w);
    });
  }
  return out;
}

Graph Graph::complement() const {
  Graph c(n_);
  for (int u = 0; u < n_; ++u) {
    uint64_t* dst = c.mutable_row(u);
    const uint64_t* src = row(u);
    for (int i = 0; i < words_; ++i) dst[i] = ~src[i];
    dst[u >> 6] &= ~(1ull << (u & 63));
    // Clear the padding bits past vertex n-1.
    const int tail = n_ & 63;
    if (tail) dst[words_ - 1] &= (~0ull) >> (64 - tail);
  }
  c.m_ = pair_count(n_) - m_;
  return c;
}

LocalCounts local_counts(const Graph& g, int u, int w) {
  if (u == w) throw std::invalid_argument("local_counts: identical endpoints");
  return {g.codegree(u, w), g.degree(u), g.degree(w)};
}

int64_t count_triangles(const Graph& g) {
  const int W = g.words();
  int64_t total = 0;
  for (int u = 0; u < g.order(); ++u) {
    bits::for_each_bit(g.row(u), W, [&](int v) {
      // Each triangle u<v<x is charged to its least edge {u,v}.
      if (v > u) total += bits::and_popcount_above(g.row(u), g.row(v), W, v);
    });
  }
  return total;
}

Graph graph_union(const Graph& g0, const Graph& g1) {
  if (g0.order() != g1.order()) throw std::invalid_argument("graph_union: order mismatch");
  Graph u = g0;
  for (const auto& [a, b] : g1.edges()) u.add_edge(a, b);
  return u;
}

TriangleClassCounts count_triangles_by_class(const Graph& g0, const Graph& g1) {
  if (g0.order() != g1.order()) throw std::invalid_argument("count_triangles_by_class: order mismatch");
  const int n = g0.order();
  const int W = g0.words();
  for (int u = 0; u < n; ++u) {
    const uint64_t* a = g0.row(u);
    const uint64_t* b = g1.row(u);
    for (int i = 0; i < W; ++i) {
      if (a[i] & b[i]) throw std::invalid_argument("count_triangles_by_class: graphs share an edge");
    }
  }
  TriangleClassCounts c;
  c.t30 = count_triangles(g0);
  c.t03 = count_triangles(g1);
  // A mixed triangle with one g1 edge {u,w} is a common g0 neighbor of u and w;
  // one with two g1 edges has a unique g1-apex whose g1 neighbors are g0-adjacent.
  for (const auto& [u, w] : g1.edges()) c.t21 += g0.codegree(u, w);
  for (int u = 0; u < n; ++u) c.t12 += edges_in_subset(g0, g1.row(u));
  return c;
}

int64_t edges_in_subset(const Graph& g, const uint64_t* mask) {
  const int W = g.words();
  int64_t twice = 0;
  bits::for_each_bit(mask, W, [&](int v) { twice += bits::and_popcount(g.row(v), mask, W); });
  return twice / 2;
}

int64_t edges_between(const Graph& g, const uint64_t* mask_a, const uint64_t* mask_b) {
  const int W = g.words();
  int64_t c = 0;
  bits::for_each_bit(mask_a, W, [&](int v) { c += bits::and_popcount(g.row(v), mask_b, W); });
  return c;
}

Mask make_mask(int n) { return Mask(static_cast<size_t>((n + 63) / 64), 0ull); }

void mask_set(Mask& m, int v) { m[v >> 6] |= 1ull << (v & 63); }

bool mask_test(const Mask& m, int v) { return (m[v >> 6] >> (v & 63)) & 1ull; }

int64_t mask_popcount(const Mask& m) { return bits::popcount(m.data(), static_cast<int>(m.size())); }

}  // namespace trilow
