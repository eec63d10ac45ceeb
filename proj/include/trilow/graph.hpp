#pragma once
// Simple graphs stored as packed adjacency bitsets, one 64-bit word row
// stride per vertex. Everything the toolkit counts (degrees, codegrees,
// triangles, induced edge counts) reduces to word-AND plus popcount, which
// keeps n = 2000 instances interactive on one core.

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace trilow {

using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;
using Mask = std::vector<uint64_t>;

// Lexicographic rank of the unordered pair {u,w} among all pairs of [n].
int64_t pair_count(int n);
int64_t pair_index(int n, int u, int w);
Edge pair_from_index(int n, int64_t idx);

namespace bits {

inline int64_t popcount(const uint64_t* a, int words) {
  int64_t c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(a[i]);
  return c;
}

inline int64_t and_popcount(const uint64_t* a, const uint64_t* b, int words) {
  int64_t c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

// Set bits of a & b with index strictly greater than from.
inline int64_t and_popcount_above(const uint64_t* a, const uint64_t* b, int words, int from) {
  const int w0 = (from + 1) >> 6;
  if (w0 >= words) return 0;
  const int b0 = (from + 1) & 63;
  int64_t c = std::popcount((a[w0] & b[w0]) & (~0ull << b0));
  for (int i = w0 + 1; i < words; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

// Visit set bits in ascending order.
template <typename F>
void for_each_bit(const uint64_t* a, int words, F&& f) {
  for (int w = 0; w < words; ++w) {
    uint64_t x = a[w];
    while (x) {
      f(w * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
}

}  // namespace bits

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const EdgeList& edges);

  int order() const { return n_; }
  int64_t size() const { return m_; }
  int words() const { return words_; }
  const uint64_t* row(int u) const { return rows_.data() + static_cast<size_t>(u) * words_; }

  bool has_edge(int u, int w) const;
  // Rejects self-loops, duplicates and out-of-range endpoints.
  void add_edge(int u, int w);

  int degree(int u) const;
  std::vector<int> degrees() const;
  int codegree(int u, int w) const;

  EdgeList edges() const;
  Graph complement() const;

  bool operator==(const Graph& other) const = default;

 private:
  uint64_t* mutable_row(int u) { return rows_.data() + static_cast<size_t>(u) * words_; }
  void check_vertex(int u) const;

  int n_ = 0;
  int words_ = 0;
  int64_t m_ = 0;
  std::vector<uint64_t> rows_;
};

struct LocalCounts {
  int codegree;
  int deg_u;
  int deg_w;
};
LocalCounts local_counts(const Graph& g, int u, int w);

int64_t count_triangles(const Graph& g);

struct TriangleClassCounts {
  int64_t t30 = 0;  // all three edges in the first graph
  int64_t t21 = 0;
  int64_t t12 = 0;
  int64_t t03 = 0;  // all three edges in the second graph
  int64_t total() const { return t30 + t21 + t12 + t03; }
};

// Classifies triangles of the union by how many edges each side supplies.
// g0 and g1 must share the vertex count and be edge-disjoint.
TriangleClassCounts count_triangles_by_class(const Graph& g0, const Graph& g1);

// Union of edge-disjoint graphs; throws if any edge appears in both.
Graph graph_union(const Graph& g0, const Graph& g1);

// Edge counts of g induced on one vertex subset or across two disjoint ones.
// Masks use the same packed layout as adjacency rows.
int64_t edges_in_subset(const Graph& g, const uint64_t* mask);
int64_t edges_between(const Graph& g, const uint64_t* mask_a, const uint64_t* mask_b);

Mask make_mask(int n);
void mask_set(Mask& m, int v);
bool mask_test(const Mask& m, int v);
int64_t mask_popcount(const Mask& m);

}  // namespace trilow
