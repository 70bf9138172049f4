#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tokeng/graph.hpp"

namespace tokeng {

/// A k-multisubset of a graph's vertex set, kept as a nondecreasing sequence
/// of ids. Strictly increasing instances double as plain k-subsets.
struct MultisetVertex {
  std::vector<int> elems;

  int k() const { return static_cast<int>(elems.size()); }

  bool strictly_increasing() const {
    for (std::size_t i = 1; i < elems.size(); ++i)
      if (elems[i - 1] >= elems[i]) return false;
    return true;
  }

  /// "1,2": elems joined by commas.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(elems[i]);
    }
    return out;
  }

  auto operator<=>(const MultisetVertex&) const = default;
};

inline MultisetVertex make_multiset(std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  return {std::move(elems)};
}

inline MultisetVertex make_pair_vertex(int a, int b) {
  if (a > b) std::swap(a, b);
  return {{a, b}};
}

/// Exact binomial coefficient; throws on overflow of unsigned long long.
inline unsigned long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    unsigned long long num = static_cast<unsigned long long>(n - k + i);
    if (r > std::numeric_limits<unsigned long long>::max() / num)
      throw std::overflow_error("binomial coefficient overflow");
    r = r * num / static_cast<unsigned long long>(i);
  }
  return r;
}

enum class BigKind { multiset, subset };

/// All k-multisubsets (or k-subsets) of [n], in lexicographic order.
inline std::vector<MultisetVertex> enumerate_k_multisets(int n, int k, BigKind kind) {
  if (n < 1) throw std::invalid_argument("base order must be >= 1");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (kind == BigKind::subset && k > n - 1)
    throw std::invalid_argument("subset kind requires 1 <= k <= n-1");
  std::vector<MultisetVertex> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  if (kind == BigKind::multiset) {
    std::fill(cur.begin(), cur.end(), 1);
  } else {
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  }
  for (;;) {
    out.push_back({cur});
    // advance the rightmost position that still has room, reset the tail
    int p = k - 1;
    if (kind == BigKind::multiset) {
      while (p >= 0 && cur[static_cast<std::size_t>(p)] == n) --p;
      if (p < 0) break;
      int base = ++cur[static_cast<std::size_t>(p)];
      for (int q = p + 1; q < k; ++q) cur[static_cast<std::size_t>(q)] = base;
    } else {
      while (p >= 0 && cur[static_cast<std::size_t>(p)] == n - (k - 1 - p)) --p;
      if (p < 0) break;
      int base = ++cur[static_cast<std::size_t>(p)];
      for (int q = p + 1; q < k; ++q) cur[static_cast<std::size_t>(q)] = ++base;
    }
  }
  return out;
}

/// Per-id absolute multiplicity difference, returned sorted.
inline std::vector<int> multiset_sym_diff(const MultisetVertex& a, const MultisetVertex& b) {
  if (a.k() != b.k())
    throw std::invalid_argument("symmetric difference needs multisets of equal size");
  std::vector<int> out;
  std::size_t i = 0, j = 0;
  while (i < a.elems.size() || j < b.elems.size()) {
    if (j == b.elems.size() || (i < a.elems.size() && a.elems[i] < b.elems[j])) {
      out.push_back(a.elems[i++]);
    } else if (i == a.elems.size() || b.elems[j] < a.elems[i]) {
      out.push_back(b.elems[j++]);
    } else {
      ++i;  // one copy on each side cancels
      ++j;
    }
  }
  return out;
}

/// M_k(G) or F_k(G) on dense ids 1..N, with the bijection between dense ids
/// and multiset vertices. Dense ids follow lexicographic order of elems.
struct LabeledBigGraph {
  Graph graph;
  std::vector<MultisetVertex> vertex_of;  // dense id i <-> vertex_of[i-1]
  BigKind kind = BigKind::multiset;
  int k = 0;
  int base_order = 0;

  const MultisetVertex& vertex(int dense_id) const {
    if (dense_id < 1 || dense_id > static_cast<int>(vertex_of.size()))
      throw std::invalid_argument("dense id out of range: " + std::to_string(dense_id));
    return vertex_of[static_cast<std::size_t>(dense_id - 1)];
  }

  std::optional<int> try_index_of(const MultisetVertex& v) const {
    auto it = std::lower_bound(vertex_of.begin(), vertex_of.end(), v);
    if (it == vertex_of.end() || !(*it == v)) return std::nullopt;
    return static_cast<int>(it - vertex_of.begin()) + 1;
  }

  int index_of(const MultisetVertex& v) const {
    if (auto id = try_index_of(v)) return *id;
    throw std::invalid_argument("multiset vertex " + v.to_string() +
                                " is not a vertex of this graph");
  }
};

/// Desk-scale guardrails for big-graph construction.
struct BigGraphLimits {
  int max_k = 6;
  unsigned long long max_vertices = 1'000'000;
};

/// Builds M_k(g) (kind = multiset) or F_k(g) (kind = subset): vertices are the
/// k-multisubsets/k-subsets of V(g), adjacent when their multiset symmetric
/// difference is a pair of adjacent vertices of g. Adjacency is generated by
/// replacing one member x of a vertex with a neighbor of x, which is
/// equivalent to the symmetric-difference rule and avoids pairwise testing.
inline LabeledBigGraph build_big_graph(const Graph& g, int k, BigKind kind,
                                       const BigGraphLimits& limits = {}) {
  if (g.order() < 2) throw std::invalid_argument("build_big_graph needs a base order >= 2");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > limits.max_k)
    throw std::invalid_argument("k = " + std::to_string(k) + " exceeds the limit of " +
                                std::to_string(limits.max_k));
  unsigned long long n_vertices = kind == BigKind::multiset
                                      ? binomial(g.order() + k - 1, k)
                                      : binomial(g.order(), k);
  if (n_vertices > limits.max_vertices)
    throw std::invalid_argument("big graph would have " + std::to_string(n_vertices) +
                                " vertices, over the limit of " +
                                std::to_string(limits.max_vertices));

  LabeledBigGraph big;
  big.vertex_of = enumerate_k_multisets(g.order(), k, kind);
  big.kind = kind;
  big.k = k;
  big.base_order = g.order();

  std::vector<Graph::Edge> edges;
  std::vector<int> scratch;
  const int n = static_cast<int>(big.vertex_of.size());
  for (int a = 1; a <= n; ++a) {
    const auto& elems = big.vertex_of[static_cast<std::size_t>(a - 1)].elems;
    for (int p = 0; p < k; ++p) {
      if (p > 0 && elems[static_cast<std::size_t>(p)] == elems[static_cast<std::size_t>(p - 1)])
        continue;  // same source value, same candidates
      const int x = elems[static_cast<std::size_t>(p)];
      for (int y : g.neighbors(x)) {
        if (kind == BigKind::subset &&
            std::binary_search(elems.begin(), elems.end(), y))
          continue;  // replacement would repeat an element
        scratch = elems;
        scratch[static_cast<std::size_t>(p)] = y;
        std::sort(scratch.begin(), scratch.end());
        int b = big.index_of({scratch});
        edges.emplace_back(std::min(a, b), std::max(a, b));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  big.graph = Graph(n, std::move(edges));
  return big;
}

/// Maps a multiset-vertex sequence to dense ids of the given big graph.
inline std::vector<int> to_dense(const LabeledBigGraph& big,
                                 const std::vector<MultisetVertex>& seq) {
  std::vector<int> out;
  out.reserve(seq.size());
  for (const auto& v : seq) out.push_back(big.index_of(v));
  return out;
}

}  // namespace tokeng
