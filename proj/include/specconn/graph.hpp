#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace specconn {

using Vertex = int;

/// Subset of {0, ..., 63} stored as a single machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(Vertex v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
  /// Least member; undefined on the empty set.
  constexpr Vertex front() const { return std::countr_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1 with n <= 64.
///
/// Immutable once built. Edits go through GraphBuilder or the `with_*`
/// helpers that return a modified copy.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(Vertex v) const { return rows_[v]; }
  /// N[v]
  VertexSet closed_neighbors(Vertex v) const { return rows_[v] | VertexSet::singleton(v); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  int degree(Vertex v) const { return rows_[v].size(); }
  int edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  /// Same order, every edge at `v` removed.
  Graph isolate(Vertex v) const;
  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const Vertex> perm) const;
  /// Subgraph induced by `keep`, compacted to 0..|keep|-1 in increasing order.
  Graph induced(VertexSet keep) const;
  Graph complement() const;

  bool connected() const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> rows_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : graph_(n) {}
  explicit GraphBuilder(Graph g) : graph_(std::move(g)) {}

  int order() const { return graph_.order(); }
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  /// Makes `members` a clique.
  GraphBuilder& add_clique(VertexSet members);
  /// Adds every edge between `a` and `b` (sets assumed disjoint).
  GraphBuilder& add_biclique(VertexSet a, VertexSet b);

  const Graph& peek() const { return graph_; }
  Graph build() && { return std::move(graph_); }
  Graph build() const& { return graph_; }

 private:
  Graph graph_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// K_{1,leaves}, center 0.
Graph star_graph(int leaves);

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> degrees;
};

DegreeProfile degree_profile(const Graph& g);

/// Connected components of g - removed, ordered by least member. Empty iff
/// `removed` covers every vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet removed = {});

/// Component of g - removed containing `seed`.
VertexSet component_of(const Graph& g, Vertex seed, VertexSet removed = {});

}  // namespace specconn
