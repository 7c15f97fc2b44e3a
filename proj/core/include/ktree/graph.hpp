#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ktree {

// Vertex ids are 1-based in every public interface. Vertex v occupies bit
// v-1 of a VertexMask, which bounds the order of any graph by kMaxOrder.
using Vertex = int;
using VertexMask = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr VertexMask vertex_bit(Vertex v) { return VertexMask{1} << (v - 1); }

constexpr VertexMask first_vertices(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

constexpr int popcount(VertexMask m) { return std::popcount(m); }

constexpr Vertex lowest_vertex(VertexMask m) { return std::countr_zero(m) + 1; }

constexpr Vertex highest_vertex(VertexMask m) { return 64 - std::countl_zero(m); }

constexpr bool contains(VertexMask m, Vertex v) { return (m & vertex_bit(v)) != 0; }

template <class F>
void for_each_vertex(VertexMask m, F&& f) {
  while (m != 0) {
    f(lowest_vertex(m));
    m &= m - 1;
  }
}

std::vector<Vertex> to_vertices(VertexMask m);
VertexMask to_mask(std::span<const Vertex> vertices);

/// Renders a vertex set as "{1,2,5}".
std::string set_label(VertexMask m);

/// Lexicographic order of the sorted vertex lists of two sets.
std::strong_ordering lex_compare(VertexMask a, VertexMask b);

/// Simple undirected graph on vertices 1..order().
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  int order() const { return static_cast<int>(rows_.size()); }
  VertexMask vertices() const { return first_vertices(order()); }
  bool has_vertex(Vertex v) const { return v >= 1 && v <= order(); }

  VertexMask neighbors(Vertex v) const { return rows_[v - 1]; }
  int degree(Vertex v) const { return popcount(rows_[v - 1]); }
  bool has_edge(Vertex u, Vertex v) const { return (rows_[u - 1] & vertex_bit(v)) != 0; }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::size_t edge_count() const;
  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool is_clique(VertexMask m) const;
  /// Vertices reachable from v using only vertices in `within` (v included).
  VertexMask component(Vertex v, VertexMask within) const;
  bool is_connected() const;
  bool is_tree() const;
  /// Induced subgraph on `m`, relabeled to 1..|m| in increasing id order.
  Graph induced(VertexMask m) const;
  /// Graph with vertex v renamed to new_id[v-1].
  Graph relabeled(std::span<const Vertex> new_id) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexMask> rows_;
};

/// A strictly sorted set of pairwise adjacent vertex ids. Also used for
/// (k+1)-cliques. Ordering is lexicographic on the sorted id list.
class Clique {
 public:
  Clique() = default;
  explicit Clique(VertexMask m) : mask_(m) {}
  Clique(std::initializer_list<Vertex> vertices);

  /// Rejects duplicate ids.
  static Clique from_vertices(std::span<const Vertex> vertices);

  VertexMask mask() const { return mask_; }
  int size() const { return popcount(mask_); }
  bool contains(Vertex v) const { return ktree::contains(mask_, v); }
  std::vector<Vertex> vertices() const { return to_vertices(mask_); }
  std::string label() const { return set_label(mask_); }

  friend bool operator==(const Clique&, const Clique&) = default;
  friend std::strong_ordering operator<=>(const Clique& a, const Clique& b) {
    return lex_compare(a.mask_, b.mask_);
  }

 private:
  VertexMask mask_ = 0;
};

}  // namespace ktree
