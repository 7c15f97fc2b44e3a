#include "ktree/graph.hpp"

#include "ktree/error.hpp"

namespace ktree {

std::vector<Vertex> to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_vertex(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

VertexMask to_mask(std::span<const Vertex> vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) {
    if (v < 1 || v > kMaxOrder) {
      throw Error(ErrorCode::InvalidVertex, "vertex id " + std::to_string(v) + " out of range");
    }
    m |= vertex_bit(v);
  }
  return m;
}

std::string set_label(VertexMask m) {
  std::string out = "{";
  bool first = true;
  for_each_vertex(m, [&](Vertex v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  out += '}';
  return out;
}

std::strong_ordering lex_compare(VertexMask a, VertexMask b) {
  const VertexMask diff = a ^ b;
  if (diff == 0) return std::strong_ordering::equal;
  const Vertex d = lowest_vertex(diff);
  // Both lists agree below d. The list holding d continues with d; the
  // other continues with something larger, or ends and is a prefix.
  const VertexMask above = ~first_vertices(d);
  if (contains(a, d)) {
    return (b & above) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return (a & above) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

Graph::Graph(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw Error(ErrorCode::TooLarge, "graph order " + std::to_string(order) +
                                         " outside 0.." + std::to_string(kMaxOrder));
  }
  rows_.assign(static_cast<std::size_t>(order), 0);
}

void Graph::check_vertex(Vertex v) const {
  if (!has_vertex(v)) {
    throw Error(ErrorCode::InvalidVertex,
                "vertex " + std::to_string(v) + " not in 1.." + std::to_string(order()));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::InvalidVertex, "self-loop at " + std::to_string(u));
  rows_[u - 1] |= vertex_bit(v);
  rows_[v - 1] |= vertex_bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u - 1] &= ~vertex_bit(v);
  rows_[v - 1] &= ~vertex_bit(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexMask row : rows_) twice += static_cast<std::size_t>(popcount(row));
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 1; u <= order(); ++u) {
    for_each_vertex(rows_[u - 1] & ~first_vertices(u), [&](Vertex v) { out.emplace_back(u, v); });
  }
  return out;
}

bool Graph::is_clique(VertexMask m) const {
  VertexMask rest = m;
  while (rest != 0) {
    const Vertex v = lowest_vertex(rest);
    rest &= rest - 1;
    if ((rows_[v - 1] & rest) != rest) return false;
  }
  return true;
}

VertexMask Graph::component(Vertex v, VertexMask within) const {
  VertexMask seen = vertex_bit(v);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex x) { next |= rows_[x - 1]; });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool Graph::is_connected() const {
  if (order() == 0) return true;
  return component(1, vertices()) == vertices();
}

bool Graph::is_tree() const {
  return order() >= 1 && edge_count() == static_cast<std::size_t>(order() - 1) && is_connected();
}

Graph Graph::induced(VertexMask m) const {
  const std::vector<Vertex> keep = to_vertices(m & vertices());
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (has_edge(keep[i], keep[j])) {
        out.add_edge(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
      }
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> new_id) const {
  if (static_cast<int>(new_id.size()) != order()) {
    throw Error(ErrorCode::InvalidVertex, "relabeling has wrong length");
  }
  Graph out(order());
  for (auto [u, v] : edges()) out.add_edge(new_id[u - 1], new_id[v - 1]);
  return out;
}

Clique::Clique(std::initializer_list<Vertex> vertices)
    : Clique(from_vertices(std::span<const Vertex>(vertices.begin(), vertices.size()))) {}

Clique Clique::from_vertices(std::span<const Vertex> vertices) {
  const VertexMask m = to_mask(vertices);
  if (popcount(m) != static_cast<int>(vertices.size())) {
    throw Error(ErrorCode::NotAClique, "duplicate vertex ids in clique");
  }
  return Clique(m);
}

}  // namespace ktree
