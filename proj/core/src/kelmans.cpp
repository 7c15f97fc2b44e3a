#include "ktree/kelmans.hpp"

#include "ktree/error.hpp"
#include "ktree/tree_poly.hpp"

namespace ktree {
namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v));
}

void require_adjacent(const Graph& tree, Vertex u, Vertex v) {
  require_tree(tree);
  require_vertex(tree, u);
  require_vertex(tree, v);
  if (!tree.has_edge(u, v)) {
    throw Error(ErrorCode::NotAdjacent,
                std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
  }
}

std::string pair_label(Vertex u, Vertex v) {
  return "u=" + std::to_string(u) + " v=" + std::to_string(v);
}

}  // namespace

VertexMask kelmans_candidates(const Graph& g, Vertex v, Vertex u) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) throw Error(ErrorCode::SameVertex, "Kelmans move needs two distinct vertices");
  return g.neighbors(v) & ~g.neighbors(u) & ~vertex_bit(u);
}

KelmansMove make_kelmans_move(const Graph& g, Vertex v, Vertex u, VertexMask moved) {
  const VertexMask n2 = kelmans_candidates(g, v, u);
  if ((moved & ~n2) != 0) {
    throw Error(ErrorCode::BadMoveSet, set_label(moved) + " is not contained in N(v)\\N[u] = " +
                                           set_label(n2));
  }
  return {v, u, moved, moved == n2};
}

Graph apply(const Graph& g, const KelmansMove& move) {
  Graph out = g;
  for_each_vertex(move.moved, [&](Vertex w) {
    out.remove_edge(move.from, w);
    out.add_edge(move.to, w);
  });
  return out;
}

Graph kelmans(const Graph& g, Vertex v, Vertex u) {
  return apply(g, make_kelmans_move(g, v, u, kelmans_candidates(g, v, u)));
}

Graph partial_kelmans(const Graph& g, Vertex v, Vertex u, VertexMask moved) {
  return apply(g, make_kelmans_move(g, v, u, moved));
}

TheoremReport make_report(std::string check, std::string instance, Rational lhs, Rational rhs,
                          bool predicted_equality) {
  TheoremReport r;
  r.check = std::move(check);
  r.instance = std::move(instance);
  r.inequality_holds = lhs >= rhs;
  r.equality = lhs == rhs;
  r.predicted_equality = predicted_equality;
  r.consistent = r.equality == r.predicted_equality;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

bool is_path(const Graph& tree) {
  if (!tree.is_tree()) return false;
  for (Vertex v = 1; v <= tree.order(); ++v) {
    if (tree.degree(v) > 2) return false;
  }
  return true;
}

bool path_with_leaf_predicate(const Graph& tree, Vertex x) {
  return is_path(tree) && tree.degree(x) <= 1;
}

bool component_path_predicate(const Graph& tree, Vertex v, Vertex u) {
  const VertexMask comp = tree.component(u, tree.vertices() & ~vertex_bit(v));
  bool path = true;
  for_each_vertex(comp, [&](Vertex x) {
    if (popcount(tree.neighbors(x) & comp) > 2) path = false;
  });
  return path && popcount(tree.neighbors(u) & comp) <= 1;
}

std::pair<TheoremReport, TheoremReport> check_kelmans_pair(const Graph& tree, Vertex u, Vertex v) {
  require_adjacent(tree, u, v);
  const Graph moved = kelmans(tree, v, u);
  const bool u_leaf = tree.degree(u) == 1;
  const bool v_leaf = tree.degree(v) == 1;

  TheoremReport to_v = make_report(
      "kelmans_v_vs_u", pair_label(u, v), local_mean_order_vertex(moved, v),
      local_mean_order_vertex(tree, u), u_leaf || (is_path(tree) && v_leaf));
  TheoremReport to_u = make_report(
      "kelmans_u_vs_v", pair_label(u, v), local_mean_order_vertex(tree, v),
      local_mean_order_vertex(moved, u), component_path_predicate(tree, v, u));
  return {std::move(to_v), std::move(to_u)};
}

TheoremReport check_kelmans_gain(const Graph& tree, Vertex u, Vertex v) {
  require_adjacent(tree, u, v);
  const Graph moved = kelmans(tree, v, u);
  const bool predicted =
      tree.degree(v) == 1 || (is_path(tree) && tree.degree(u) == 1);
  return make_report("kelmans_gain", pair_label(u, v), local_mean_order_vertex(moved, v),
                     local_mean_order_vertex(tree, v), predicted);
}

TheoremReport check_partial_kelmans(const Graph& tree, Vertex u, Vertex v, VertexMask moved) {
  require_adjacent(tree, u, v);
  const Graph after = partial_kelmans(tree, v, u, moved);

  bool predicted = moved == 0;
  if (!predicted && tree.degree(u) == 1 && popcount(moved) == 1) {
    const Vertex v1 = lowest_vertex(moved);
    predicted = component_path_predicate(tree, v, v1);
  }
  return make_report("partial_kelmans", pair_label(u, v) + " W=" + set_label(moved),
                     local_mean_order_vertex(after, v), local_mean_order_vertex(tree, v),
                     predicted);
}

TheoremReport check_leaf_neighbor(const Graph& tree, Vertex v, Vertex u) {
  require_adjacent(tree, u, v);
  if (tree.degree(v) != 1) throw Error(ErrorCode::NotALeaf, std::to_string(v) + " is not a leaf");
  return make_report("leaf_neighbor", "leaf=" + std::to_string(v) + " nbr=" + std::to_string(u),
                     local_mean_order_vertex(tree, v), local_mean_order_vertex(tree, u),
                     is_path(tree));
}

}  // namespace ktree
