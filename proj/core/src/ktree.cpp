#include "ktree/ktree.hpp"

#include <algorithm>
#include <string>

#include "ktree/error.hpp"

namespace ktree {

bool Construction::is_ordered(int k) const {
  if (base.mask() != first_vertices(k)) return false;
  for (std::size_t i = 0; i < adds.size(); ++i) {
    if (adds[i].vertex != k + 1 + static_cast<int>(i)) return false;
  }
  return true;
}

KTree rebuild(int k, int n, const Construction& construction) {
  if (k < 1) throw Error(ErrorCode::BadK, "k must be at least 1");
  if (n < k) throw Error(ErrorCode::SizeTooSmall, "order below k");
  if (n > kMaxOrder) throw Error(ErrorCode::TooLarge, "order above " + std::to_string(kMaxOrder));
  if (construction.base.size() != k || (construction.base.mask() & ~first_vertices(n)) != 0) {
    throw Error(ErrorCode::AttachmentNotClique, "base must be k vertices within 1..n");
  }
  if (static_cast<int>(construction.adds.size()) != n - k) {
    throw Error(ErrorCode::BadVertexOrder, "expected " + std::to_string(n - k) + " attachments");
  }

  Graph g(n);
  VertexMask present = construction.base.mask();
  for_each_vertex(present, [&](Vertex a) {
    for_each_vertex(present & ~first_vertices(a), [&](Vertex b) { g.add_edge(a, b); });
  });
  for (const Attachment& add : construction.adds) {
    const Vertex v = add.vertex;
    if (v < 1 || v > n || contains(present, v)) {
      throw Error(ErrorCode::BadVertexOrder, "vertex " + std::to_string(v) + " is not new");
    }
    const VertexMask c = add.clique.mask();
    if (popcount(c) != k || (c & ~present) != 0 || !g.is_clique(c)) {
      throw Error(ErrorCode::AttachmentNotClique,
                  add.clique.label() + " is not a k-clique when adding " + std::to_string(v));
    }
    for_each_vertex(c, [&](Vertex w) { g.add_edge(v, w); });
    present |= vertex_bit(v);
  }
  return KTree(k, std::move(g), construction);
}

KTree build_from_construction(int k, std::span<const Attachment> adds) {
  if (k < 1) throw Error(ErrorCode::BadK, "k must be at least 1");
  Construction c;
  c.base = Clique(first_vertices(k));
  c.adds.assign(adds.begin(), adds.end());
  for (std::size_t i = 0; i < adds.size(); ++i) {
    const Vertex expected = k + 1 + static_cast<int>(i);
    if (adds[i].vertex != expected) {
      throw Error(ErrorCode::BadVertexOrder, "expected new vertex " + std::to_string(expected) +
                                                 ", got " + std::to_string(adds[i].vertex));
    }
  }
  return rebuild(k, k + static_cast<int>(adds.size()), c);
}

KTree recognize_ktree(const Graph& graph, int k) {
  if (k < 1) throw Error(ErrorCode::BadK, "k must be at least 1");
  const int n = graph.order();
  if (n < k) throw Error(ErrorCode::NotKTree, "fewer than k vertices");
  if (!graph.is_connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");

  const std::size_t expected_edges =
      static_cast<std::size_t>(k) * static_cast<std::size_t>(n) -
      static_cast<std::size_t>(k * (k + 1) / 2);
  if (graph.edge_count() != expected_edges) {
    throw Error(ErrorCode::NotKTree, "edge count " + std::to_string(graph.edge_count()) +
                                         " differs from k*n - k(k+1)/2 = " +
                                         std::to_string(expected_edges));
  }

  VertexMask remaining = graph.vertices();
  std::vector<Attachment> peeled;
  while (popcount(remaining) > k) {
    Vertex chosen = 0;
    VertexMask nbrs = 0;
    VertexMask candidates = remaining;
    while (candidates != 0) {
      const Vertex v = lowest_vertex(candidates);
      candidates &= candidates - 1;
      const VertexMask nb = graph.neighbors(v) & remaining;
      if (popcount(nb) == k && graph.is_clique(nb)) {
        chosen = v;
        nbrs = nb;
        break;
      }
    }
    if (chosen == 0) {
      throw Error(ErrorCode::NotKTree, "no simplicial vertex of degree k among " +
                                           set_label(remaining));
    }
    peeled.push_back({chosen, Clique(nbrs)});
    remaining &= ~vertex_bit(chosen);
  }
  if (!graph.is_clique(remaining)) {
    throw Error(ErrorCode::NotKTree, "residue " + set_label(remaining) + " is not a clique");
  }

  Construction c;
  c.base = Clique(remaining);
  c.adds.assign(peeled.rbegin(), peeled.rend());
  return rebuild(k, n, c);
}

std::vector<Clique> k_cliques(const KTree& tree) {
  const Construction& c = tree.construction();
  std::vector<Clique> out;
  out.reserve(1 + c.adds.size() * static_cast<std::size_t>(tree.k()));
  out.push_back(c.base);
  for (const Attachment& add : c.adds) {
    const VertexMask with = add.clique.mask() | vertex_bit(add.vertex);
    for_each_vertex(add.clique.mask(), [&](Vertex x) { out.emplace_back(with & ~vertex_bit(x)); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clique> kp1_cliques(const KTree& tree) {
  std::vector<Clique> out;
  for (const Attachment& add : tree.construction().adds) {
    out.emplace_back(add.clique.mask() | vertex_bit(add.vertex));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(CliqueKind kind) {
  switch (kind) {
    case CliqueKind::isolated: return "isolated";
    case CliqueKind::end: return "end";
    case CliqueKind::degree2: return "degree2";
    case CliqueKind::major: return "major";
  }
  return "unknown";
}

void require_k_clique(const KTree& tree, const Clique& c) {
  if (c.size() != tree.k() || (c.mask() & ~tree.graph().vertices()) != 0 ||
      !tree.graph().is_clique(c.mask())) {
    throw Error(ErrorCode::NotAClique, c.label() + " is not a " + std::to_string(tree.k()) +
                                           "-clique of the k-tree");
  }
}

VertexMask common_neighbors(const KTree& tree, VertexMask c) {
  VertexMask common = tree.graph().vertices() & ~c;
  for_each_vertex(c, [&](Vertex v) { common &= tree.graph().neighbors(v); });
  return common;
}

CliqueClass classify_degree(int degree) {
  CliqueKind kind = CliqueKind::major;
  if (degree == 0) kind = CliqueKind::isolated;
  else if (degree == 1) kind = CliqueKind::end;
  else if (degree == 2) kind = CliqueKind::degree2;
  return {degree, kind};
}

CliqueClass clique_degree(const KTree& tree, const Clique& c) {
  require_k_clique(tree, c);
  // In a k-tree every common neighbour of a k-clique closes a (k+1)-clique.
  return classify_degree(popcount(common_neighbors(tree, c.mask())));
}

VertexMask k_leaf_mask(const KTree& tree) {
  if (tree.is_trivial()) throw Error(ErrorCode::TrivialKTree, "K_k has no k-leaves");
  VertexMask out = 0;
  for (Vertex v = 1; v <= tree.order(); ++v) {
    if (tree.graph().degree(v) == tree.k()) out |= vertex_bit(v);
  }
  return out;
}

std::vector<Vertex> k_leaves(const KTree& tree) { return to_vertices(k_leaf_mask(tree)); }

std::vector<Clique> adjacent_cliques(const KTree& tree, const Clique& c) {
  require_k_clique(tree, c);
  std::vector<Clique> out;
  for_each_vertex(common_neighbors(tree, c.mask()), [&](Vertex v) {
    for_each_vertex(c.mask(), [&](Vertex x) {
      out.emplace_back((c.mask() & ~vertex_bit(x)) | vertex_bit(v));
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_path_type(const KTree& tree) {
  if (tree.order() <= tree.k() + 1) return true;
  return popcount(k_leaf_mask(tree)) == 2;
}

}  // namespace ktree
