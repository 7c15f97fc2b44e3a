#include "ktree/char_tree.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

#include "ktree/error.hpp"
#include "ktree/kelmans.hpp"

namespace ktree {
namespace {

/// Vertices of degree exactly k inside the induced subgraph on `within`.
VertexMask leaves_within(const Graph& g, int k, VertexMask within) {
  VertexMask out = 0;
  for_each_vertex(within, [&](Vertex x) {
    if (popcount(g.neighbors(x) & within) == k) out |= vertex_bit(x);
  });
  return out;
}

void require_outside_vertex(const KTree& tree, const Clique& c, Vertex v) {
  if (!tree.graph().has_vertex(v)) {
    throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " not in the k-tree");
  }
  if (c.contains(v)) {
    throw Error(ErrorCode::VertexInClique, std::to_string(v) + " lies in " + c.label());
  }
}

IntPolynomial char_tree_root_poly(const KTree& tree, const Clique& c) {
  const CharTreeParents p = char_tree_parents(tree, c);
  std::array<IntPolynomial, kMaxOrder + 1> poly;  // slot 0 is the clique node
  poly[0] = IntPolynomial::x();
  for (Vertex x : p.order) poly[x] = IntPolynomial::x();
  for (auto it = p.order.rbegin(); it != p.order.rend(); ++it) {
    poly[p.parent[*it]].multiply_one_plus(poly[*it]);
  }
  return std::move(poly[0]);
}

}  // namespace

VertexMask ElimSequence::vertices() const {
  VertexMask m = clique.mask() | vertex_bit(target);
  for (Vertex w : interior) m |= vertex_bit(w);
  return m;
}

ElimSequence elimination_sequence(const KTree& tree, const Clique& c, Vertex v) {
  require_k_clique(tree, c);
  require_outside_vertex(tree, c, v);
  const Graph& g = tree.graph();
  const int k = tree.k();
  const VertexMask keep = c.mask() | vertex_bit(v);

  VertexMask current = g.vertices();
  for (;;) {
    const VertexMask removable = leaves_within(g, k, current) & ~keep;
    if (removable == 0) break;
    current &= ~vertex_bit(lowest_vertex(removable));
  }

  ElimSequence seq;
  seq.clique = c;
  seq.target = v;
  VertexMask rest = current & ~vertex_bit(v);
  while (rest != c.mask()) {
    const VertexMask next = leaves_within(g, k, rest) & ~c.mask();
    if (next == 0) throw Error(ErrorCode::NotKTree, "elimination stalled above " + c.label());
    const Vertex w = lowest_vertex(next);
    seq.interior.push_back(w);
    rest &= ~vertex_bit(w);
  }
  std::reverse(seq.interior.begin(), seq.interior.end());

  if (const std::string problem = check_elimination_sequence(tree, seq); !problem.empty()) {
    throw Error(ErrorCode::NotKTree, "elimination sequence check failed: " + problem);
  }
  return seq;
}

std::string check_elimination_sequence(const KTree& tree, const ElimSequence& seq) {
  const Graph& g = tree.graph();
  const int k = tree.k();
  const VertexMask p = seq.vertices();
  if (popcount(p) != k + 1 + static_cast<int>(seq.interior.size())) return "repeated vertices";

  try {
    (void)recognize_ktree(g.induced(p), k);
  } catch (const Error& e) {
    return std::string("induced subgraph is not a k-tree: ") + e.what();
  }
  const VertexMask leaves = leaves_within(g, k, p);
  if (popcount(p) > k + 1 && popcount(leaves) != 2) return "not path-type";
  if ((leaves & seq.clique.mask()) == 0) return "clique is not simplicial";
  if (!contains(leaves, seq.target)) return "target is not a k-leaf";

  VertexMask rest = p;
  auto peel = [&](Vertex x) {
    if (!contains(leaves_within(g, k, rest), x)) return false;
    rest &= ~vertex_bit(x);
    return true;
  };
  if (!peel(seq.target)) return "target cannot be eliminated first";
  for (auto it = seq.interior.rbegin(); it != seq.interior.rend(); ++it) {
    if (!peel(*it)) return "vertex " + std::to_string(*it) + " is not a k-leaf when eliminated";
  }
  if (rest != seq.clique.mask()) return "elimination does not end at the clique";
  return {};
}

CharTreeParents char_tree_parents(const KTree& tree, const Clique& c) {
  const Graph& g = tree.graph();
  const int k = tree.k();
  const int n = tree.order();

  CharTreeParents out;
  out.parent.assign(static_cast<std::size_t>(n) + 1, 0);
  out.order.reserve(static_cast<std::size_t>(n - k));
  std::array<int, kMaxOrder + 1> added_at{};

  VertexMask built = c.mask();
  VertexMask pending = g.vertices() & ~built;
  int step = 0;
  while (pending != 0) {
    VertexMask scan = pending;
    Vertex chosen = 0;
    VertexMask attach = 0;
    while (scan != 0) {
      const Vertex x = lowest_vertex(scan);
      scan &= scan - 1;
      const VertexMask nb = g.neighbors(x) & built;
      if (popcount(nb) == k && g.is_clique(nb)) {
        chosen = x;
        attach = nb;
        break;
      }
    }
    if (chosen == 0) throw Error(ErrorCode::NotKTree, "cannot rebuild from " + c.label());

    Vertex parent = 0;
    int newest = 0;
    for_each_vertex(attach & ~c.mask(), [&](Vertex y) {
      if (added_at[y] > newest) {
        newest = added_at[y];
        parent = y;
      }
    });
    out.parent[chosen] = parent;
    out.order.push_back(chosen);
    added_at[chosen] = ++step;
    built |= vertex_bit(chosen);
    pending &= ~vertex_bit(chosen);
  }
  return out;
}

Vertex CharTree::node_of(Vertex original) const {
  const auto it = std::lower_bound(label.begin() + 1, label.end(), original);
  if (it == label.end() || *it != original) {
    throw Error(ErrorCode::InvalidVertex, std::to_string(original) + " has no node in T'_C");
  }
  return static_cast<Vertex>(it - label.begin()) + 1;
}

std::string CharTree::node_name(Vertex node) const {
  return node == kCliqueNode ? "C" + clique.label() : std::to_string(label[node - 1]);
}

std::vector<std::pair<std::string, std::string>> CharTree::named_edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : tree.edges()) out.emplace_back(node_name(a), node_name(b));
  return out;
}

std::string CharTree::to_dot() const {
  std::ostringstream out;
  out << "graph char_tree {\n";
  out << "  \"" << node_name(kCliqueNode) << "\" [shape=doublecircle];\n";
  for (Vertex node = 2; node <= order(); ++node) out << "  \"" << node_name(node) << "\";\n";
  for (auto [a, b] : tree.edges()) {
    out << "  \"" << node_name(a) << "\" -- \"" << node_name(b) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

CharTree characteristic_tree(const KTree& tree, const Clique& c) {
  require_k_clique(tree, c);
  CharTree out;
  out.clique = c;
  out.label.push_back(0);
  for_each_vertex(tree.graph().vertices() & ~c.mask(), [&](Vertex v) { out.label.push_back(v); });
  out.tree = Graph(static_cast<int>(out.label.size()));
  if (tree.is_trivial()) return out;

  const CharTreeParents p = char_tree_parents(tree, c);
  for (Vertex x : p.order) {
    const Vertex parent_node = p.parent[x] == 0 ? CharTree::kCliqueNode : out.node_of(p.parent[x]);
    out.tree.add_edge(parent_node, out.node_of(x));
  }
  return out;
}

IntPolynomial local_poly_clique(const KTree& tree, const Clique& c) {
  require_k_clique(tree, c);
  return char_tree_root_poly(tree, c).shifted(static_cast<std::size_t>(tree.k() - 1));
}

Rational local_mean_order_clique(const KTree& tree, const Clique& c) {
  require_k_clique(tree, c);
  return char_tree_root_poly(tree, c).mean_order() + Rational(tree.k() - 1);
}

std::vector<std::pair<Clique, Rational>> all_clique_means(const KTree& tree) {
  std::vector<std::pair<Clique, Rational>> out;
  const Rational shift(tree.k() - 1);
  for (const Clique& c : k_cliques(tree)) {
    out.emplace_back(c, char_tree_root_poly(tree, c).mean_order() + shift);
  }
  return out;
}

Rational CliqueCounts::mean(int k) const {
  return Rational(BigInt(derivative), BigInt(value)) + Rational(k - 1);
}

CliqueCounts clique_counts(const KTree& tree, const Clique& c) {
  if (tree.order() - tree.k() > kCountsMaxSpan) {
    throw Error(ErrorCode::TooLarge, "n - k exceeds " + std::to_string(kCountsMaxSpan));
  }
  if (tree.is_trivial()) return {};
  const CharTreeParents p = char_tree_parents(tree, c);
  // Folding x * (1 + q): value v(1 + vq), derivative d(1 + vq) + v dq.
  std::array<CliqueCounts, kMaxOrder + 1> acc;
  for (auto it = p.order.rbegin(); it != p.order.rend(); ++it) {
    const CliqueCounts child = acc[*it];
    CliqueCounts& parent = acc[p.parent[*it]];
    const std::uint64_t grow = 1 + child.value;
    parent.derivative = parent.derivative * grow + parent.value * child.derivative;
    parent.value *= grow;
  }
  return acc[0];
}

std::strong_ordering compare_means(const CliqueCounts& a, const CliqueCounts& b) {
  using Wide = unsigned __int128;
  const Wide lhs = static_cast<Wide>(a.derivative) * b.value;
  const Wide rhs = static_cast<Wide>(b.derivative) * a.value;
  return lhs <=> rhs;
}

AdjacencyContext adjacency_context(const KTree& tree, const Clique& c1, const Clique& c2) {
  require_k_clique(tree, c1);
  require_k_clique(tree, c2);
  const int k = tree.k();
  const VertexMask q = c1.mask() | c2.mask();
  if (popcount(c1.mask() & c2.mask()) != k - 1 || !tree.graph().is_clique(q)) {
    throw Error(ErrorCode::NotAdjacentCliques, c1.label() + " and " + c2.label() +
                                                   " do not lie in a common (k+1)-clique");
  }
  AdjacencyContext ctx;
  ctx.c1 = c1;
  ctx.c2 = c2;
  ctx.q = Clique(q);
  ctx.only_c1 = lowest_vertex(c1.mask() & ~c2.mask());
  ctx.only_c2 = lowest_vertex(c2.mask() & ~c1.mask());
  ctx.n1 = common_neighbors(tree, c1.mask());
  ctx.n2 = common_neighbors(tree, c2.mask());
  for_each_vertex(q, [&](Vertex x) {
    ctx.u_q |= common_neighbors(tree, q & ~vertex_bit(x)) & ~q;
  });
  ctx.a_q = ctx.u_q & ~(ctx.n1 | ctx.n2);
  return ctx;
}

AdjacencyCheck verify_adjacent_char_trees(const KTree& tree, const Clique& c1, const Clique& c2) {
  const AdjacencyContext ctx = adjacency_context(tree, c1, c2);
  const CharTree t1 = characteristic_tree(tree, c1);
  const CharTree t2 = characteristic_tree(tree, c2);

  AdjacencyCheck check;
  check.moved = ctx.a_q;

  const Vertex c2_node = t1.node_of(ctx.only_c2);
  VertexMask moved_nodes = 0;
  for_each_vertex(ctx.a_q, [&](Vertex w) { moved_nodes |= vertex_bit(t1.node_of(w)); });

  Graph shifted;
  try {
    shifted = partial_kelmans(t1.tree, c2_node, CharTree::kCliqueNode, moved_nodes);
  } catch (const Error& e) {
    check.detail = std::string("move not applicable: ") + e.what();
    return check;
  }

  std::vector<Vertex> image(static_cast<std::size_t>(t1.order()));
  for (Vertex node = 1; node <= t1.order(); ++node) {
    Vertex target = 0;
    if (node == CharTree::kCliqueNode) target = t2.node_of(ctx.only_c1);
    else if (node == c2_node) target = CharTree::kCliqueNode;
    else target = t2.node_of(t1.label[node - 1]);
    image[static_cast<std::size_t>(node - 1)] = target;
  }
  if (shifted.relabeled(image) == t2.tree) {
    check.passed = true;
  } else {
    check.detail = "mapped tree differs from T'_" + c2.label();
  }
  return check;
}

ClimbResult climb_to_nonmajor(const KTree& tree, const Clique& start) {
  return climb_to_nonmajor(tree, start,
                           [&](const Clique& c) { return local_mean_order_clique(tree, c); });
}

ClimbResult climb_to_nonmajor(const KTree& tree, const Clique& start, const CliqueMeanFn& mean) {
  require_k_clique(tree, start);
  ClimbResult result;
  Clique current = start;
  Rational current_mean = mean(current);
  result.trace.emplace_back(current, current_mean);

  const std::size_t max_steps = k_cliques(tree).size();
  while (clique_degree(tree, current).kind == CliqueKind::major &&
         result.trace.size() <= max_steps) {
    std::optional<std::pair<Clique, Rational>> best;
    for (const Clique& next : adjacent_cliques(tree, current)) {
      Rational m = mean(next);
      if (!best || m > best->second) best.emplace(next, std::move(m));
    }
    if (!best || best->second <= current_mean) {
      result.stalled = true;
      break;
    }
    current = best->first;
    current_mean = best->second;
    result.trace.emplace_back(current, current_mean);
  }
  result.final_clique = current;
  return result;
}

}  // namespace ktree
