#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ktree/exact.hpp"
#include "ktree/ktree.hpp"

namespace ktree {

/// A_T(C, v) = (C, w_1, ..., w_s, v): the vertices of the unique path-type
/// sub-k-tree that starts at C and has v as a k-leaf, in elimination order
/// read backwards from v.
struct ElimSequence {
  Clique clique;
  std::vector<Vertex> interior;
  Vertex target = 0;

  /// V(C) together with the interior and the target.
  VertexMask vertices() const;
};

/// Peels k-leaves outside V(C) + {v} until only P_T(C, v) remains, then
/// reads the elimination order from v down to C. The result is re-checked
/// against its defining properties. Errors: NotAClique, VertexInClique.
ElimSequence elimination_sequence(const KTree& tree, const Clique& c, Vertex v);

/// Independent validation of an elimination sequence; empty string on success.
std::string check_elimination_sequence(const KTree& tree, const ElimSequence& seq);

/// The characteristic 1-tree T'_C. Node 1 is the clique node; the remaining
/// nodes are the vertices of T outside C in increasing id order.
struct CharTree {
  static constexpr Vertex kCliqueNode = 1;

  Clique clique;
  Graph tree;
  /// label[node - 1] is the original vertex id, 0 for the clique node.
  std::vector<Vertex> label;

  int order() const { return tree.order(); }
  /// Node carrying an original vertex outside the clique.
  Vertex node_of(Vertex original) const;
  /// "C{1,2}" for the clique node, the original id otherwise.
  std::string node_name(Vertex node) const;
  /// Edges as name pairs, sorted.
  std::vector<std::pair<std::string, std::string>> named_edges() const;
  std::string to_dot() const;
};

/// For each vertex outside C, its parent in T'_C (0 = the clique node), and
/// the vertices outside C listed so that parents precede children.
struct CharTreeParents {
  std::vector<Vertex> parent;  // indexed by vertex id; unused for V(C)
  std::vector<Vertex> order;
};

/// Rebuilds T from C one simplicial attachment at a time; the parent of v
/// is the most recently added vertex of its attachment clique outside C.
CharTreeParents char_tree_parents(const KTree& tree, const Clique& c);

CharTree characteristic_tree(const KTree& tree, const Clique& c);

/// phi_{T,C}(x) = x^{k-1} phi_{T'_C, C}(x).
IntPolynomial local_poly_clique(const KTree& tree, const Clique& c);

/// mu(T;C) = mu(T'_C; C) + k - 1.
Rational local_mean_order_clique(const KTree& tree, const Clique& c);

/// mu(T;C) for every k-clique, in lexicographic clique order.
std::vector<std::pair<Clique, Rational>> all_clique_means(const KTree& tree);

/// phi(1) and phi'(1) of the rooted polynomial of T'_C at the clique node,
/// in machine words. mu(T;C) = derivative / value + k - 1.
struct CliqueCounts {
  std::uint64_t value = 1;
  std::uint64_t derivative = 1;

  Rational mean(int k) const;
};

/// Largest n - k for which CliqueCounts cannot overflow.
inline constexpr int kCountsMaxSpan = 48;

/// C is not validated. Error: TooLarge beyond kCountsMaxSpan.
CliqueCounts clique_counts(const KTree& tree, const Clique& c);

/// Exact comparison of the means of two count pairs from the same tree.
std::strong_ordering compare_means(const CliqueCounts& a, const CliqueCounts& b);

/// The bookkeeping around two adjacent k-cliques C_1, C_2 with Q = C_1 u C_2.
struct AdjacencyContext {
  Clique c1;
  Clique c2;
  Clique q;
  Vertex only_c1 = 0;  // V(C_1) \ V(C_2)
  Vertex only_c2 = 0;  // V(C_2) \ V(C_1)
  VertexMask n1 = 0;   // N_T(C_1)
  VertexMask n2 = 0;   // N_T(C_2)
  VertexMask u_q = 0;  // U_T(Q)
  VertexMask a_q = 0;  // U_T(Q) \ (N_T(C_1) u N_T(C_2))
};

/// Error: NotAdjacentCliques.
AdjacencyContext adjacency_context(const KTree& tree, const Clique& c1, const Clique& c2);

struct AdjacencyCheck {
  bool passed = false;
  VertexMask moved = 0;
  std::string detail;
};

/// Moves the edges c_2 w (w in A_Q) of T'_{C_1} onto the clique node and
/// checks that C_1 -> c_1, c_2 -> C_2 maps the result onto T'_{C_2}.
AdjacencyCheck verify_adjacent_char_trees(const KTree& tree, const Clique& c1, const Clique& c2);

struct ClimbResult {
  Clique final_clique;
  std::vector<std::pair<Clique, Rational>> trace;
  /// Set when a major clique had no strictly better neighbour.
  bool stalled = false;
};

using CliqueMeanFn = std::function<Rational(const Clique&)>;

/// From C_start, repeatedly move to the adjacent clique of largest mean
/// (ties: smallest label) while the current clique is major.
ClimbResult climb_to_nonmajor(const KTree& tree, const Clique& start);
ClimbResult climb_to_nonmajor(const KTree& tree, const Clique& start, const CliqueMeanFn& mean);

}  // namespace ktree
