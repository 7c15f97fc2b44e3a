#pragma once

#include <string>
#include <utility>

#include "ktree/exact.hpp"
#include "ktree/graph.hpp"

namespace ktree {

/// Moving edges vw to uw for w in `moved`, a subset of
/// N_2 = N(v) \ N[u]. `full` marks moved == N_2.
struct KelmansMove {
  Vertex from = 0;
  Vertex to = 0;
  VertexMask moved = 0;
  bool full = false;
};

/// N(v) \ N[u]. Errors: InvalidVertex, SameVertex.
VertexMask kelmans_candidates(const Graph& g, Vertex v, Vertex u);

/// Errors: SameVertex, BadMoveSet.
KelmansMove make_kelmans_move(const Graph& g, Vertex v, Vertex u, VertexMask moved);

Graph apply(const Graph& g, const KelmansMove& move);

/// G_(v->u): every edge vw with w in N_2 is replaced by uw.
Graph kelmans(const Graph& g, Vertex v, Vertex u);

/// Replaces only the edges vw with w in `moved`. Error: BadMoveSet.
Graph partial_kelmans(const Graph& g, Vertex v, Vertex u, VertexMask moved);

/// Outcome of checking one inequality lhs >= rhs together with the stated
/// condition for equality.
struct TheoremReport {
  std::string check;
  std::string instance;
  Rational lhs;
  Rational rhs;
  bool inequality_holds = false;
  bool equality = false;
  bool predicted_equality = false;
  bool consistent = false;

  bool ok() const { return inequality_holds && consistent; }
};

TheoremReport make_report(std::string check, std::string instance, Rational lhs, Rational rhs,
                          bool predicted_equality);

/// T is a path and x is one of its ends (a single vertex counts).
bool path_with_leaf_predicate(const Graph& tree, Vertex x);

/// The component of u in T - v is a path with u as an end.
bool component_path_predicate(const Graph& tree, Vertex v, Vertex u);

bool is_path(const Graph& tree);

/// mu(T_(v->u); v) >= mu(T; u), equal iff u is a leaf or T is a path with
/// v as a leaf; and mu(T; v) >= mu(T_(v->u); u), equal iff the component of
/// u in T - v is a path ending at u. Error: NotAdjacent.
std::pair<TheoremReport, TheoremReport> check_kelmans_pair(const Graph& tree, Vertex u, Vertex v);

/// mu(T_(v->u); v) >= mu(T; v), equal iff v is a leaf or T is a path with
/// u as a leaf.
TheoremReport check_kelmans_gain(const Graph& tree, Vertex u, Vertex v);

/// mu(T'; v) >= mu(T; v) for T' a partial move of `moved` from v to u.
/// Equal iff nothing moves, or u is a leaf and a single branch that is a
/// path ending at its root moves. Error: BadMoveSet.
TheoremReport check_partial_kelmans(const Graph& tree, Vertex u, Vertex v, VertexMask moved);

/// mu(T; v) >= mu(T; u) for a leaf v with neighbour u, equal iff T is a
/// path. Error: NotALeaf.
TheoremReport check_leaf_neighbor(const Graph& tree, Vertex v, Vertex u);

}  // namespace ktree
