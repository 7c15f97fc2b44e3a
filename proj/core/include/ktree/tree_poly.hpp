#pragma once

#include <vector>

#include "ktree/exact.hpp"
#include "ktree/graph.hpp"

namespace ktree {

// Subtree polynomials and local/global mean subtree orders of trees.
// All functions taking a tree throw NotATree when the graph is not one.

void require_tree(const Graph& tree);

/// Polynomial of the subtrees containing `root` inside the component of
/// `root` in tree[allowed]. No validation; `allowed` must contain `root`.
IntPolynomial rooted_subtree_poly(const Graph& tree, Vertex root, VertexMask allowed);

/// phi_{T,u}: coefficient i counts subtrees of order i containing u.
IntPolynomial subtree_poly_at_vertex(const Graph& tree, Vertex u);

/// mu(T;u) = phi'_{T,u}(1) / phi_{T,u}(1).
Rational local_mean_order_vertex(const Graph& tree, Vertex u);

/// Phi_T, summing for i = 1..n the subtrees whose smallest vertex is i.
IntPolynomial global_subtree_poly(const Graph& tree);
Rational global_mean_order_tree(const Graph& tree);

/// phi(1) and phi'(1) of the branch hanging at `root`.
struct Branch {
  Vertex root = 0;
  BigInt value;
  BigInt derivative;
};

enum class Side { u, v };

/// Branches of T - {u, v} at the other neighbours of an adjacent pair:
///   alpha = prod (1 + alpha_i), delta = sum alpha'_i / (1 + alpha_i)
/// over u's side, and beta / theta likewise over v's side.
struct BranchDecomposition {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Branch> u_branches;
  std::vector<Branch> v_branches;
  BigInt alpha;
  BigInt beta;
  Rational delta;
  Rational theta;

  /// phi_{T,side}(1) rebuilt from the branches.
  BigInt phi_at_one(Side side) const;
  /// phi'_{T,side}(1) rebuilt from the branches.
  Rational dphi_at_one(Side side) const;

  /// Splits v's branches into `moved` (product beta_W, sum theta_W) and the
  /// rest (product gamma, sum omega), as used for partial Kelmans moves.
  struct Split {
    BigInt beta;
    Rational theta;
    BigInt gamma;
    Rational omega;
  };
  Split split_v_side(VertexMask moved) const;
};

/// Error: NotAdjacent.
BranchDecomposition branch_decomposition(const Graph& tree, Vertex u, Vertex v);

/// Closed form of mu(T; side) in terms of the branch quantities.
Rational local_mean_via_branches(const BranchDecomposition& d, Side side);

/// Jamison's ratio bound phi'(1) / (1 + phi(1)) <= phi(1) / 2.
struct JamisonCheck {
  Rational lhs;
  Rational rhs;
  bool tight = false;
};

JamisonCheck jamison_ratio_check(const Graph& tree, Vertex u);

}  // namespace ktree
