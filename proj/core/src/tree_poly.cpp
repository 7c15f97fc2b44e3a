#include "ktree/tree_poly.hpp"

#include <array>
#include <string>

#include "ktree/error.hpp"

namespace ktree {

void require_tree(const Graph& tree) {
  if (!tree.is_tree()) throw Error(ErrorCode::NotATree, "graph is not a tree");
}

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) {
    throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " not in tree");
  }
}

}  // namespace

IntPolynomial rooted_subtree_poly(const Graph& tree, Vertex root, VertexMask allowed) {
  // Breadth-first order from the root, then fold children into parents in
  // reverse: phi_x = x * prod_children (1 + phi_child).
  std::array<Vertex, kMaxOrder> order{};
  std::array<Vertex, kMaxOrder + 1> parent{};
  int count = 0;
  order[count++] = root;
  VertexMask seen = vertex_bit(root);
  for (int head = 0; head < count; ++head) {
    const Vertex x = order[head];
    for_each_vertex(tree.neighbors(x) & allowed & ~seen, [&](Vertex y) {
      seen |= vertex_bit(y);
      parent[y] = x;
      order[count++] = y;
    });
  }
  std::array<IntPolynomial, kMaxOrder + 1> poly;
  for (int i = 0; i < count; ++i) poly[order[i]] = IntPolynomial::x();
  for (int i = count - 1; i >= 1; --i) {
    const Vertex x = order[i];
    poly[parent[x]].multiply_one_plus(poly[x]);
  }
  return std::move(poly[root]);
}

IntPolynomial subtree_poly_at_vertex(const Graph& tree, Vertex u) {
  require_tree(tree);
  require_vertex(tree, u);
  return rooted_subtree_poly(tree, u, tree.vertices());
}

Rational local_mean_order_vertex(const Graph& tree, Vertex u) {
  return subtree_poly_at_vertex(tree, u).mean_order();
}

IntPolynomial global_subtree_poly(const Graph& tree) {
  require_tree(tree);
  IntPolynomial total;
  for (Vertex i = 1; i <= tree.order(); ++i) {
    total += rooted_subtree_poly(tree, i, tree.vertices() & ~first_vertices(i - 1));
  }
  return total;
}

Rational global_mean_order_tree(const Graph& tree) { return global_subtree_poly(tree).mean_order(); }

BigInt BranchDecomposition::phi_at_one(Side side) const {
  const BigInt& own = side == Side::u ? alpha : beta;
  return own + alpha * beta;
}

Rational BranchDecomposition::dphi_at_one(Side side) const {
  const BigInt& own = side == Side::u ? alpha : beta;
  const Rational& own_sum = side == Side::u ? delta : theta;
  return (Rational(1) + own_sum) * Rational(own) +
         (Rational(2) + delta + theta) * Rational(BigInt(alpha * beta));
}

BranchDecomposition::Split BranchDecomposition::split_v_side(VertexMask moved) const {
  Split s{1, Rational(0), 1, Rational(0)};
  for (const Branch& b : v_branches) {
    const Rational ratio(b.derivative, 1 + b.value);
    if (contains(moved, b.root)) {
      s.beta *= 1 + b.value;
      s.theta += ratio;
    } else {
      s.gamma *= 1 + b.value;
      s.omega += ratio;
    }
  }
  return s;
}

BranchDecomposition branch_decomposition(const Graph& tree, Vertex u, Vertex v) {
  require_tree(tree);
  require_vertex(tree, u);
  require_vertex(tree, v);
  if (!tree.has_edge(u, v)) {
    throw Error(ErrorCode::NotAdjacent,
                std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
  }
  BranchDecomposition d;
  d.u = u;
  d.v = v;
  const VertexMask rest = tree.vertices() & ~vertex_bit(u) & ~vertex_bit(v);
  auto collect = [&](Vertex center, Vertex other, std::vector<Branch>& out, BigInt& product,
                     Rational& sum) {
    product = 1;
    sum = Rational(0);
    for_each_vertex(tree.neighbors(center) & ~vertex_bit(other), [&](Vertex w) {
      const IntPolynomial p = rooted_subtree_poly(tree, w, rest);
      Branch b{w, p.value_at_one(), p.derivative_at_one()};
      product *= 1 + b.value;
      sum += Rational(b.derivative, 1 + b.value);
      out.push_back(std::move(b));
    });
  };
  collect(u, v, d.u_branches, d.alpha, d.delta);
  collect(v, u, d.v_branches, d.beta, d.theta);
  return d;
}

Rational local_mean_via_branches(const BranchDecomposition& d, Side side) {
  // mu(T;u) = (1 + delta + 2 beta + beta (delta + theta)) / (1 + beta), and
  // symmetrically for v with alpha and theta.
  const bool at_u = side == Side::u;
  const Rational own_sum = at_u ? d.delta : d.theta;
  const Rational other(at_u ? d.beta : d.alpha);
  return (Rational(1) + own_sum + Rational(2) * other + other * (d.delta + d.theta)) /
         (Rational(1) + other);
}

JamisonCheck jamison_ratio_check(const Graph& tree, Vertex u) {
  const IntPolynomial p = subtree_poly_at_vertex(tree, u);
  const BigInt value = p.value_at_one();
  JamisonCheck c;
  c.lhs = Rational(p.derivative_at_one(), 1 + value);
  c.rhs = Rational(value, 2);
  c.tight = c.lhs == c.rhs;
  return c;
}

}  // namespace ktree
