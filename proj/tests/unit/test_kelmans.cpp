#include "brute.hpp"
#include "doctest.h"
#include "ktree/enumerate.hpp"
#include "ktree/error.hpp"
#include "ktree/generators.hpp"
#include "ktree/kelmans.hpp"
#include "ktree/tree_poly.hpp"

using namespace ktree;

namespace {

Graph path(int n) { return gen_path_type(1, n).graph(); }

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
  return g;
}

Rational q(long long p, long long d) { return Rational(BigInt(p), BigInt(d)); }

}  // namespace

TEST_CASE("kelmans operation") {
  // a - u - v - b as 1 - 2 - 3 - 4, moving v -> u gives a star at u.
  const Graph moved = kelmans(path(4), 3, 2);
  CHECK(moved.neighbors(2) == to_mask(std::vector<Vertex>{1, 3, 4}));
  CHECK(moved.edge_count() == 3);

  Graph tri(3);
  tri.add_edge(1, 2);
  tri.add_edge(1, 3);
  tri.add_edge(2, 3);
  CHECK(kelmans(tri, 1, 2) == tri);

  const Graph s = kelmans(star(3), 1, 2);
  CHECK(s.degree(2) == 3);
  CHECK(s.degree(1) == 1);
  CHECK_THROWS_AS(kelmans(tri, 1, 1), Error);
}

TEST_CASE("partial kelmans") {
  const Graph t = star(3);
  CHECK(partial_kelmans(t, 1, 2, 0) == t);
  CHECK(partial_kelmans(t, 1, 2, kelmans_candidates(t, 1, 2)) == kelmans(t, 1, 2));
  const Graph half = partial_kelmans(t, 1, 2, vertex_bit(3));
  CHECK(half.has_edge(2, 3));
  CHECK_FALSE(half.has_edge(1, 3));
  CHECK(half.is_tree());
  try {
    partial_kelmans(t, 1, 2, vertex_bit(2));
    FAIL("expected BadMoveSet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadMoveSet);
  }
  const KelmansMove m = make_kelmans_move(t, 1, 2, kelmans_candidates(t, 1, 2));
  CHECK(m.full);
}

TEST_CASE("kelmans pair values") {
  const auto [a, b] = check_kelmans_pair(path(4), 2, 3);
  CHECK(a.lhs == q(13, 5));
  CHECK(a.rhs == q(5, 2));
  CHECK_FALSE(a.equality);
  CHECK(a.ok());
  CHECK(b.ok());

  const auto [c, d] = check_kelmans_pair(path(2), 1, 2);
  CHECK(c.equality);
  CHECK(d.equality);
  CHECK(c.ok());
  CHECK(d.ok());

  const auto [e, f] = check_kelmans_pair(star(3), 2, 1);  // u a leaf
  CHECK(e.equality);
  CHECK(e.ok());
  CHECK(f.ok());
  CHECK_THROWS_AS(check_kelmans_pair(path(4), 1, 3), Error);
}

TEST_CASE("kelmans gain values") {
  CHECK(check_kelmans_gain(path(4), 3, 4).equality);  // v a leaf
  const TheoremReport mid = check_kelmans_gain(path(4), 2, 3);
  CHECK(mid.lhs == q(13, 5));
  CHECK(mid.rhs == q(5, 2));
  CHECK(mid.ok());
  const TheoremReport s = check_kelmans_gain(star(3), 2, 1);
  CHECK(s.lhs == q(13, 5));
  CHECK(s.rhs == q(5, 2));
  CHECK_FALSE(s.equality);
  CHECK(s.ok());
}

TEST_CASE("partial kelmans values") {
  CHECK(check_partial_kelmans(star(3), 2, 1, 0).equality);
  // u - v - v1 - x as 1 - 2 - 3 - 4 with W = {3}.
  const TheoremReport eq = check_partial_kelmans(path(4), 1, 2, vertex_bit(3));
  CHECK(eq.equality);
  CHECK(eq.lhs == q(5, 2));
  CHECK(eq.ok());
  const TheoremReport strict = check_partial_kelmans(star(3), 2, 1, to_mask(std::vector<Vertex>{3, 4}));
  CHECK(strict.lhs > strict.rhs);
  CHECK(strict.ok());
}

TEST_CASE("leaf neighbour") {
  CHECK(check_leaf_neighbor(path(5), 1, 2).equality);
  const TheoremReport s = check_leaf_neighbor(star(3), 2, 1);
  CHECK(s.lhs == q(13, 5));
  CHECK(s.rhs == q(5, 2));
  CHECK(s.ok());
  // Spider with three legs of length 2.
  Graph spider(7);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}}) spider.add_edge(a, b);
  const TheoremReport sp = check_leaf_neighbor(spider, 3, 2);
  CHECK(sp.lhs > sp.rhs);
  CHECK(sp.ok());
  try {
    check_leaf_neighbor(star(3), 1, 2);
    FAIL("expected NotALeaf");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotALeaf);
  }
}

TEST_CASE("predicates") {
  CHECK(path_with_leaf_predicate(path(5), 1));
  CHECK_FALSE(path_with_leaf_predicate(path(5), 3));
  CHECK_FALSE(path_with_leaf_predicate(star(3), 1));
  CHECK_FALSE(path_with_leaf_predicate(star(3), 2));
  CHECK(path_with_leaf_predicate(Graph(1), 1));
  CHECK(component_path_predicate(path(5), 3, 4));
  CHECK_FALSE(component_path_predicate(star(3), 2, 1));
}

TEST_CASE("kelmans moves preserve structure and commute up to isomorphism") {
  for (int n = 2; n <= 7; ++n) {
    for_each_labeled_ktree(1, n, [&](std::uint64_t, const KTree& t) {
      const Graph& g = t.graph();
      for (auto [u, v] : g.edges()) {
        const Graph a = kelmans(g, v, u);
        const Graph b = kelmans(g, u, v);
        CHECK(a.is_tree());
        CHECK(a.edge_count() == g.edge_count());
        CHECK(brute::isomorphic(a, b));
      }
      return true;
    });
  }
}
