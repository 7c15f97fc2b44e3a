#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "ktree/char_tree.hpp"
#include "ktree/enumerate.hpp"
#include "ktree/error.hpp"
#include "ktree/generators.hpp"
#include "ktree/tree_poly.hpp"

using namespace ktree;

namespace {

KTree tri() { return build_from_construction(2, std::vector<Attachment>{{3, {1, 2}}}); }
KTree four() { return build_from_construction(2, std::vector<Attachment>{{3, {1, 2}}, {4, {1, 3}}}); }

Rational q(long long p, long long d) { return Rational(BigInt(p), BigInt(d)); }

using EdgeSet = std::set<std::pair<std::string, std::string>>;

EdgeSet edge_set(const CharTree& ct) {
  const auto e = ct.named_edges();
  return {e.begin(), e.end()};
}

/// T'_C assembled as the union of the paths C, w_1, ..., w_s, v over the
/// k-leaves v outside C, each path taken from elimination_sequence.
EdgeSet union_of_sequences(const KTree& t, const Clique& c) {
  EdgeSet out;
  const std::string root = "C" + c.label();
  for_each_vertex(k_leaf_mask(t) & ~c.mask(), [&](Vertex v) {
    const ElimSequence seq = elimination_sequence(t, c, v);
    std::vector<std::string> names{root};
    for (Vertex w : seq.interior) names.push_back(std::to_string(w));
    names.push_back(std::to_string(v));
    for (std::size_t i = 0; i + 1 < names.size(); ++i) {
      // Same orientation as CharTree::named_edges: by node number, clique node first.
      const std::string& a = names[i];
      const std::string& b = names[i + 1];
      const bool a_first = a[0] == 'C' || (b[0] != 'C' && std::stoi(a) < std::stoi(b));
      out.emplace(a_first ? a : b, a_first ? b : a);
    }
  });
  return out;
}

}  // namespace

TEST_CASE("elimination sequences") {
  const ElimSequence s1 = elimination_sequence(tri(), {1, 2}, 3);
  CHECK(s1.interior.empty());
  CHECK(s1.vertices() == 0b111);
  const ElimSequence s2 = elimination_sequence(four(), {1, 2}, 4);
  CHECK(s2.interior == std::vector<Vertex>{3});
  CHECK(check_elimination_sequence(four(), s2).empty());
  ElimSequence broken = s2;
  broken.interior.clear();
  CHECK_FALSE(check_elimination_sequence(four(), broken).empty());
  try {
    elimination_sequence(four(), {1, 2}, 2);
    FAIL("expected VertexInClique");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VertexInClique);
  }
  CHECK_THROWS_AS(elimination_sequence(four(), {2, 4}, 3), Error);
}

TEST_CASE("characteristic trees") {
  const CharTree t1 = characteristic_tree(tri(), {1, 2});
  CHECK(t1.order() == 2);
  CHECK(t1.named_edges() == std::vector<std::pair<std::string, std::string>>{{"C{1,2}", "3"}});

  const CharTree t2 = characteristic_tree(four(), {1, 2});
  CHECK(edge_set(t2) == EdgeSet{{"C{1,2}", "3"}, {"3", "4"}});

  const CharTree t3 = characteristic_tree(four(), {1, 3});
  CHECK(edge_set(t3) == EdgeSet{{"C{1,3}", "2"}, {"C{1,3}", "4"}});
  const std::string dot = t3.to_dot();
  CHECK(dot.find("\"C{1,3}\" [shape=doublecircle]") != std::string::npos);
  CHECK(dot.find("\"C{1,3}\" -- \"4\"") != std::string::npos);

  const CharTree trivial = characteristic_tree(gen_path_type(3, 3), {1, 2, 3});
  CHECK(trivial.order() == 1);
}

TEST_CASE("fast characteristic tree equals the union of elimination paths") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = k + 1; n <= k + 5; ++n) {
      for_each_labeled_ktree(k, n, [&](std::uint64_t i, const KTree& t) {
        if (i % 3 != 0) return true;
        for (const Clique& c : k_cliques(t)) {
          const CharTree ct = characteristic_tree(t, c);
          CHECK(ct.order() == n - k + 1);
          CHECK(ct.tree.is_tree());
          CHECK(edge_set(ct) == union_of_sequences(t, c));
        }
        return true;
      });
    }
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const KTree t = random_ktree(4, 14, seed);
    for (const Clique& c : k_cliques(t)) CHECK(edge_set(characteristic_tree(t, c)) == union_of_sequences(t, c));
  }
}

TEST_CASE("local polynomial and mean at a clique") {
  CHECK(local_poly_clique(tri(), {1, 2}).str() == "x^2 + x^3");
  CHECK(local_mean_order_clique(tri(), {1, 2}) == q(5, 2));
  CHECK(local_poly_clique(four(), {1, 2}).str() == "x^2 + x^3 + x^4");
  CHECK(local_mean_order_clique(four(), {1, 2}) == Rational(3));
  CHECK(local_poly_clique(gen_path_type(3, 3), {1, 2, 3}).str() == "x^3");
  CHECK(local_mean_order_clique(gen_path_type(3, 3), {1, 2, 3}) == Rational(3));
  CHECK_THROWS_AS(local_mean_order_clique(four(), {2, 4}), Error);
}

TEST_CASE("local polynomial agrees with subset enumeration") {
  for (int k = 1; k <= 3; ++k) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const KTree t = random_ktree(k, k + 7, seed);
      for (const Clique& c : k_cliques(t)) {
        CHECK(brute::coeffs_of(local_poly_clique(t, c), t.order()) ==
              brute::subset_counts(t.graph(), k, c.mask()));
      }
    }
  }
}

TEST_CASE("machine word counts agree with exact means") {
  for (int k = 1; k <= 4; ++k) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const KTree t = random_ktree(k, k + 20, seed);
      const auto means = all_clique_means(t);
      for (const auto& [c, mean] : means) {
        const CliqueCounts counts = clique_counts(t, c);
        CHECK(counts.mean(k) == mean);
        const IntPolynomial p = local_poly_clique(t, c);
        CHECK(BigInt(counts.value) == p.value_at_one());
      }
      for (std::size_t i = 0; i + 1 < means.size(); ++i) {
        const auto a = clique_counts(t, means[i].first);
        const auto b = clique_counts(t, means[i + 1].first);
        CHECK((compare_means(a, b) < 0) == (means[i].second < means[i + 1].second));
        CHECK((compare_means(a, b) == 0) == (means[i].second == means[i + 1].second));
      }
    }
  }
}

TEST_CASE("for trees the clique mean is the vertex mean") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const KTree t = random_ktree(1, 7, seed);
    for (Vertex v = 1; v <= 7; ++v) {
      const Clique c(vertex_bit(v));
      CHECK(local_mean_order_clique(t, c) == local_mean_order_vertex(t.graph(), v));
      const CharTree ct = characteristic_tree(t, c);
      CHECK(brute::isomorphic(ct.tree, t.graph()) == true);
    }
  }
}

TEST_CASE("adjacency context and the partial move between char trees") {
  const AdjacencyContext ctx = adjacency_context(four(), {1, 2}, {1, 3});
  CHECK(ctx.only_c1 == 2);
  CHECK(ctx.only_c2 == 3);
  CHECK(ctx.a_q == 0);
  CHECK(ctx.q == Clique{1, 2, 3});
  const AdjacencyCheck check = verify_adjacent_char_trees(four(), {1, 2}, {1, 3});
  CHECK(check.passed);
  CHECK(check.moved == 0);
  CHECK(verify_adjacent_char_trees(tri(), {1, 2}, {1, 3}).passed);
  try {
    adjacency_context(four(), {1, 2}, {3, 4});
    FAIL("expected NotAdjacentCliques");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAdjacentCliques);
  }

  const KTree t3 = gen_Tn_example(3, 3);
  bool any_moved = false;
  for (const Clique& c1 : k_cliques(t3)) {
    for (const Clique& c2 : adjacent_cliques(t3, c1)) {
      const AdjacencyCheck r = verify_adjacent_char_trees(t3, c1, c2);
      CHECK_MESSAGE(r.passed, c1.label() << " " << c2.label() << " " << r.detail);
      any_moved = any_moved || r.moved != 0;
      const AdjacencyContext cx = adjacency_context(t3, c1, c2);
      // N(C1) - c2, N(C2) - c1 and A_Q split U(Q).
      const VertexMask p1 = cx.n1 & ~vertex_bit(cx.only_c2) & cx.u_q;
      const VertexMask p2 = cx.n2 & ~vertex_bit(cx.only_c1) & cx.u_q;
      CHECK((p1 & p2) == 0);
      CHECK((p1 | p2 | cx.a_q) == cx.u_q);
    }
  }
  CHECK(any_moved);
}

TEST_CASE("climbing to a non-major clique") {
  const KTree f = four();
  const ClimbResult none = climb_to_nonmajor(f, {1, 3});
  CHECK(none.trace.size() == 1);
  CHECK(none.final_clique == Clique{1, 3});

  const KTree t3 = gen_Tn_example(3, 3);
  const ClimbResult r = climb_to_nonmajor(t3, {1, 2, 3});
  CHECK_FALSE(r.stalled);
  CHECK(clique_degree(t3, r.final_clique).kind != CliqueKind::major);
  CHECK(r.trace.back().second > r.trace.front().second);

  KTree star = gen_star_type(1, 4);  // K_{1,4}, center 1
  const ClimbResult s = climb_to_nonmajor(star, {1});
  CHECK(clique_degree(star, s.final_clique).kind == CliqueKind::end);
  for (std::size_t i = 1; i < s.trace.size(); ++i) CHECK(s.trace[i].second > s.trace[i - 1].second);
}
