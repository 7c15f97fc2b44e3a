#include "brute.hpp"
#include "doctest.h"
#include "ktree/error.hpp"
#include "ktree/generators.hpp"
#include "ktree/kt_format.hpp"
#include "ktree/ktree.hpp"

using namespace ktree;

namespace {

KTree four() { return build_from_construction(2, std::vector<Attachment>{{3, {1, 2}}, {4, {1, 3}}}); }

void check_counts(const KTree& t) {
  const int k = t.k();
  const int n = t.order();
  CHECK(t.graph().edge_count() == static_cast<std::size_t>(k * n - k * (k + 1) / 2));
  CHECK(k_cliques(t).size() == static_cast<std::size_t>(1 + k * (n - k)));
  CHECK(kp1_cliques(t).size() == static_cast<std::size_t>(n - k));
}

}  // namespace

TEST_CASE("build from construction") {
  const KTree tri = build_from_construction(2, std::vector<Attachment>{{3, {1, 2}}});
  CHECK(tri.graph().edge_count() == 3);
  CHECK(k_cliques(tri) == std::vector<Clique>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(kp1_cliques(tri) == std::vector<Clique>{{1, 2, 3}});

  const KTree f = four();
  CHECK(f.graph().edges() == std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
  CHECK(k_cliques(f).size() == 5);
  CHECK(kp1_cliques(f).size() == 2);

  const KTree p4 = build_from_construction(1, std::vector<Attachment>{{2, {1}}, {3, {2}}, {4, {3}}});
  CHECK(p4.graph().is_tree());
  CHECK(k_leaves(p4) == std::vector<Vertex>{1, 4});

  CHECK_THROWS_AS(build_from_construction(2, std::vector<Attachment>{{3, {1, 2}}, {4, {1, 5}}}), Error);
  try {
    build_from_construction(2, std::vector<Attachment>{{3, {1, 2}}, {5, {1, 3}}});
    FAIL("expected BadVertexOrder");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadVertexOrder);
  }
  try {
    build_from_construction(2, std::vector<Attachment>{{3, {1, 2}}, {4, {1, 3}}, {5, {2, 4}}});
    FAIL("expected AttachmentNotClique");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AttachmentNotClique);
  }
}

TEST_CASE("recognition") {
  Graph tri(3);
  tri.add_edge(1, 2);
  tri.add_edge(1, 3);
  tri.add_edge(2, 3);
  CHECK(recognize_ktree(tri, 2).order() == 3);

  Graph p3(3);
  p3.add_edge(1, 2);
  p3.add_edge(2, 3);
  try {
    recognize_ktree(p3, 2);
    FAIL("expected NotKTree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotKTree);
  }

  Graph k4e(4);  // K_4 minus the edge 24
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}) k4e.add_edge(a, b);
  const KTree t = recognize_ktree(k4e, 2);
  CHECK(t.graph() == k4e);
  CHECK(rebuild(2, 4, t.construction()).graph() == k4e);

  Graph split(4);
  split.add_edge(1, 2);
  split.add_edge(3, 4);
  try {
    recognize_ktree(split, 1);
    FAIL("expected Disconnected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }

  Graph c4(4);  // cycle: right edge count for k = 1 + 1, no simplicial start
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 1}}) c4.add_edge(a, b);
  CHECK_THROWS_AS(recognize_ktree(c4, 2), Error);
}

TEST_CASE("recognition round trip on random k-trees") {
  for (int k = 1; k <= 4; ++k) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const KTree t = random_ktree(k, k + 9, seed);
      check_counts(t);
      const KTree r = recognize_ktree(t.graph(), k);
      CHECK(r.graph() == t.graph());
      CHECK(rebuild(k, t.order(), r.construction()).graph() == t.graph());
      // Relabel by a fixed shuffle; recognition must still succeed.
      std::vector<Vertex> perm;
      for (Vertex v = t.order(); v >= 1; --v) perm.push_back(v);
      CHECK(recognize_ktree(t.graph().relabeled(perm), k).order() == t.order());
    }
  }
}

TEST_CASE("clique degrees and classes") {
  const KTree tri = build_from_construction(2, std::vector<Attachment>{{3, {1, 2}}});
  CHECK(clique_degree(tri, {1, 2}).degree == 1);
  CHECK(clique_degree(tri, {1, 2}).kind == CliqueKind::end);
  const KTree f = four();
  CHECK(clique_degree(f, {1, 3}).degree == 2);
  CHECK(clique_degree(f, {1, 3}).kind == CliqueKind::degree2);
  const KTree k2 = build_from_construction(2, std::vector<Attachment>{});
  CHECK(clique_degree(k2, {1, 2}).degree == 0);
  CHECK(clique_degree(k2, {1, 2}).kind == CliqueKind::isolated);
  CHECK(classify_degree(3).kind == CliqueKind::major);
  CHECK(to_string(CliqueKind::degree2) == "degree2");
  CHECK_THROWS_AS(clique_degree(f, {2, 4}), Error);
}

TEST_CASE("k-leaves") {
  const KTree k4 = gen_path_type(3, 4);
  CHECK(k_leaves(k4) == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(k_leaves(four()) == std::vector<Vertex>{2, 4});
  CHECK(k_leaves(gen_path_type(1, 5)) == std::vector<Vertex>{1, 5});
  try {
    k_leaves(gen_path_type(3, 3));
    FAIL("expected TrivialKTree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TrivialKTree);
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const KTree t = random_ktree(2, 9, seed);
    const VertexMask leaves = k_leaf_mask(t);
    CHECK(popcount(leaves) >= 2);
    for_each_vertex(leaves, [&](Vertex v) { CHECK((t.graph().neighbors(v) & leaves) == 0); });
    for (const Clique& c : k_cliques(t)) CHECK((leaves & ~c.mask()) != 0);
  }
}

TEST_CASE("adjacent cliques") {
  const KTree tri = build_from_construction(2, std::vector<Attachment>{{3, {1, 2}}});
  CHECK(adjacent_cliques(tri, {1, 2}) == std::vector<Clique>{{1, 3}, {2, 3}});
  CHECK(adjacent_cliques(gen_path_type(1, 3), {2}) == std::vector<Clique>{{1}, {3}});
  CHECK(adjacent_cliques(gen_path_type(2, 2), {1, 2}).empty());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const KTree t = random_ktree(3, 10, seed);
    for (const Clique& c : k_cliques(t)) {
      const auto adj = adjacent_cliques(t, c);
      CHECK(adj.size() == static_cast<std::size_t>(3 * clique_degree(t, c).degree));
      for (const Clique& d : adj) {
        const auto back = adjacent_cliques(t, d);
        CHECK(std::find(back.begin(), back.end(), c) != back.end());
      }
    }
  }
}

TEST_CASE("named families") {
  const KTree p5 = gen_path_type(1, 5);
  CHECK(p5.graph().is_tree());
  CHECK(p5.graph().edge_count() == 4);
  CHECK(is_path_type(p5));
  for (int k = 1; k <= 4; ++k) {
    const KTree p = gen_path_type(k, k + 6);
    CHECK(popcount(k_leaf_mask(p)) == 2);
    check_counts(p);
    const KTree s = gen_star_type(k, 5);
    check_counts(s);
    for (const Attachment& a : s.construction().adds) CHECK(a.clique == Clique(first_vertices(k)));
  }
  const KTree t3 = gen_Tn_example(3, 3);
  CHECK(t3.order() == 9);
  check_counts(t3);
  CHECK(clique_degree(t3, {1, 2, 3}).degree == 3);
  CHECK(popcount(k_leaf_mask(t3)) == 3);
  // c_i = 6 + i is joined to b_i = 3 + i and the base minus a_i.
  CHECK(t3.graph().neighbors(7) == to_mask(std::vector<Vertex>{2, 3, 4}));
  CHECK(t3.graph().neighbors(9) == to_mask(std::vector<Vertex>{1, 2, 6}));
  for (int n = 3; n <= 5; ++n) {
    const KTree t = gen_Tn_example(3, n);
    int deg2 = 0;
    int major = 0;
    for (const Clique& c : k_cliques(t)) {
      const CliqueKind kind = clique_degree(t, c).kind;
      deg2 += kind == CliqueKind::degree2;
      major += kind == CliqueKind::major;
    }
    CHECK(deg2 == n);
    CHECK(major == 1);
  }
  const KTree cat = gen_caterpillar_example(7);
  CHECK(cat.order() == 19);
  CHECK(cat.graph().is_tree());
  CHECK_THROWS_AS(gen_Tn_example(3, 2), Error);
  CHECK_THROWS_AS(gen_caterpillar_example(0), Error);
}

TEST_CASE("random k-trees are deterministic") {
  CHECK(random_ktree(2, 2, 99).order() == 2);
  CHECK(random_ktree(3, 4, 5).graph().edge_count() == 6);
  CHECK(random_ktree(2, 10, 42).graph() == random_ktree(2, 10, 42).graph());
  CHECK(random_ktree(2, 10, 42).construction() == random_ktree(2, 10, 42).construction());
}

TEST_CASE("kt format") {
  const KTree f = four();
  const std::string text = emit_kt(f);
  CHECK(text == "ktree 1\nk 2\nn 4\nbase 1 2\nadd 3 1 2\nadd 4 1 3\n");
  const KTree back = parse_kt(text);
  CHECK(back.graph() == f.graph());
  CHECK(emit_kt(back) == text);
  CHECK(parse_kt("# comment\nktree 1\n\nk 2\nn 3\nbase 1 2\nadd 3 1 2\n").order() == 3);
  try {
    parse_kt("ktree 1\nk 2\nn 4\nbase 1 2\nadd 4 1 2\nadd 3 1 2\n");
    FAIL("expected BadVertexOrder");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadVertexOrder);
  }
  CHECK_THROWS_AS(parse_kt("ktree 2\n"), Error);
  CHECK_THROWS_AS(parse_kt("ktree 1\nk 2\nn 4\nbase 1 2\nadd 3 1 2\n"), Error);

  const Graph g = parse_edge_list("1 2\n2 3\n# x\n3 4\n");
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3);

  // A relabeled tree comes back in construction order.
  Graph star(4);
  star.add_edge(4, 1);
  star.add_edge(4, 2);
  star.add_edge(4, 3);
  const KtRelabeling r = relabel_for_kt(recognize_ktree(star, 1));
  CHECK(parse_kt(emit_kt(r.tree)).graph() == r.tree.graph());
  CHECK(brute::isomorphic(r.tree.graph(), star));
}
