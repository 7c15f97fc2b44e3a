#include <map>
#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "ktree/canonical.hpp"
#include "ktree/enumerate.hpp"
#include "ktree/error.hpp"
#include "ktree/generators.hpp"
#include "ktree/oracle.hpp"

using namespace ktree;

namespace {

KTree tri() { return build_from_construction(2, std::vector<Attachment>{{3, {1, 2}}}); }
KTree four() { return build_from_construction(2, std::vector<Attachment>{{3, {1, 2}}, {4, {1, 3}}}); }
Rational q(long long p, long long d) { return Rational(BigInt(p), BigInt(d)); }

}  // namespace

TEST_CASE("sub-k-tree enumeration") {
  CHECK(enumerate_sub_ktrees(tri()).members ==
        std::vector<VertexMask>{0b011, 0b101, 0b110, 0b111});
  CHECK(enumerate_sub_ktrees(gen_path_type(1, 3)).members.size() == 6);
  CHECK(enumerate_sub_ktrees(four(), 0b11).members == std::vector<VertexMask>{0b0011, 0b0111, 0b1111});
  try {
    enumerate_sub_ktrees(gen_path_type(1, 17));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK(enumerate_sub_ktrees(gen_path_type(1, 17), 0, 17).members.size() == 17 * 18 / 2);
}

TEST_CASE("oracle polynomials and means") {
  CHECK(oracle_global_poly(tri()).str() == "3x^2 + x^3");
  CHECK(oracle_global_mean(tri()) == q(9, 4));
  CHECK(oracle_global_poly(gen_path_type(1, 2)).str() == "2x + x^2");
  CHECK(oracle_global_mean(gen_path_type(1, 2)) == q(4, 3));
  CHECK(oracle_global_poly(gen_path_type(3, 3)).str() == "x^3");
  CHECK(oracle_local_poly(tri(), 0b11).str() == "x^2 + x^3");
  CHECK(oracle_local_mean(tri(), 0b11) == q(5, 2));
  CHECK(oracle_local_mean(four(), 0b11) == Rational(3));
  CHECK(oracle_local_poly(four(), 0b1111).str() == "x^4");
  try {
    oracle_local_poly(four(), 0b1010);
    FAIL("expected NotASubKTree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASubKTree);
  }
}

TEST_CASE("oracle clique means") {
  const CliqueMeans t = oracle_all_clique_means(tri());
  CHECK(t.means.size() == 3);
  for (const auto& [c, m] : t.means) CHECK(m == q(5, 2));
  CHECK(t.argmax.size() == 3);

  const CliqueMeans f = oracle_all_clique_means(four());
  CHECK(f.means.size() == 5);
  const CliqueMeans s = oracle_all_clique_means(gen_star_type(1, 3));
  CHECK(s.means[0].second == q(5, 2));
  CHECK(s.argmax == std::vector<Clique>{{2}, {3}, {4}});
}

TEST_CASE("oracle agrees with subset enumeration and is monotone") {
  for (int k = 1; k <= 3; ++k) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const KTree t = random_ktree(k, k + 7, seed);
      const SubKTreeSet all = enumerate_sub_ktrees(t);
      const auto global = brute::subset_counts(t.graph(), k, 0);
      CHECK(brute::coeffs_of(oracle_global_poly(t), t.order()) == global);
      for (VertexMask m : all.members) CHECK(brute::induces_ktree(t.graph(), m, k));
      for (const Clique& c : k_cliques(t)) {
        const IntPolynomial local = local_poly_from(all, c.mask());
        CHECK(local == oracle_local_poly(t, c.mask()));
        CHECK(local.lowest_degree() == k);
        CHECK(local.value_at_one() == enumerate_sub_ktrees(t, c.mask()).members.size());
        for (std::size_t i = 0; i < local.coeffs().size(); ++i) CHECK(local.coeffs()[i] <= BigInt(global[i]));
      }
    }
  }
}

TEST_CASE("labeled enumeration") {
  CHECK(labeled_ktree_count(1, 3) == 2);
  CHECK(labeled_ktree_count(2, 4) == 3);
  CHECK(labeled_ktree_count(2, 3) == 1);
  CHECK(labeled_ktree_count(2, 10) == 2027025);
  CHECK(labeled_ktree_count(3, 8) == 3640);
  CHECK(labeled_ktree_count(1, 10) == 362880);
  CHECK_THROWS_AS(checked_labeled_count(2, 12), Error);
  CHECK(checked_labeled_count(2, 11) == 34459425);

  for (int k = 1; k <= 3; ++k) {
    for (int n = k; n <= k + 5; ++n) {
      std::uint64_t seen = 0;
      std::set<std::vector<std::pair<Vertex, Vertex>>> distinct;
      for_each_labeled_ktree(k, n, [&](std::uint64_t i, const KTree& t) {
        CHECK(i == seen);
        CHECK(t.graph() == labeled_ktree_at(k, n, i).graph());
        distinct.insert(t.graph().edges());
        ++seen;
        return true;
      });
      CHECK(BigInt(seen) == labeled_ktree_count(k, n));
      if (n == k + 3) CHECK(!distinct.empty());
    }
  }
  CHECK_THROWS_AS(labeled_ktree_at(2, 4, 3), Error);
}

TEST_CASE("canonical codes") {
  std::set<std::string> codes;
  for_each_labeled_ktree(2, 4, [&](std::uint64_t, const KTree& t) {
    codes.insert(canonical_code(t));
    return true;
  });
  CHECK(codes.size() == 1);
  CHECK(canonical_code(gen_path_type(1, 4)) != canonical_code(gen_star_type(1, 3)));

  // Unlabeled 2-trees: 1, 1, 1, 2, 5, 12, 39 for n = 2..8.
  const std::vector<std::size_t> expected{1, 1, 1, 2, 5, 12, 39};
  for (int n = 2; n <= 8; ++n) {
    std::set<std::string> classes;
    for_each_labeled_ktree(2, n, [&](std::uint64_t, const KTree& t) {
      classes.insert(canonical_code(t));
      return true;
    });
    CHECK(classes.size() == expected[static_cast<std::size_t>(n - 2)]);
  }
  // Unlabeled trees: 1, 1, 1, 2, 3, 6, 11, 23 for n = 1..8.
  const std::vector<std::size_t> trees{1, 1, 1, 2, 3, 6, 11, 23};
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> classes;
    for_each_labeled_ktree(1, n, [&](std::uint64_t, const KTree& t) {
      classes.insert(canonical_code(t));
      return true;
    });
    CHECK(classes.size() == trees[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("canonical codes match brute-force isomorphism") {
  for (int k = 1; k <= 3; ++k) {
    const int n = k + 4 <= 7 ? k + 4 : 7;
    std::vector<KTree> all;
    for_each_labeled_ktree(k, n, [&](std::uint64_t i, const KTree& t) {
      if (i % 2 == 0) all.push_back(t);
      return all.size() < 60;
    });
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        CHECK((canonical_code(all[i]) == canonical_code(all[j])) ==
              brute::isomorphic(all[i].graph(), all[j].graph()));
      }
    }
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const KTree t = random_ktree(2, 7, seed);
    std::vector<Vertex> perm{3, 7, 1, 5, 2, 6, 4};
    const KTree shuffled = recognize_ktree(t.graph().relabeled(perm), 2);
    CHECK(canonical_code(shuffled) == canonical_code(t));
  }
}
