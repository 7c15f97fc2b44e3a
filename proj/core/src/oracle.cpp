#include "ktree/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "ktree/error.hpp"

namespace ktree {
namespace {

void require_cap(const KTree& tree, int cap) {
  if (tree.order() > cap) {
    throw Error(ErrorCode::TooLarge, "order " + std::to_string(tree.order()) +
                                         " exceeds the enumeration cap " + std::to_string(cap));
  }
}

/// Every k-clique of the graph, by brute force over k-subsets grown in
/// increasing vertex order.
std::vector<VertexMask> all_k_cliques(const Graph& g, int k) {
  std::vector<VertexMask> out;
  std::vector<VertexMask> partial{0};
  for (int size = 0; size < k; ++size) {
    std::vector<VertexMask> next;
    for (VertexMask m : partial) {
      const Vertex from = m == 0 ? 1 : highest_vertex(m) + 1;
      for (Vertex v = from; v <= g.order(); ++v) {
        if ((g.neighbors(v) & m) == m) next.push_back(m | vertex_bit(v));
      }
    }
    partial = std::move(next);
  }
  out = std::move(partial);
  return out;
}

std::vector<VertexMask> all_sub_ktrees(const KTree& tree) {
  const Graph& g = tree.graph();
  const int k = tree.k();
  std::unordered_set<VertexMask> seen;
  std::vector<VertexMask> stack = all_k_cliques(g, k);
  for (VertexMask m : stack) seen.insert(m);
  while (!stack.empty()) {
    const VertexMask m = stack.back();
    stack.pop_back();
    for_each_vertex(g.vertices() & ~m, [&](Vertex v) {
      // Induced growth: v must see exactly a k-clique of the current set.
      const VertexMask nb = g.neighbors(v) & m;
      if (popcount(nb) != k || !g.is_clique(nb)) return;
      const VertexMask grown = m | vertex_bit(v);
      if (seen.insert(grown).second) stack.push_back(grown);
    });
  }
  std::vector<VertexMask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](VertexMask a, VertexMask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return lex_compare(a, b) < 0;
  });
  return out;
}

IntPolynomial size_poly(const std::vector<VertexMask>& sets) {
  std::vector<BigInt> c;
  for (VertexMask m : sets) {
    const auto i = static_cast<std::size_t>(popcount(m));
    if (c.size() <= i) c.resize(i + 1, BigInt(0));
    c[i] += 1;
  }
  return IntPolynomial(std::move(c));
}

}  // namespace

SubKTreeSet enumerate_sub_ktrees(const KTree& tree, VertexMask required, int cap) {
  require_cap(tree, cap);
  SubKTreeSet out;
  out.required = required;
  for (VertexMask m : all_sub_ktrees(tree)) {
    if ((m & required) == required) out.members.push_back(m);
  }
  return out;
}

IntPolynomial local_poly_from(const SubKTreeSet& all, VertexMask s) {
  std::vector<VertexMask> containing;
  for (VertexMask m : all.members) {
    if ((m & s) == s) containing.push_back(m);
  }
  return size_poly(containing);
}

IntPolynomial oracle_global_poly(const KTree& tree, int cap) {
  return size_poly(enumerate_sub_ktrees(tree, 0, cap).members);
}

Rational oracle_global_mean(const KTree& tree, int cap) {
  return oracle_global_poly(tree, cap).mean_order();
}

IntPolynomial oracle_local_poly(const KTree& tree, VertexMask s, int cap) {
  require_cap(tree, cap);
  const std::vector<VertexMask> all = all_sub_ktrees(tree);
  if (!std::binary_search(all.begin(), all.end(), s, [](VertexMask a, VertexMask b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return lex_compare(a, b) < 0;
      })) {
    throw Error(ErrorCode::NotASubKTree, set_label(s) + " does not induce a sub-k-tree");
  }
  std::vector<VertexMask> containing;
  for (VertexMask m : all) {
    if ((m & s) == s) containing.push_back(m);
  }
  return size_poly(containing);
}

Rational oracle_local_mean(const KTree& tree, VertexMask s, int cap) {
  return oracle_local_poly(tree, s, cap).mean_order();
}

CliqueMeans oracle_all_clique_means(const KTree& tree, int cap) {
  require_cap(tree, cap);
  const std::vector<VertexMask> all = all_sub_ktrees(tree);
  std::vector<VertexMask> cliques = all_k_cliques(tree.graph(), tree.k());
  std::sort(cliques.begin(), cliques.end(), [](VertexMask a, VertexMask b) { return lex_compare(a, b) < 0; });

  CliqueMeans out;
  for (VertexMask c : cliques) {
    BigInt count = 0;
    BigInt total = 0;
    for (VertexMask m : all) {
      if ((m & c) == c) {
        count += 1;
        total += popcount(m);
      }
    }
    out.means.emplace_back(Clique(c), Rational(total, count));
  }
  Rational best = out.means.front().second;
  for (const auto& entry : out.means) best = std::max(best, entry.second);
  for (const auto& [c, mean] : out.means) {
    if (mean == best) out.argmax.push_back(c);
  }
  return out;
}

}  // namespace ktree
