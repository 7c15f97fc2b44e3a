#pragma once

#include <utility>
#include <vector>

#include "ktree/exact.hpp"
#include "ktree/ktree.hpp"

namespace ktree {

// Ground truth by exhaustive enumeration of sub-k-trees. Deliberately shares
// nothing with the characteristic-tree route beyond the graph itself.

inline constexpr int kDefaultOracleCap = 16;

/// Vertex sets whose induced subgraph is a k-tree, optionally restricted to
/// supersets of `required`. Members are sorted by (size, lexicographic).
struct SubKTreeSet {
  VertexMask required = 0;
  std::vector<VertexMask> members;
};

/// Error: TooLarge when the order exceeds `cap`.
SubKTreeSet enumerate_sub_ktrees(const KTree& tree, VertexMask required = 0,
                                 int cap = kDefaultOracleCap);

/// phi_{T,S} read off an unfiltered enumeration.
IntPolynomial local_poly_from(const SubKTreeSet& all, VertexMask s);

IntPolynomial oracle_global_poly(const KTree& tree, int cap = kDefaultOracleCap);
Rational oracle_global_mean(const KTree& tree, int cap = kDefaultOracleCap);

/// Error: NotASubKTree unless tree[s] is itself a k-tree.
IntPolynomial oracle_local_poly(const KTree& tree, VertexMask s, int cap = kDefaultOracleCap);
Rational oracle_local_mean(const KTree& tree, VertexMask s, int cap = kDefaultOracleCap);

struct CliqueMeans {
  std::vector<std::pair<Clique, Rational>> means;  // lexicographic clique order
  std::vector<Clique> argmax;
};

CliqueMeans oracle_all_clique_means(const KTree& tree, int cap = kDefaultOracleCap);

}  // namespace ktree
