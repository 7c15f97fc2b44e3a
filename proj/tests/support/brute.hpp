#pragma once

// Independent reference implementations for tests. Nothing here calls the
// fast paths of the library; only Graph and the mask helpers are shared.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ktree/exact.hpp"
#include "ktree/graph.hpp"

namespace brute {

using ktree::Graph;
using ktree::Rational;
using ktree::Vertex;
using ktree::VertexMask;

inline bool connected_within(const Graph& g, VertexMask m) {
  if (m == 0) return false;
  VertexMask seen = ktree::vertex_bit(ktree::lowest_vertex(m));
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    ktree::for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v) & m; });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == m;
}

inline int edges_within(const Graph& g, VertexMask m) {
  int twice = 0;
  ktree::for_each_vertex(m, [&](Vertex v) { twice += ktree::popcount(g.neighbors(v) & m); });
  return twice / 2;
}

/// Is g[m] a k-tree? Peels any simplicial vertex of degree k (highest id
/// first, unlike the library) and requires a k-clique at the end.
inline bool induces_ktree(const Graph& g, VertexMask m, int k) {
  const int size = ktree::popcount(m);
  if (size < k) return false;
  if (size == k) return g.is_clique(m);
  if (edges_within(g, m) != k * size - k * (k + 1) / 2) return false;
  VertexMask rest = m;
  while (ktree::popcount(rest) > k) {
    Vertex pick = 0;
    for (Vertex v = ktree::highest_vertex(rest); v >= 1; --v) {
      if (!ktree::contains(rest, v)) continue;
      const VertexMask nb = g.neighbors(v) & rest;
      if (ktree::popcount(nb) == k && g.is_clique(nb)) {
        pick = v;
        break;
      }
    }
    if (pick == 0) return false;
    rest &= ~ktree::vertex_bit(pick);
  }
  return g.is_clique(rest);
}

/// Coefficients a_i of sub-k-trees containing `required`, by 2^n subsets.
inline std::vector<std::uint64_t> subset_counts(const Graph& g, int k, VertexMask required) {
  const int n = g.order();
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
  for (VertexMask m = 1; m < (VertexMask{1} << n); ++m) {
    if ((m & required) != required) continue;
    if (k == 1 ? connected_within(g, m) : induces_ktree(g, m, k)) ++a[static_cast<std::size_t>(ktree::popcount(m))];
  }
  return a;
}

inline Rational mean_of(const std::vector<std::uint64_t>& a) {
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    count += a[i];
    total += a[i] * i;
  }
  return Rational(ktree::BigInt(total), ktree::BigInt(count));
}

inline std::vector<std::uint64_t> coeffs_of(const ktree::IntPolynomial& p, int n) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i] = static_cast<std::uint64_t>(p.coeffs()[i]);
  return out;
}

/// Isomorphism by trying every permutation.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da;
  std::vector<int> db;
  for (Vertex v = 1; v <= a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (a.relabeled(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace brute
