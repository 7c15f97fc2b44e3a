#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ktree/graph.hpp"

namespace ktree {

/// One step of a construction: `vertex` is joined to every vertex of `clique`.
struct Attachment {
  Vertex vertex = 0;
  Clique clique;

  friend bool operator==(const Attachment&, const Attachment&) = default;
};

/// A base k-clique followed by single-vertex attachments.
struct Construction {
  Clique base;
  std::vector<Attachment> adds;

  /// True when the base is 1..k and the adds introduce k+1, k+2, ... in order.
  bool is_ordered(int k) const;

  friend bool operator==(const Construction&, const Construction&) = default;
};

/// A k-tree together with a construction that produces it. Immutable.
class KTree {
 public:
  int k() const { return k_; }
  int order() const { return graph_.order(); }
  const Graph& graph() const { return graph_; }
  const Construction& construction() const { return construction_; }
  bool is_trivial() const { return order() == k_; }

 private:
  friend KTree rebuild(int k, int n, const Construction& construction);

  KTree(int k, Graph graph, Construction construction)
      : k_(k), graph_(std::move(graph)), construction_(std::move(construction)) {}

  int k_ = 1;
  Graph graph_;
  Construction construction_;
};

/// Base clique 1..k, then adds[i] must introduce vertex k+1+i. Errors:
/// BadVertexOrder, AttachmentNotClique.
KTree build_from_construction(int k, std::span<const Attachment> adds);

/// Like build_from_construction but accepts any labeling of 1..n.
KTree rebuild(int k, int n, const Construction& construction);

/// Reverses the recursive definition: peels the lowest-id simplicial vertex
/// of degree k until K_k remains. Errors: NotKTree, Disconnected.
KTree recognize_ktree(const Graph& graph, int k);

std::vector<Clique> k_cliques(const KTree& tree);
std::vector<Clique> kp1_cliques(const KTree& tree);

enum class CliqueKind { isolated, end, degree2, major };

std::string_view to_string(CliqueKind kind);

struct CliqueClass {
  int degree = 0;
  CliqueKind kind = CliqueKind::isolated;
};

/// Throws NotAClique unless `c` is a k-clique of `tree`.
void require_k_clique(const KTree& tree, const Clique& c);

/// N_T(C): vertices outside C adjacent to every vertex of C. Unchecked.
VertexMask common_neighbors(const KTree& tree, VertexMask c);

CliqueClass classify_degree(int degree);
CliqueClass clique_degree(const KTree& tree, const Clique& c);

/// Vertices of degree exactly k. Error: TrivialKTree when n = k.
std::vector<Vertex> k_leaves(const KTree& tree);
VertexMask k_leaf_mask(const KTree& tree);

/// k-cliques sharing a (k+1)-clique with `c`, sorted.
std::vector<Clique> adjacent_cliques(const KTree& tree, const Clique& c);

/// K_k, K_{k+1}, or exactly two k-leaves.
bool is_path_type(const KTree& tree);

}  // namespace ktree
