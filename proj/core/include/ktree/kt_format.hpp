#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ktree/ktree.hpp"

namespace ktree {

// Construction text format, version 1:
//
//   ktree 1
//   k <int>
//   n <int>
//   base 1 2 ... k
//   add <new_id> <v1> ... <vk>      (n - k lines, new ids k+1..n in order)
//
// Blank lines and lines starting with '#' are ignored.

KTree parse_kt(std::string_view text);

/// Requires an ordered construction; see relabel_for_kt otherwise.
std::string emit_kt(const KTree& tree);

struct KtRelabeling {
  KTree tree;
  /// new_id[v-1] is the id vertex v of the input carries in `tree`.
  std::vector<Vertex> new_id;
  bool identity = true;
};

/// Keeps the labels when vertex i > k has exactly k lower-numbered
/// neighbours forming a clique for every i; otherwise relabels along a
/// recognized construction.
KtRelabeling relabel_for_kt(const KTree& tree);

/// Lines "u v", one edge per line; the order is the largest id seen.
Graph parse_edge_list(std::string_view text);

}  // namespace ktree
