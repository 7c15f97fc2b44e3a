#pragma once

#include <string>

#include "ktree/ktree.hpp"

namespace ktree {

/// Isomorphism certificate: equal strings iff the k-trees are isomorphic.
/// Each k-clique, under each ordering of its vertices, roots a nested
/// encoding of the branches hanging off it; the code is the smallest one.
std::string canonical_code(const KTree& tree);

}  // namespace ktree
