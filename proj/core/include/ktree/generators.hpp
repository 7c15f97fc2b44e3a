#pragma once

#include <cstdint>

#include "ktree/ktree.hpp"

namespace ktree {

/// k-th power of a path: vertex j > k+1 attaches to {j-k, ..., j-1}.
KTree gen_path_type(int k, int n);

/// Every added vertex attaches to the base clique 1..k.
KTree gen_star_type(int k, int n_added);

/// Star-type k-tree on a_1..a_k = 1..k and b_i = k+i, plus vertices
/// c_i = k+n+i joined to {b_i} together with the base minus a_j, where
/// j = ((i-1) mod k) + 1. Order k + 2n. Requires n >= 3.
KTree gen_Tn_example(int k, int n);

/// Path 1..2n+1 with two pendant vertices at each end; order 2n+5.
KTree gen_caterpillar_example(int n);

/// Uniform choice among all current k-cliques at every step.
KTree random_ktree(int k, int n, std::uint64_t seed);

}  // namespace ktree
