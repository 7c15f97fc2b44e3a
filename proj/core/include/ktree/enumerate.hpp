#pragma once

#include <cstdint>
#include <functional>

#include "ktree/exact.hpp"
#include "ktree/ktree.hpp"

namespace ktree {

// Labeled construction sequences. At step j = 0, 1, ... there are 1 + k*j
// current k-cliques, kept in creation order: the base, then for each added
// vertex x with attachment A the cliques (A - a) + x for a in A ascending.
// Index digits are mixed radix with step 0 most significant.

inline constexpr std::uint64_t kLabeledBuildLimit = 50'000'000;

/// prod_{j=0}^{n-k-1} (1 + k j); 1 when n = k.
BigInt labeled_ktree_count(int k, int n);

/// Error: TooLarge when the count exceeds kLabeledBuildLimit; BadK, SizeTooSmall.
std::uint64_t checked_labeled_count(int k, int n);

/// The build with the given index. Error: TooLarge when out of range.
KTree labeled_ktree_at(int k, int n, std::uint64_t index);

/// Every build in index order. Return false from `visit` to stop early.
void for_each_labeled_ktree(int k, int n,
                            const std::function<bool(std::uint64_t, const KTree&)>& visit);

}  // namespace ktree
