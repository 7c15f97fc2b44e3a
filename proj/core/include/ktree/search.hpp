#pragma once

#include <cstdint>

#include "ktree/suites.hpp"

namespace ktree {

/// Hunt for k-trees whose largest local mean order is attained only at
/// degree-2 cliques, never at an end clique.
struct SearchConfig {
  int k = 2;
  int min_n = 0;  // 0: start at k + 1
  int max_n = 7;
  CorpusMode mode = CorpusMode::exhaustive;
  /// Random mode: number of trees. Exhaustive mode: instance limit, 0 for none.
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  bool dedupe = true;
  int jobs = 1;
  int cap = kDefaultOracleCap;
  std::size_t near_miss_count = 10;
};

Json search_config_to_json(const SearchConfig& cfg);

/// Error: BadK for k < 2 (trees are covered by the caterpillar suite),
/// BadConfig, TooLarge.
Json search_degree2_max(const SearchConfig& cfg);

/// {"base": [...], "adds": [[x, [a, b, ...]], ...]}.
Json construction_json(const KTree& tree);

}  // namespace ktree
