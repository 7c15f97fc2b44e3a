#include "ktree/enumerate.hpp"

#include <string>
#include <vector>

#include "ktree/error.hpp"

namespace ktree {
namespace {

void require_sizes(int k, int n) {
  if (k < 1) throw Error(ErrorCode::BadK, "k must be positive");
  if (n < k) throw Error(ErrorCode::SizeTooSmall, "n must be at least k");
  if (n > kMaxOrder) throw Error(ErrorCode::TooLarge, "n exceeds " + std::to_string(kMaxOrder));
}

void push_new_cliques(std::vector<VertexMask>& cliques, VertexMask attach, Vertex x) {
  for_each_vertex(attach, [&](Vertex a) {
    cliques.push_back((attach & ~vertex_bit(a)) | vertex_bit(x));
  });
}

KTree build_from_choices(int k, int n, const std::vector<std::uint64_t>& choice) {
  std::vector<VertexMask> cliques{first_vertices(k)};
  std::vector<Attachment> adds;
  adds.reserve(static_cast<std::size_t>(n - k));
  for (int j = 0; j < n - k; ++j) {
    const Vertex x = k + 1 + j;
    const VertexMask attach = cliques[choice[static_cast<std::size_t>(j)]];
    adds.push_back({x, Clique(attach)});
    push_new_cliques(cliques, attach, x);
  }
  return build_from_construction(k, adds);
}

}  // namespace

BigInt labeled_ktree_count(int k, int n) {
  require_sizes(k, n);
  BigInt total = 1;
  for (int j = 0; j < n - k; ++j) total *= 1 + k * j;
  return total;
}

std::uint64_t checked_labeled_count(int k, int n) {
  const BigInt total = labeled_ktree_count(k, n);
  if (total > kLabeledBuildLimit) {
    throw Error(ErrorCode::TooLarge, "k=" + std::to_string(k) + " n=" + std::to_string(n) + " has " +
                                         total.str() + " labeled builds, above the limit of " +
                                         std::to_string(kLabeledBuildLimit));
  }
  return static_cast<std::uint64_t>(total);
}

KTree labeled_ktree_at(int k, int n, std::uint64_t index) {
  const std::uint64_t total = checked_labeled_count(k, n);
  if (index >= total) {
    throw Error(ErrorCode::TooLarge, "index " + std::to_string(index) + " out of range");
  }
  std::vector<std::uint64_t> choice(static_cast<std::size_t>(n - k));
  for (int j = n - k - 1; j >= 0; --j) {
    const std::uint64_t radix = 1 + static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(j);
    choice[static_cast<std::size_t>(j)] = index % radix;
    index /= radix;
  }
  return build_from_choices(k, n, choice);
}

void for_each_labeled_ktree(int k, int n,
                            const std::function<bool(std::uint64_t, const KTree&)>& visit) {
  (void)checked_labeled_count(k, n);
  const int steps = n - k;
  std::vector<std::uint64_t> choice(static_cast<std::size_t>(steps), 0);
  std::uint64_t index = 0;
  for (;;) {
    if (!visit(index++, build_from_choices(k, n, choice))) return;
    // Odometer increment, least significant digit last.
    int j = steps - 1;
    while (j >= 0) {
      const std::uint64_t radix = 1 + static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(j);
      if (++choice[static_cast<std::size_t>(j)] < radix) break;
      choice[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) return;
  }
}

}  // namespace ktree
