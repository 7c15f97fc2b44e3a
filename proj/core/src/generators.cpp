#include "ktree/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ktree/error.hpp"

namespace ktree {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorCode::SizeTooSmall, msg);
}

}  // namespace

KTree gen_path_type(int k, int n) {
  require(k >= 1 && n >= k, "path-type k-tree needs k >= 1 and n >= k");
  std::vector<Attachment> adds;
  for (Vertex v = k + 1; v <= n; ++v) {
    const VertexMask window = first_vertices(v - 1) & ~first_vertices(std::max(0, v - 1 - k));
    adds.push_back({v, Clique(window)});
  }
  return build_from_construction(k, adds);
}

KTree gen_star_type(int k, int n_added) {
  require(k >= 1 && n_added >= 0, "star-type k-tree needs k >= 1 and n_added >= 0");
  std::vector<Attachment> adds;
  for (int i = 1; i <= n_added; ++i) adds.push_back({k + i, Clique(first_vertices(k))});
  return build_from_construction(k, adds);
}

KTree gen_Tn_example(int k, int n) {
  require(k >= 1 && n >= 3, "T_n needs k >= 1 and n >= 3");
  const VertexMask base = first_vertices(k);
  std::vector<Attachment> adds;
  for (int i = 1; i <= n; ++i) adds.push_back({k + i, Clique(base)});
  for (int i = 1; i <= n; ++i) {
    const Vertex a = ((i - 1) % k) + 1;
    adds.push_back({k + n + i, Clique((base & ~vertex_bit(a)) | vertex_bit(k + i))});
  }
  return build_from_construction(k, adds);
}

KTree gen_caterpillar_example(int n) {
  require(n >= 1, "caterpillar needs n >= 1");
  const int spine = 2 * n + 1;
  std::vector<Attachment> adds;
  for (Vertex v = 2; v <= spine; ++v) adds.push_back({v, Clique{v - 1}});
  adds.push_back({spine + 1, Clique{1}});
  adds.push_back({spine + 2, Clique{1}});
  adds.push_back({spine + 3, Clique{spine}});
  adds.push_back({spine + 4, Clique{spine}});
  return build_from_construction(1, adds);
}

KTree random_ktree(int k, int n, std::uint64_t seed) {
  if (k < 1) throw Error(ErrorCode::BadK, "k must be at least 1");
  require(n >= k, "random k-tree needs n >= k");
  if (n > kMaxOrder) throw Error(ErrorCode::TooLarge, "order above " + std::to_string(kMaxOrder));

  std::mt19937_64 rng(seed);
  std::vector<VertexMask> cliques{first_vertices(k)};
  std::vector<Attachment> adds;
  for (Vertex v = k + 1; v <= n; ++v) {
    // Modulo reduction keeps the stream portable across standard libraries.
    const VertexMask c = cliques[rng() % cliques.size()];
    adds.push_back({v, Clique(c)});
    for_each_vertex(c, [&](Vertex x) { cliques.push_back((c & ~vertex_bit(x)) | vertex_bit(v)); });
  }
  return build_from_construction(k, adds);
}

}  // namespace ktree
