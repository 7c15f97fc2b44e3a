#include "ktree/canonical.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace ktree {
namespace {

struct Encoder {
  const Graph& g;
  int k;

  VertexMask apexes(const std::array<Vertex, kMaxOrder>& c) const {
    VertexMask m = g.vertices();
    for (int i = 0; i < k; ++i) m &= g.neighbors(c[static_cast<std::size_t>(i)]);
    return m;
  }

  // Branches behind the ordered clique `c`, not going back through `from`.
  std::string face(const std::array<Vertex, kMaxOrder>& c, Vertex from) const {
    VertexMask next = apexes(c);
    if (from != 0) next &= ~vertex_bit(from);
    std::vector<std::string> parts;
    for_each_vertex(next, [&](Vertex v) {
      std::string part = "(";
      std::array<Vertex, kMaxOrder> sub = c;
      for (int i = 0; i < k; ++i) {
        const auto slot = static_cast<std::size_t>(i);
        sub[slot] = v;
        part += face(sub, c[slot]);
        sub[slot] = c[slot];
      }
      part += ')';
      parts.push_back(std::move(part));
    });
    std::sort(parts.begin(), parts.end());
    std::string out = "[";
    for (const std::string& p : parts) out += p;
    out += ']';
    return out;
  }
};

}  // namespace

std::string canonical_code(const KTree& tree) {
  const Encoder enc{tree.graph(), tree.k()};
  std::string best;
  bool first = true;
  for (const Clique& c : k_cliques(tree)) {
    std::vector<Vertex> order = c.vertices();
    do {
      std::array<Vertex, kMaxOrder> ordered{};
      std::copy(order.begin(), order.end(), ordered.begin());
      std::string code = enc.face(ordered, 0);
      if (first || code < best) {
        best = std::move(code);
        first = false;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return "k" + std::to_string(tree.k()) + "n" + std::to_string(tree.order()) + ":" + best;
}

}  // namespace ktree
