#include "ktree/kt_format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "ktree/error.hpp"

namespace ktree {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

/// Non-blank, non-comment lines with their 1-based line numbers.
std::vector<std::pair<int, std::vector<std::string_view>>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string_view>>> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    auto words = split_words(line);
    if (!words.empty() && words[0][0] != '#') out.emplace_back(number, std::move(words));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

int parse_int(std::string_view word, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw Error(ErrorCode::Parse,
                "line " + std::to_string(line) + ": expected integer, got '" + std::string(word) + "'");
  }
  return value;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

KTree parse_kt(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() < 4) throw Error(ErrorCode::Parse, "truncated .kt header");

  auto expect_keyword = [&](std::size_t idx, std::string_view key, std::size_t words) {
    const auto& [line, w] = lines[idx];
    if (w[0] != key) fail(line, "expected '" + std::string(key) + "'");
    if (w.size() != words) fail(line, "wrong number of fields for '" + std::string(key) + "'");
  };
  expect_keyword(0, "ktree", 2);
  if (lines[0].second[1] != "1") fail(lines[0].first, "unsupported format version");
  expect_keyword(1, "k", 2);
  expect_keyword(2, "n", 2);
  const int k = parse_int(lines[1].second[1], lines[1].first);
  const int n = parse_int(lines[2].second[1], lines[2].first);
  if (k < 1) fail(lines[1].first, "k must be positive");
  if (n < k || n > kMaxOrder) fail(lines[2].first, "n outside k.." + std::to_string(kMaxOrder));

  expect_keyword(3, "base", static_cast<std::size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) {
    if (parse_int(lines[3].second[static_cast<std::size_t>(i)], lines[3].first) != i) {
      fail(lines[3].first, "base must list 1..k in order");
    }
  }
  if (lines.size() != static_cast<std::size_t>(4 + n - k)) {
    throw Error(ErrorCode::Parse, "expected " + std::to_string(n - k) + " add lines, found " +
                                      std::to_string(lines.size() - 4));
  }

  std::vector<Attachment> adds;
  for (std::size_t idx = 4; idx < lines.size(); ++idx) {
    expect_keyword(idx, "add", static_cast<std::size_t>(k) + 2);
    const auto& [line, w] = lines[idx];
    const int v = parse_int(w[1], line);
    const int expected = k + 1 + static_cast<int>(idx - 4);
    if (v != expected) {
      throw Error(ErrorCode::BadVertexOrder, "line " + std::to_string(line) + ": expected vertex " +
                                                 std::to_string(expected));
    }
    std::vector<Vertex> clique;
    for (std::size_t i = 2; i < w.size(); ++i) {
      const int x = parse_int(w[i], line);
      if (x < 1 || x >= v) fail(line, "attachment vertex " + std::to_string(x) + " does not exist yet");
      clique.push_back(x);
    }
    const VertexMask m = to_mask(clique);
    if (popcount(m) != k) fail(line, "attachment repeats a vertex");
    adds.push_back({v, Clique(m)});
  }
  return build_from_construction(k, adds);
}

std::string emit_kt(const KTree& tree) {
  const Construction& c = tree.construction();
  if (!c.is_ordered(tree.k())) {
    throw Error(ErrorCode::BadVertexOrder, "construction is not in .kt order; relabel first");
  }
  std::ostringstream out;
  out << "ktree 1\n" << "k " << tree.k() << "\n" << "n " << tree.order() << "\n" << "base";
  for (int i = 1; i <= tree.k(); ++i) out << ' ' << i;
  out << '\n';
  for (const Attachment& add : c.adds) {
    out << "add " << add.vertex;
    for (Vertex x : add.clique.vertices()) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

KtRelabeling relabel_for_kt(const KTree& tree) {
  const int k = tree.k();
  const int n = tree.order();
  const Graph& g = tree.graph();

  if (tree.construction().is_ordered(k)) {
    std::vector<Vertex> id(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) id[static_cast<std::size_t>(v - 1)] = v;
    return {tree, std::move(id), true};
  }

  bool natural = g.is_clique(first_vertices(k));
  std::vector<Attachment> adds;
  for (Vertex v = k + 1; natural && v <= n; ++v) {
    const VertexMask lower = g.neighbors(v) & first_vertices(v - 1);
    natural = popcount(lower) == k && g.is_clique(lower);
    adds.push_back({v, Clique(lower)});
  }
  if (natural) {
    std::vector<Vertex> id(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) id[static_cast<std::size_t>(v - 1)] = v;
    return {build_from_construction(k, adds), std::move(id), true};
  }

  // Number vertices in construction order: base first, then each add.
  const Construction& c = tree.construction();
  std::vector<Vertex> id(static_cast<std::size_t>(n), 0);
  Vertex next = 1;
  for (Vertex b : c.base.vertices()) id[static_cast<std::size_t>(b - 1)] = next++;
  for (const Attachment& add : c.adds) id[static_cast<std::size_t>(add.vertex - 1)] = next++;
  std::vector<Attachment> renamed;
  for (const Attachment& add : c.adds) {
    VertexMask m = 0;
    for_each_vertex(add.clique.mask(), [&](Vertex x) { m |= vertex_bit(id[static_cast<std::size_t>(x - 1)]); });
    renamed.push_back({id[static_cast<std::size_t>(add.vertex - 1)], Clique(m)});
  }
  return {build_from_construction(k, renamed), std::move(id), false};
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  int n = 0;
  for (const auto& [line, w] : content_lines(text)) {
    if (w.size() != 2) fail(line, "expected 'u v'");
    const int u = parse_int(w[0], line);
    const int v = parse_int(w[1], line);
    if (u < 1 || v < 1) fail(line, "vertex ids are 1-based");
    if (u == v) fail(line, "self-loop");
    if (u > kMaxOrder || v > kMaxOrder) fail(line, "vertex id above " + std::to_string(kMaxOrder));
    edges.emplace_back(u, v);
    n = std::max({n, u, v});
  }
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace ktree
