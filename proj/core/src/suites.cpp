#include "ktree/suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "ktree/char_tree.hpp"
#include "ktree/enumerate.hpp"
#include "ktree/error.hpp"
#include "ktree/generators.hpp"
#include "ktree/parallel.hpp"
#include "ktree/tree_poly.hpp"

namespace ktree {

std::string to_string(CorpusMode mode) {
  return mode == CorpusMode::exhaustive ? "exhaustive" : "random";
}

CorpusMode parse_corpus_mode(const std::string& text) {
  if (text == "exhaustive") return CorpusMode::exhaustive;
  if (text == "random") return CorpusMode::random;
  throw Error(ErrorCode::BadConfig, "unknown mode '" + text + "'");
}

Json config_to_json(const SuiteConfig& cfg) {
  Json j;
  j["suite"] = cfg.suite;
  j["k"] = {cfg.k_min, cfg.k_max};
  j["n"] = {cfg.n_min, cfg.n_max};
  j["mode"] = to_string(cfg.mode);
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["cap"] = cfg.cap;
  j["path_type_only"] = cfg.path_type_only;
  j["subset_max_n"] = cfg.subset_max_n;
  return j;
}

Json to_json(const InstanceId& id) { return {{"k", id.k}, {"n", id.n}, {"index", id.index}}; }

void Collector::violation(const InstanceId& id, const std::string& check, const std::string& detail,
                          Json extra) {
  ++violation_count_;
  tally(check + ".violation");
  if (violations_.size() >= kMaxStoredViolations) return;
  Json v;
  v["instance"] = to_json(id);
  v["check"] = check;
  v["detail"] = detail;
  for (auto& [key, value] : extra.items()) v[key] = value;
  violations_.push_back(std::move(v));
}

void Collector::report(const InstanceId& id, const TheoremReport& r) {
  tally(r.check + (r.equality ? ".equality" : ".strict"));
  if (r.ok()) return;
  violation(id, r.check,
            r.instance + (r.inequality_holds ? " equality mismatch" : " inequality fails"),
            {{"lhs", r.lhs.str()},
             {"rhs", r.rhs.str()},
             {"equality", r.equality},
             {"predicted_equality", r.predicted_equality}});
}

void Collector::merge(Collector&& other) {
  instances_ += other.instances_;
  violation_count_ += other.violation_count_;
  for (const auto& [key, count] : other.tallies_) tallies_[key] += count;
  for (Json& v : other.violations_) {
    if (violations_.size() < kMaxStoredViolations) violations_.push_back(std::move(v));
  }
  for (Json& d : other.details_) details_.push_back(std::move(d));
}

TheoremReport check_end_clique(const KTree& tree, const Clique& c1, const Clique& c2) {
  if (clique_degree(tree, c1).kind != CliqueKind::end) {
    throw Error(ErrorCode::NotEndClique, c1.label() + " is not an end clique");
  }
  const auto adjacent = adjacent_cliques(tree, c1);
  if (std::find(adjacent.begin(), adjacent.end(), c2) == adjacent.end()) {
    throw Error(ErrorCode::NotAdjacentCliques, c1.label() + " and " + c2.label());
  }
  const bool c2_end = clique_degree(tree, c2).kind == CliqueKind::end;
  const bool c1_has_leaf = (k_leaf_mask(tree) & c1.mask()) != 0;
  return make_report("end_clique", "C1=" + c1.label() + " C2=" + c2.label(),
                     local_mean_order_clique(tree, c1), local_mean_order_clique(tree, c2),
                     c2_end || (is_path_type(tree) && c1_has_leaf));
}

std::vector<CorpusSegment> make_corpus(const SuiteConfig& cfg) {
  if (cfg.k_min < 1 || cfg.k_max < cfg.k_min) throw Error(ErrorCode::BadConfig, "bad k range");
  if (cfg.n_max < cfg.n_min) throw Error(ErrorCode::BadConfig, "bad n range");
  if (cfg.n_max > kMaxOrder) throw Error(ErrorCode::TooLarge, "n above " + std::to_string(kMaxOrder));
  std::vector<CorpusSegment> out;
  if (cfg.mode == CorpusMode::exhaustive) {
    for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
      for (int n = std::max(k, cfg.n_min); n <= cfg.n_max; ++n) {
        CorpusSegment s;
        s.k = k;
        s.n = n;
        s.count = checked_labeled_count(k, n);
        s.make = [k, n](std::uint64_t i) { return labeled_ktree_at(k, n, i); };
        s.id = [k, n](std::uint64_t i) { return InstanceId{k, n, i}; };
        out.push_back(std::move(s));
      }
    }
    return out;
  }
  if (cfg.trials < 1) throw Error(ErrorCode::BadConfig, "random mode needs trials >= 1");
  if (cfg.n_max < cfg.k_min) throw Error(ErrorCode::BadConfig, "n range below k");
  struct Draw {
    int k;
    int n;
    std::uint64_t tree_seed;
  };
  auto draw = [cfg](std::uint64_t i) {
    std::mt19937_64 rng(cfg.seed + i);
    const int k = cfg.k_min + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                         std::min(cfg.k_max, cfg.n_max) - cfg.k_min + 1));
    const int lo = std::max(k, cfg.n_min);
    const int n = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.n_max - lo + 1));
    return Draw{k, n, rng()};
  };
  CorpusSegment s;
  s.count = cfg.trials;
  s.make = [draw](std::uint64_t i) {
    const Draw d = draw(i);
    return random_ktree(d.k, d.n, d.tree_seed);
  };
  s.id = [draw](std::uint64_t i) {
    const Draw d = draw(i);
    return InstanceId{d.k, d.n, i};
  };
  out.push_back(std::move(s));
  return out;
}

namespace {

using Body = std::function<void(const KTree&, const InstanceId&, Collector&)>;

std::vector<std::pair<Clique, CliqueCounts>> counts_table(const KTree& tree) {
  std::vector<std::pair<Clique, CliqueCounts>> out;
  for (const Clique& c : k_cliques(tree)) out.emplace_back(c, clique_counts(tree, c));
  return out;
}

// Tree suites.

void jamison_ratio_body(const KTree& tree, const InstanceId& id, Collector& out) {
  const Graph& g = tree.graph();
  for (Vertex u = 1; u <= g.order(); ++u) {
    const JamisonCheck c = jamison_ratio_check(g, u);
    const bool predicted = path_with_leaf_predicate(g, u);
    out.tally(c.tight ? "jamison_ratio.tight" : "jamison_ratio.slack");
    if (c.lhs > c.rhs || c.tight != predicted) {
      out.violation(id, "jamison_ratio", "u=" + std::to_string(u),
                    {{"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}, {"predicted_tight", predicted}});
    }
  }
}

void jamison_bound_body(const KTree& tree, const InstanceId& id, Collector& out) {
  const Graph& g = tree.graph();
  out.report(id, make_report("jamison_bound", "tree", global_mean_order_tree(g),
                             Rational(BigInt(g.order() + 2), BigInt(3)), is_path(g)));
}

template <class F>
void for_each_ordered_edge(const Graph& g, F&& f) {
  for (Vertex u = 1; u <= g.order(); ++u) {
    for_each_vertex(g.neighbors(u), [&](Vertex v) { f(u, v); });
  }
}

void kelmans_pair_body(const KTree& tree, const InstanceId& id, Collector& out) {
  for_each_ordered_edge(tree.graph(), [&](Vertex u, Vertex v) {
    auto [a, b] = check_kelmans_pair(tree.graph(), u, v);
    out.report(id, a);
    out.report(id, b);
  });
}

void kelmans_gain_body(const KTree& tree, const InstanceId& id, Collector& out) {
  for_each_ordered_edge(tree.graph(), [&](Vertex u, Vertex v) {
    out.report(id, check_kelmans_gain(tree.graph(), u, v));
  });
}

void partial_kelmans_body(const KTree& tree, const InstanceId& id, Collector& out, int subset_max_n) {
  const Graph& g = tree.graph();
  for_each_ordered_edge(g, [&](Vertex u, Vertex v) {
    const VertexMask n2 = kelmans_candidates(g, v, u);
    std::vector<VertexMask> sets;
    if (g.order() <= subset_max_n) {
      // Every subset of n2, via the standard submask walk.
      VertexMask w = n2;
      for (;;) {
        sets.push_back(w);
        if (w == 0) break;
        w = (w - 1) & n2;
      }
    } else {
      sets.push_back(0);
      for_each_vertex(n2, [&](Vertex w) { sets.push_back(vertex_bit(w)); });
      if (popcount(n2) > 1) sets.push_back(n2);
    }
    for (VertexMask w : sets) out.report(id, check_partial_kelmans(g, u, v, w));
  });
}

void leaf_neighbor_body(const KTree& tree, const InstanceId& id, Collector& out) {
  const Graph& g = tree.graph();
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) != 1) continue;
    out.report(id, check_leaf_neighbor(g, v, lowest_vertex(g.neighbors(v))));
  }
}

void cross_path_body(const KTree& tree, const InstanceId& id, Collector& out, int cap) {
  const Graph& g = tree.graph();
  const SubKTreeSet all = enumerate_sub_ktrees(tree, 0, cap);
  for (Vertex u = 1; u <= g.order(); ++u) {
    const IntPolynomial direct = subtree_poly_at_vertex(g, u);
    const IntPolynomial oracle = local_poly_from(all, vertex_bit(u));
    const Rational mean = direct.mean_order();
    out.tally("cross_path.vertex");
    if (direct != oracle) {
      out.violation(id, "cross_path", "u=" + std::to_string(u) + " polynomial differs",
                    {{"direct", direct.str()}, {"oracle", oracle.str()}});
      continue;
    }
    for_each_vertex(g.neighbors(u), [&](Vertex v) {
      const BranchDecomposition d = branch_decomposition(g, u, v);
      const Rational via = local_mean_via_branches(d, Side::u);
      const bool counts_match = d.phi_at_one(Side::u) == direct.value_at_one() &&
                                d.dphi_at_one(Side::u) == Rational(direct.derivative_at_one());
      out.tally("cross_path.pair");
      if (via != mean || !counts_match) {
        out.violation(id, "cross_path", "u=" + std::to_string(u) + " v=" + std::to_string(v),
                      {{"via_branches", via.str()}, {"direct", mean.str()}});
      }
    });
  }
}

// k-tree suites.

void char_tree_reduction_body(const KTree& tree, const InstanceId& id, Collector& out, int cap) {
  const SubKTreeSet all = enumerate_sub_ktrees(tree, 0, cap);
  const int k = tree.k();
  for (const Clique& c : k_cliques(tree)) {
    const IntPolynomial fast = local_poly_clique(tree, c);
    const IntPolynomial oracle = local_poly_from(all, c.mask());
    out.tally("char_tree_reduction.clique");
    if (fast != oracle) {
      out.violation(id, "char_tree_poly", "polynomial at " + c.label(),
                    {{"fast", fast.str()}, {"oracle", oracle.str()}});
    }
    const Rational mean = local_mean_order_clique(tree, c);
    if (mean != oracle.mean_order() || clique_counts(tree, c).mean(k) != mean) {
      out.violation(id, "char_tree_mean", "mean at " + c.label(),
                    {{"fast", mean.str()}, {"oracle", oracle.mean_order().str()}});
    }
    const CharTree ct = characteristic_tree(tree, c);
    if (ct.order() != tree.order() - k + 1 || !ct.tree.is_tree()) {
      out.violation(id, "char_tree_shape", "T'_C shape at " + c.label());
    }
  }
}

void adjacent_char_trees_body(const KTree& tree, const InstanceId& id, Collector& out) {
  for (const Clique& c1 : k_cliques(tree)) {
    for (const Clique& c2 : adjacent_cliques(tree, c1)) {
      const AdjacencyCheck check = verify_adjacent_char_trees(tree, c1, c2);
      out.tally(check.moved == 0 ? "adjacent_char_trees.empty_move" : "adjacent_char_trees.moved");
      if (!check.passed) {
        out.violation(id, "adjacent_char_trees", c1.label() + " -> " + c2.label() + ": " + check.detail,
                      {{"moved", set_label(check.moved)}});
      }
    }
  }
}

void nonmajor_max_body(const KTree& tree, const InstanceId& id, Collector& out) {
  const auto table = counts_table(tree);
  std::size_t best = 0;
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (compare_means(table[i].second, table[best].second) > 0) best = i;
  }
  bool has_nonmajor = false;
  bool has_end = false;
  for (const auto& [c, counts] : table) {
    if (compare_means(counts, table[best].second) != 0) continue;
    const CliqueKind kind = clique_degree(tree, c).kind;
    has_nonmajor = has_nonmajor || kind != CliqueKind::major;
    has_end = has_end || kind == CliqueKind::end || kind == CliqueKind::isolated;
  }
  out.tally(has_end ? "nonmajor_max.argmax_has_end" : "nonmajor_max.argmax_without_end");
  if (!has_nonmajor) {
    out.violation(id, "nonmajor_max", "every maximizer is major",
                  {{"max", table[best].second.mean(tree.k()).str()}});
  }

  auto lookup = [&](const Clique& c) -> const CliqueCounts& {
    const auto it = std::lower_bound(table.begin(), table.end(), c,
                                     [](const auto& entry, const Clique& key) { return entry.first < key; });
    return it->second;
  };
  for (const auto& [c, counts] : table) {
    if (clique_degree(tree, c).kind != CliqueKind::major) continue;
    out.tally("nonmajor_max.major_clique");
    bool improves = false;
    for (const Clique& next : adjacent_cliques(tree, c)) {
      if (compare_means(lookup(next), counts) > 0) {
        improves = true;
        break;
      }
    }
    if (!improves) {
      out.violation(id, "nonmajor_max", "no strictly better neighbour of major " + c.label(),
                    {{"mean", counts.mean(tree.k()).str()}});
    }
  }
}

void end_clique_body(const KTree& tree, const InstanceId& id, Collector& out) {
  if (tree.is_trivial()) return;
  for (const Clique& c1 : k_cliques(tree)) {
    if (clique_degree(tree, c1).kind != CliqueKind::end) continue;
    for (const Clique& c2 : adjacent_cliques(tree, c1)) out.report(id, check_end_clique(tree, c1, c2));
  }
}

// Named families.

void caterpillar_family(const SuiteConfig& cfg, Collector& out) {
  for (int n = std::max(1, cfg.n_min); n <= cfg.n_max; ++n) {
    const KTree tree = gen_caterpillar_example(n);
    const Graph& g = tree.graph();
    const InstanceId id{1, tree.order(), static_cast<std::uint64_t>(n)};
    out.instance();
    std::vector<Rational> means;
    for (Vertex v = 1; v <= g.order(); ++v) means.push_back(local_mean_order_vertex(g, v));
    const Rational best = *std::max_element(means.begin(), means.end());
    std::vector<int> argmax_degrees;
    Json argmax = Json::array();
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (means[v - 1] != best) continue;
      argmax_degrees.push_back(g.degree(v));
      argmax.push_back(v);
    }
    const bool all_deg2 = std::all_of(argmax_degrees.begin(), argmax_degrees.end(), [](int d) { return d == 2; });
    const bool all_leaf = std::all_of(argmax_degrees.begin(), argmax_degrees.end(), [](int d) { return d == 1; });
    std::string expectation = "recorded";
    if (n >= 7) {
      expectation = "degree2";
      if (!all_deg2) out.violation(id, "caterpillar", "maximizer is not a degree-2 vertex", {{"argmax", argmax}});
    } else if (n <= 2) {
      expectation = "leaf";
      if (!all_leaf) out.violation(id, "caterpillar", "maximizer is not a leaf", {{"argmax", argmax}});
    }
    out.tally(all_deg2 ? "caterpillar.argmax_degree2" : all_leaf ? "caterpillar.argmax_leaf"
                                                                  : "caterpillar.argmax_other");
    out.detail({{"instance", to_json(id)},
                {"family_n", n},
                {"argmax", argmax},
                {"argmax_degrees", argmax_degrees},
                {"max", best.display()},
                {"expectation", expectation}});
  }
}

void tn_family(const SuiteConfig& cfg, Collector& out) {
  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    for (int n = std::max(3, cfg.n_min); n <= cfg.n_max; ++n) {
      const KTree tree = gen_Tn_example(k, n);
      const InstanceId id{k, tree.order(), static_cast<std::uint64_t>(n)};
      out.instance();
      const auto means = all_clique_means(tree);
      Rational best = means.front().second;
      for (const auto& entry : means) best = std::max(best, entry.second);
      Json argmax = Json::array();
      bool all_end = true;
      for (const auto& [c, mean] : means) {
        if (mean != best) continue;
        const CliqueClass cls = clique_degree(tree, c);
        argmax.push_back({{"clique", c.label()}, {"degree", cls.degree}});
        all_end = all_end && cls.kind == CliqueKind::end;
      }
      out.tally(all_end ? "tn_family.argmax_end" : "tn_family.argmax_not_end");
      if (!all_end) out.violation(id, "tn_family", "a maximizer is not an end clique", {{"argmax", argmax}});

      const Clique base(first_vertices(k));
      const ClimbResult climb = climb_to_nonmajor(tree, base);
      const bool climbed = !climb.stalled &&
                           clique_degree(tree, climb.final_clique).kind != CliqueKind::major &&
                           climb.trace.back().second > climb.trace.front().second;
      if (!climbed) {
        out.violation(id, "tn_family", "climb from the base clique failed",
                      {{"final", climb.final_clique.label()}});
      }
      out.detail({{"instance", to_json(id)},
                  {"family_n", n},
                  {"argmax", argmax},
                  {"max", best.display()},
                  {"climb_final", climb.final_clique.label()},
                  {"climb_steps", climb.trace.size() - 1}});
    }
  }
}

struct SuiteDef {
  const char* name;
  bool trees_only;
  bool family;
};

constexpr SuiteDef kSuites[] = {
    {"adjacent_char_trees", false, false}, {"caterpillar", true, true},
    {"char_tree_reduction", false, false}, {"cross_path", true, false},
    {"end_clique", false, false},          {"jamison_bound", true, false},
    {"jamison_ratio", true, false},        {"kelmans_gain", true, false},
    {"kelmans_pair", true, false},         {"leaf_neighbor", true, false},
    {"nonmajor_max", false, false},        {"partial_kelmans", true, false},
    {"tn_family", false, true},
};

Body body_for(const std::string& name, const SuiteConfig& cfg) {
  if (name == "jamison_ratio") return jamison_ratio_body;
  if (name == "jamison_bound") return jamison_bound_body;
  if (name == "kelmans_pair") return kelmans_pair_body;
  if (name == "kelmans_gain") return kelmans_gain_body;
  if (name == "partial_kelmans") {
    return [m = cfg.subset_max_n](const KTree& t, const InstanceId& id, Collector& out) {
      partial_kelmans_body(t, id, out, m);
    };
  }
  if (name == "leaf_neighbor") return leaf_neighbor_body;
  if (name == "cross_path") {
    return [cap = cfg.cap](const KTree& t, const InstanceId& id, Collector& out) {
      cross_path_body(t, id, out, cap);
    };
  }
  if (name == "char_tree_reduction") {
    return [cap = cfg.cap](const KTree& t, const InstanceId& id, Collector& out) {
      char_tree_reduction_body(t, id, out, cap);
    };
  }
  if (name == "adjacent_char_trees") return adjacent_char_trees_body;
  if (name == "nonmajor_max") return nonmajor_max_body;
  if (name == "end_clique") return end_clique_body;
  throw Error(ErrorCode::UnknownSuite, name);
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const SuiteDef& s : kSuites) out.emplace_back(s.name);
  return out;
}

Json run_suite(const SuiteConfig& input) {
  const auto start = std::chrono::steady_clock::now();
  const SuiteDef* def = nullptr;
  for (const SuiteDef& s : kSuites) {
    if (input.suite == s.name) def = &s;
  }
  if (def == nullptr) throw Error(ErrorCode::UnknownSuite, "unknown suite '" + input.suite + "'");

  SuiteConfig cfg = input;
  if (def->trees_only) cfg.k_min = cfg.k_max = 1;
  if (cfg.jobs < 1) throw Error(ErrorCode::BadConfig, "jobs must be positive");

  Collector total;
  if (def->family) {
    if (cfg.suite == "caterpillar") caterpillar_family(cfg, total);
    else tn_family(cfg, total);
  } else {
    const Body body = body_for(cfg.suite, cfg);
    const bool path_only = cfg.path_type_only;
    for (const CorpusSegment& seg : make_corpus(cfg)) {
      auto parts = run_chunked<Collector>(
          seg.count, cfg.jobs, 2048, [&](std::uint64_t begin, std::uint64_t end, Collector& out) {
            for (std::uint64_t i = begin; i < end; ++i) {
              const KTree tree = seg.make(i);
              if (path_only && !is_path_type(tree)) continue;
              out.instance();
              body(tree, seg.id(i), out);
            }
          });
      for (Collector& part : parts) total.merge(std::move(part));
    }
  }

  const auto elapsed = std::chrono::steady_clock::now() - start;
  Json report;
  report["schema"] = kReportSchema;
  report["suite"] = cfg.suite;
  report["config"] = config_to_json(cfg);
  report["instances"] = total.instances();
  report["violation_count"] = total.violation_count();
  report["violations"] = total.violations();
  report["witnesses"] = Json::array();
  report["tallies"] = total.tallies();
  if (!total.details().empty()) report["records"] = total.details();
  report["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return report;
}

bool report_clean(const Json& report) {
  return report.value("violation_count", std::uint64_t{0}) == 0 && report["violations"].empty();
}

}  // namespace ktree
