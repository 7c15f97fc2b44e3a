#include "ktree/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "ktree/canonical.hpp"
#include "ktree/char_tree.hpp"
#include "ktree/enumerate.hpp"
#include "ktree/error.hpp"
#include "ktree/generators.hpp"
#include "ktree/oracle.hpp"
#include "ktree/parallel.hpp"

namespace ktree {
namespace {

struct NearMiss {
  Rational gap;
  double approx = 0;
  InstanceId id;
  Json record;
};

bool near_miss_less(const NearMiss& a, const NearMiss& b) {
  if (a.gap != b.gap) return a.gap < b.gap;
  if (a.id.n != b.id.n) return a.id.n < b.id.n;
  return a.id.index < b.id.index;
}

struct Partial {
  Collector collector;
  std::vector<Json> witnesses;
  std::vector<NearMiss> near;
  std::vector<std::pair<std::string, Json>> records;  // first occurrence per code
};

struct Analysis {
  std::vector<std::pair<Clique, CliqueCounts>> table;
  std::vector<CliqueClass> classes;
  std::vector<std::size_t> argmax;
  bool witness = false;
  bool has_end = false;
  std::size_t best_end = SIZE_MAX;
  std::size_t best_deg2 = SIZE_MAX;
};

Analysis analyse(const KTree& tree) {
  Analysis a;
  for (const Clique& c : k_cliques(tree)) {
    a.table.emplace_back(c, clique_counts(tree, c));
    a.classes.push_back(clique_degree(tree, c));
  }
  std::size_t best = 0;
  for (std::size_t i = 0; i < a.table.size(); ++i) {
    const CliqueCounts& m = a.table[i].second;
    if (compare_means(m, a.table[best].second) > 0) best = i;
    const CliqueKind kind = a.classes[i].kind;
    if (kind == CliqueKind::end &&
        (a.best_end == SIZE_MAX || compare_means(m, a.table[a.best_end].second) > 0)) {
      a.best_end = i;
    }
    if (kind == CliqueKind::degree2 &&
        (a.best_deg2 == SIZE_MAX || compare_means(m, a.table[a.best_deg2].second) > 0)) {
      a.best_deg2 = i;
    }
  }
  a.witness = true;
  for (std::size_t i = 0; i < a.table.size(); ++i) {
    if (compare_means(a.table[i].second, a.table[best].second) != 0) continue;
    a.argmax.push_back(i);
    if (a.classes[i].kind != CliqueKind::degree2) a.witness = false;
    if (a.classes[i].kind == CliqueKind::end) a.has_end = true;
  }
  return a;
}

Json record_json(const KTree& tree, const InstanceId& id, const Analysis& a) {
  Json means = Json::array();
  for (std::size_t i = 0; i < a.table.size(); ++i) {
    const Rational m = a.table[i].second.mean(tree.k());
    means.push_back({{"clique", a.table[i].first.label()},
                     {"degree", a.classes[i].degree},
                     {"class", to_string(a.classes[i].kind)},
                     {"mean", m.str()},
                     {"decimal", m.decimal()}});
  }
  Json argmax = Json::array();
  for (std::size_t i : a.argmax) {
    argmax.push_back({{"clique", a.table[i].first.label()}, {"class", to_string(a.classes[i].kind)}});
  }
  return {{"instance", to_json(id)},
          {"build", construction_json(tree)},
          {"means", means},
          {"argmax", argmax},
          {"verdict", {{"witness", a.witness}, {"argmax_has_end", a.has_end}}}};
}

std::string kind_key(const Analysis& a) {
  if (a.witness) return "argmax_degree2_only";
  bool has_deg2 = false;
  for (std::size_t i : a.argmax) has_deg2 = has_deg2 || a.classes[i].kind == CliqueKind::degree2;
  if (a.has_end && has_deg2) return "argmax_end_and_degree2";
  if (a.has_end) return "argmax_end_only";
  return "argmax_other";
}

/// Oracle recomputation of a witness: same argmax set, all of degree 2.
bool revalidate(const KTree& tree, const Analysis& a, int cap) {
  const CliqueMeans oracle = oracle_all_clique_means(tree, cap);
  std::vector<Clique> fast;
  for (std::size_t i : a.argmax) fast.push_back(a.table[i].first);
  std::sort(fast.begin(), fast.end());
  if (oracle.argmax != fast) return false;
  return std::all_of(oracle.argmax.begin(), oracle.argmax.end(), [&](const Clique& c) {
    return clique_degree(tree, c).kind == CliqueKind::degree2;
  });
}

}  // namespace

Json construction_json(const KTree& tree) {
  const Construction& c = tree.construction();
  Json adds = Json::array();
  for (const Attachment& a : c.adds) adds.push_back({a.vertex, a.clique.vertices()});
  return {{"base", c.base.vertices()}, {"adds", adds}};
}

Json search_config_to_json(const SearchConfig& cfg) {
  return {{"problem", "degree2-max"},
          {"k", cfg.k},
          {"min_n", cfg.min_n == 0 ? cfg.k + 1 : cfg.min_n},
          {"max_n", cfg.max_n},
          {"mode", to_string(cfg.mode)},
          {"budget", cfg.budget},
          {"seed", cfg.seed},
          {"dedupe", cfg.dedupe},
          {"cap", cfg.cap}};
}

Json search_degree2_max(const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (cfg.k < 2) {
    throw Error(ErrorCode::BadK,
                "k must be at least 2; for trees run the caterpillar suite instead");
  }
  const int min_n = cfg.min_n == 0 ? cfg.k + 1 : cfg.min_n;
  if (min_n < cfg.k || cfg.max_n < min_n) throw Error(ErrorCode::BadConfig, "bad n range");
  if (cfg.jobs < 1) throw Error(ErrorCode::BadConfig, "jobs must be positive");
  if (cfg.mode == CorpusMode::random && cfg.budget < 1) {
    throw Error(ErrorCode::BadConfig, "random mode needs a positive budget");
  }

  struct Segment {
    int n;
    std::uint64_t count;
  };
  std::vector<Segment> segments;
  bool complete = true;
  if (cfg.mode == CorpusMode::exhaustive) {
    std::uint64_t left = cfg.budget == 0 ? UINT64_MAX : cfg.budget;
    for (int n = min_n; n <= cfg.max_n; ++n) {
      const std::uint64_t count = checked_labeled_count(cfg.k, n);
      const std::uint64_t take = std::min(count, left);
      if (take < count) complete = false;
      if (take > 0) segments.push_back({n, take});
      left -= take;
    }
  } else {
    if (cfg.max_n > kMaxOrder) throw Error(ErrorCode::TooLarge, "n above " + std::to_string(kMaxOrder));
    segments.push_back({cfg.max_n, cfg.budget});
    complete = false;
  }

  Partial total;
  std::map<std::string, bool> seen_codes;
  Json records = Json::array();
  for (const Segment& seg : segments) {
    auto parts = run_chunked<Partial>(
        seg.count, cfg.jobs, 2048, [&](std::uint64_t begin, std::uint64_t end, Partial& out) {
          std::map<std::string, bool> local_codes;
          for (std::uint64_t i = begin; i < end; ++i) {
            const KTree tree = cfg.mode == CorpusMode::exhaustive
                                   ? labeled_ktree_at(cfg.k, seg.n, i)
                                   : random_ktree(cfg.k, seg.n, cfg.seed + i);
            const InstanceId id{cfg.k, seg.n, i};
            const Analysis a = analyse(tree);
            out.collector.instance();
            const std::string prefix = "n" + std::to_string(seg.n) + ".";
            out.collector.tally(prefix + kind_key(a));
            out.collector.tally("all." + kind_key(a));

            if (a.witness) {
              Json w = record_json(tree, id, a);
              const bool ok = revalidate(tree, a, cfg.cap);
              w["oracle_validated"] = ok;
              if (!ok) out.collector.violation(id, "witness_revalidation", "oracle disagrees");
              out.witnesses.push_back(std::move(w));
            } else if (a.has_end && a.best_deg2 != SIZE_MAX) {
              const CliqueCounts& e = a.table[a.best_end].second;
              const CliqueCounts& d = a.table[a.best_deg2].second;
              const double approx = static_cast<double>(e.derivative) / static_cast<double>(e.value) -
                                    static_cast<double>(d.derivative) / static_cast<double>(d.value);
              const bool full = out.near.size() >= cfg.near_miss_count;
              if (cfg.near_miss_count > 0 && (!full || approx <= out.near.back().approx + 1e-6)) {
                NearMiss m{e.mean(cfg.k) - d.mean(cfg.k), approx, id, Json()};
                if (!full || !near_miss_less(out.near.back(), m)) {
                  m.record = record_json(tree, id, a);
                  out.near.push_back(std::move(m));
                  std::sort(out.near.begin(), out.near.end(), near_miss_less);
                  if (out.near.size() > cfg.near_miss_count) out.near.pop_back();
                }
              }
            }

            if (cfg.dedupe) {
              std::string code = canonical_code(tree);
              if (local_codes.emplace(code, true).second) {
                out.records.emplace_back(std::move(code), record_json(tree, id, a));
              }
            }
          }
        });
    for (Partial& part : parts) {
      total.collector.merge(std::move(part.collector));
      for (Json& w : part.witnesses) total.witnesses.push_back(std::move(w));
      for (NearMiss& m : part.near) total.near.push_back(std::move(m));
      std::sort(total.near.begin(), total.near.end(), near_miss_less);
      if (total.near.size() > cfg.near_miss_count) total.near.resize(cfg.near_miss_count);
      for (auto& [code, record] : part.records) {
        if (seen_codes.emplace(code, true).second) {
          record["code"] = code;
          records.push_back(std::move(record));
          total.collector.tally("n" + std::to_string(seg.n) + ".classes");
        }
      }
    }
  }

  Json near = Json::array();
  for (NearMiss& m : total.near) {
    Json entry = std::move(m.record);
    entry["gap"] = m.gap.str();
    entry["gap_decimal"] = m.gap.decimal();
    near.push_back(std::move(entry));
  }

  const auto elapsed = std::chrono::steady_clock::now() - start;
  Json report;
  report["schema"] = kReportSchema;
  report["suite"] = "search_degree2_max";
  report["config"] = search_config_to_json(cfg);
  report["instances"] = total.collector.instances();
  report["complete"] = complete;
  report["violation_count"] = total.collector.violation_count();
  report["violations"] = total.collector.violations();
  report["witnesses"] = total.witnesses;
  report["tallies"] = total.collector.tallies();
  report["near_misses"] = near;
  if (cfg.dedupe) report["records"] = records;
  report["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return report;
}

}  // namespace ktree
