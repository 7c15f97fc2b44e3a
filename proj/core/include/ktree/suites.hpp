#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ktree/kelmans.hpp"
#include "ktree/ktree.hpp"
#include "ktree/oracle.hpp"

namespace ktree {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "ktree-report/1";

enum class CorpusMode { exhaustive, random };

std::string to_string(CorpusMode mode);
/// Error: BadConfig.
CorpusMode parse_corpus_mode(const std::string& text);

struct SuiteConfig {
  std::string suite;
  int k_min = 1;
  int k_max = 1;
  int n_min = 1;
  int n_max = 6;
  CorpusMode mode = CorpusMode::exhaustive;
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  int cap = kDefaultOracleCap;
  int jobs = 1;
  /// Keep only path-type hosts.
  bool path_type_only = false;
  /// Partial moves try every subset of N(v) \ N[u] up to this order.
  int subset_max_n = 7;
};

Json config_to_json(const SuiteConfig& cfg);

struct InstanceId {
  int k = 0;
  int n = 0;
  std::uint64_t index = 0;
};

Json to_json(const InstanceId& id);

/// Per-chunk accumulator; merged in chunk order.
class Collector {
 public:
  static constexpr std::size_t kMaxStoredViolations = 200;

  void instance() { ++instances_; }
  void tally(const std::string& key, std::uint64_t by = 1) { tallies_[key] += by; }
  void violation(const InstanceId& id, const std::string& check, const std::string& detail,
                 Json extra = Json::object());
  /// Counts a theorem check; records a violation unless report.ok().
  void report(const InstanceId& id, const TheoremReport& report);
  void detail(Json record) { details_.push_back(std::move(record)); }
  void merge(Collector&& other);

  std::uint64_t instances() const { return instances_; }
  std::uint64_t violation_count() const { return violation_count_; }
  const std::map<std::string, std::uint64_t>& tallies() const { return tallies_; }
  const std::vector<Json>& violations() const { return violations_; }
  const std::vector<Json>& details() const { return details_; }

 private:
  std::uint64_t instances_ = 0;
  std::uint64_t violation_count_ = 0;
  std::map<std::string, std::uint64_t> tallies_;
  std::vector<Json> violations_;
  std::vector<Json> details_;
};

/// Names accepted by run_suite, sorted.
std::vector<std::string> suite_names();

/// Runs one suite over its corpus. Errors: UnknownSuite, BadConfig, TooLarge.
Json run_suite(const SuiteConfig& cfg);

/// True when the report lists no violations.
bool report_clean(const Json& report);

/// A corpus is an ordered list of segments; each hands out instances by index.
struct CorpusSegment {
  int k = 0;
  int n = 0;
  std::uint64_t count = 0;
  std::function<KTree(std::uint64_t)> make;
  /// Instance id of the i-th member.
  std::function<InstanceId(std::uint64_t)> id;
};

/// Exhaustive labeled builds for every (k, n) in range, or `trials` random
/// builds with per-instance seed seed + i. Error: TooLarge, BadConfig.
std::vector<CorpusSegment> make_corpus(const SuiteConfig& cfg);

/// mu(T;C1) >= mu(T;C2) for an end clique C1 and an adjacent clique C2,
/// equal iff C2 is an end clique, or T is path-type and C1 contains a
/// k-leaf. Errors: NotEndClique, NotAdjacentCliques.
TheoremReport check_end_clique(const KTree& tree, const Clique& c1, const Clique& c2);

}  // namespace ktree
