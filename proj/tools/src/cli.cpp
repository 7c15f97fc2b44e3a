#include "ktree_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ktree/char_tree.hpp"
#include "ktree/error.hpp"
#include "ktree/kelmans.hpp"
#include "ktree/kt_format.hpp"
#include "ktree/oracle.hpp"
#include "ktree/search.hpp"
#include "ktree/suites.hpp"
#include "ktree/tree_poly.hpp"

namespace ktree::cli {
namespace {

struct Input {
  std::string file;
  std::string edges;
  int k = 0;
};

void add_input(CLI::App* cmd, Input& in) {
  auto* file = cmd->add_option("file", in.file, ".kt construction file");
  auto* edges = cmd->add_option("--edges", in.edges, "edge list file, one 'u v' per line");
  cmd->add_option("--k", in.k, "clique parameter for --edges");
  file->excludes(edges);
  edges->excludes(file);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::Parse, "cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

KTree load(const Input& in) {
  if (!in.edges.empty()) {
    if (in.k < 1) throw Error(ErrorCode::BadConfig, "--edges needs --k");
    return recognize_ktree(parse_edge_list(read_file(in.edges)), in.k);
  }
  if (in.file.empty()) throw Error(ErrorCode::BadConfig, "no input: give a .kt file or --edges");
  return parse_kt(read_file(in.file));
}

std::vector<Vertex> parse_ids(const std::string& text) {
  std::vector<Vertex> ids;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      ids.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad vertex id '" + item + "'");
    }
  }
  return ids;
}

Clique parse_clique(const std::string& text) {
  const std::vector<Vertex> ids = parse_ids(text);
  std::vector<Vertex> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v : sorted) {
    if (v < 1 || v > kMaxOrder) throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v));
  }
  return Clique::from_vertices(sorted);
}

void parse_range(const std::string& text, int& lo, int& hi) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "bad range '" + text + "'");
  }
}

void write_json(const Json& report, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::Parse, "cannot write " + path);
  f << report.dump(2) << '\n';
}

// validate

int cmd_validate(const Input& in, std::ostream& out) {
  KTree tree = [&] {
    try {
      return load(in);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotKTree || e.code() == ErrorCode::Disconnected ||
          e.code() == ErrorCode::AttachmentNotClique) {
        out << "not a k-tree: " << e.what() << '\n';
      }
      throw;
    }
  }();
  const int k = tree.k();
  const int n = tree.order();
  out << "valid " << k << "-tree of order " << n << '\n';
  out << "  edges          " << tree.graph().edge_count() << " (expected "
      << k * n - k * (k + 1) / 2 << ")\n";
  out << "  k-cliques      " << k_cliques(tree).size() << " (expected " << 1 + k * (n - k) << ")\n";
  out << "  (k+1)-cliques  " << kp1_cliques(tree).size() << " (expected " << n - k << ")\n";
  if (!tree.is_trivial()) out << "  k-leaves       " << set_label(k_leaf_mask(tree)) << '\n';
  out << "  path-type      " << (is_path_type(tree) ? "yes" : "no") << '\n';
  return 0;
}

// mean-order

struct MeanOpts {
  std::string clique;
  bool all = false;
  bool global = false;
  int cap = kDefaultOracleCap;
};

int cmd_mean_order(const Input& in, const MeanOpts& o, std::ostream& out) {
  const KTree tree = load(in);
  bool any = false;
  if (!o.clique.empty()) {
    const Clique c = parse_clique(o.clique);
    out << c.label() << "  " << local_mean_order_clique(tree, c).display() << '\n';
    any = true;
  }
  if (o.all) {
    for (const auto& [c, mean] : all_clique_means(tree)) {
      out << c.label() << "  " << mean.display() << "  " << to_string(clique_degree(tree, c).kind) << '\n';
    }
    any = true;
  }
  if (o.global || !any) {
    const Rational g = tree.k() == 1 ? global_mean_order_tree(tree.graph())
                                     : oracle_global_mean(tree, o.cap);
    out << "global  " << g.display() << '\n';
  }
  return 0;
}

// char-tree

int cmd_char_tree(const Input& in, const std::string& clique, const std::string& dot, std::ostream& out) {
  const KTree tree = load(in);
  const CharTree ct = characteristic_tree(tree, parse_clique(clique));
  out << "T'_C for C = " << ct.clique.label() << ", order " << ct.order() << '\n';
  for (const auto& [a, b] : ct.named_edges()) out << a << " -- " << b << '\n';
  if (!dot.empty()) {
    std::ofstream f(dot);
    if (!f) throw Error(ErrorCode::Parse, "cannot write " + dot);
    f << ct.to_dot();
  }
  return 0;
}

// kelmans

int cmd_kelmans(const Input& in, Vertex from, Vertex to, const std::string& move, std::ostream& out) {
  const KTree tree = load(in);
  if (tree.k() != 1) throw Error(ErrorCode::BadK, "kelmans works on trees (k = 1)");
  const Graph& g = tree.graph();
  const VertexMask moved = move.empty() ? kelmans_candidates(g, from, to) : to_mask(parse_ids(move));
  const Graph after = partial_kelmans(g, from, to, moved);
  const KtRelabeling emitted = relabel_for_kt(recognize_ktree(after, 1));

  out << emit_kt(emitted.tree);
  out << "# moved " << set_label(moved) << " from " << from << " to " << to << '\n';
  if (!emitted.identity) {
    out << "# relabeled for the file format; original -> new:";
    for (Vertex v = 1; v <= after.order(); ++v) out << ' ' << v << "->" << emitted.new_id[v - 1];
    out << '\n';
  }
  out << "# vertex  before  after  (original ids)\n";
  for (Vertex v = 1; v <= g.order(); ++v) {
    out << "# " << v << "  " << local_mean_order_vertex(g, v).display() << "  "
        << local_mean_order_vertex(after, v).display() << '\n';
  }
  return 0;
}

// oracle

int cmd_oracle(const Input& in, const std::string& clique, int cap, std::ostream& out) {
  const KTree tree = load(in);
  if (clique.empty()) {
    const IntPolynomial p = oracle_global_poly(tree, cap);
    out << "Phi = " << p.str() << '\n';
    out << "count  " << p.value_at_one() << '\n';
    out << "mean   " << p.mean_order().display() << '\n';
  } else {
    const Clique s = parse_clique(clique);
    const IntPolynomial p = oracle_local_poly(tree, s.mask(), cap);
    out << "phi_" << s.label() << " = " << p.str() << '\n';
    out << "count  " << p.value_at_one() << '\n';
    out << "mean   " << p.mean_order().display() << '\n';
  }
  return 0;
}

// verify / search

void print_summary(const Json& report, std::ostream& out) {
  out << report["suite"].get<std::string>() << ": " << report["instances"].get<std::uint64_t>()
      << " instances, " << report["violation_count"].get<std::uint64_t>() << " violations, "
      << report["runtime_ms"].get<std::int64_t>() << " ms\n";
  for (const auto& [key, count] : report["tallies"].items()) out << "  " << key << "  " << count << '\n';
  for (const Json& v : report["violations"]) out << "  VIOLATION " << v.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-tree local mean order toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Input in;

  auto* validate = app.add_subcommand("validate", "recognize a k-tree and print its invariants");
  add_input(validate, in);

  MeanOpts mean;
  auto* mean_order = app.add_subcommand("mean-order", "exact local and global mean orders");
  add_input(mean_order, in);
  mean_order->add_option("--clique", mean.clique, "comma-separated k-clique, e.g. 1,2");
  mean_order->add_flag("--all-cliques", mean.all, "every k-clique in lexicographic order");
  mean_order->add_flag("--global", mean.global, "global mean order");
  mean_order->add_option("--cap", mean.cap, "oracle order cap for k > 1 global means");

  std::string ct_clique;
  std::string ct_dot;
  auto* char_tree = app.add_subcommand("char-tree", "characteristic 1-tree at a k-clique");
  add_input(char_tree, in);
  char_tree->add_option("--clique", ct_clique, "comma-separated k-clique")->required();
  char_tree->add_option("--dot", ct_dot, "write Graphviz DOT here");

  Vertex k_from = 0;
  Vertex k_to = 0;
  std::string k_move;
  auto* kelmans_cmd = app.add_subcommand("kelmans", "Kelmans or partial Kelmans move on a tree");
  add_input(kelmans_cmd, in);
  kelmans_cmd->add_option("--from", k_from, "vertex v losing edges")->required();
  kelmans_cmd->add_option("--to", k_to, "vertex u gaining edges")->required();
  kelmans_cmd->add_option("--move", k_move, "subset of N(v) \\ N[u] to move (default: all)");

  std::string o_clique;
  int o_cap = kDefaultOracleCap;
  auto* oracle = app.add_subcommand("oracle", "brute-force sub-k-tree polynomial and mean");
  add_input(oracle, in);
  oracle->add_option("--clique", o_clique, "required vertex set (a sub-k-tree)");
  oracle->add_option("--cap", o_cap, "largest order enumerated");

  SuiteConfig suite;
  std::string v_k = "1";
  std::string v_mode = "exhaustive";
  std::string v_out;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite.suite, "suite name")->required();
  verify->add_option("--k", v_k, "k or k_min..k_max");
  verify->add_option("--min-n", suite.n_min, "smallest order");
  verify->add_option("--max-n", suite.n_max, "largest order");
  verify->add_option("--mode", v_mode, "exhaustive | random");
  verify->add_option("--trials", suite.trials, "random instances");
  verify->add_option("--seed", suite.seed, "base seed; instance i uses seed + i");
  verify->add_option("--cap", suite.cap, "oracle order cap");
  verify->add_option("--jobs", suite.jobs, "worker threads");
  verify->add_flag("--path-type-only", suite.path_type_only, "skip hosts that are not path-type");
  verify->add_option("--subset-max-n", suite.subset_max_n, "all move subsets up to this order");
  verify->add_option("--out", v_out, "write the JSON report here");
  verify->add_flag_callback("--list", [&] {
    for (const std::string& name : suite_names()) out << name << '\n';
    throw CLI::Success();
  }, "list suite names");

  SearchConfig search;
  std::string s_problem;
  std::string s_mode = "exhaustive";
  std::string s_out;
  bool no_dedupe = false;
  auto* search_cmd = app.add_subcommand("search", "witness search for maxima only at degree-2 cliques");
  search_cmd->add_option("--problem", s_problem, "degree2-max (alias 5.4)")->required();
  search_cmd->add_option("--k", search.k, "clique parameter, at least 2")->required();
  search_cmd->add_option("--max-n", search.max_n, "largest order")->required();
  search_cmd->add_option("--min-n", search.min_n, "smallest order (default k + 1)");
  search_cmd->add_option("--mode", s_mode, "exhaustive | random");
  search_cmd->add_option("--budget", search.budget, "random: trees; exhaustive: instance limit");
  search_cmd->add_option("--seed", search.seed, "base seed for random mode");
  search_cmd->add_option("--jobs", search.jobs, "worker threads");
  search_cmd->add_flag("--no-dedupe", no_dedupe, "skip isomorphism classes in the report");
  search_cmd->add_option("--out", s_out, "write the JSON report here");

  std::vector<const char*> argv{"ktree"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(in, out);
    if (*mean_order) return cmd_mean_order(in, mean, out);
    if (*char_tree) return cmd_char_tree(in, ct_clique, ct_dot, out);
    if (*kelmans_cmd) return cmd_kelmans(in, k_from, k_to, k_move, out);
    if (*oracle) return cmd_oracle(in, o_clique, o_cap, out);
    if (*verify) {
      parse_range(v_k, suite.k_min, suite.k_max);
      suite.mode = parse_corpus_mode(v_mode);
      const Json report = run_suite(suite);
      if (!v_out.empty()) write_json(report, v_out);
      print_summary(report, out);
      return report_clean(report) ? 0 : 1;
    }
    if (*search_cmd) {
      if (s_problem != "degree2-max" && s_problem != "5.4") {
        throw Error(ErrorCode::BadConfig, "unknown problem '" + s_problem + "'");
      }
      search.mode = parse_corpus_mode(s_mode);
      search.dedupe = !no_dedupe;
      if (search.mode == CorpusMode::random && search.budget == 0) search.budget = 1000;
      const Json report = search_degree2_max(search);
      if (!s_out.empty()) write_json(report, s_out);
      print_summary(report, out);
      out << "  witnesses  " << report["witnesses"].size() << '\n';
      return report_clean(report) ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace ktree::cli
