// leveltree: command-line front end over the C interface.
// Exit codes: 0 success, 1 verification failure, 2 usage, parse or input error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "leveltree/leveltree.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct TreeHandle {
  lt_tree* p = nullptr;
  ~TreeHandle() { lt_tree_free(p); }
};

struct Output {
  char* p = nullptr;
  ~Output() { lt_string_free(p); }
};

int report_error(lt_status s) {
  std::cerr << "leveltree: " << lt_status_name(s) << ": " << lt_last_error() << "\n";
  return kExitUsage;
}

int emit(lt_status s, const Output& out) {
  if (s != LT_OK) return report_error(s);
  std::fputs(out.p, stdout);
  return kExitOk;
}

struct EnumArgs {
  int max_edges = 5;
  int max_weight = 2;
  int max_levels = 5;
  bool allow_zero_weight = false;
  bool unstable = false;

  std::string json() const {
    return "{\"max_edges\": " + std::to_string(max_edges) +
           ", \"max_weight\": " + std::to_string(max_weight) +
           ", \"max_levels\": " + std::to_string(max_levels) +
           ", \"require_positive_weight\": " + (allow_zero_weight ? "false" : "true") +
           ", \"stable\": " + (unstable ? "false" : "true") + "}";
  }
};

void add_enum_options(CLI::App* cmd, EnumArgs& a) {
  cmd->add_option("--max-edges", a.max_edges, "Largest edge count")
      ->envname("LEVELTREE_MAX_EDGES")
      ->capture_default_str();
  cmd->add_option("--max-weight", a.max_weight, "Largest vertex weight")->capture_default_str();
  cmd->add_option("--max-levels", a.max_levels, "Most occupied levels")->capture_default_str();
  cmd->add_flag("--allow-zero-weight", a.allow_zero_weight, "Include trees of total weight 0");
  cmd->add_flag("--unstable", a.unstable, "Allow non-root weight-0 vertices with one child");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted level trees: index sets, contractions, charts and blowup data"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lt_version()));

  std::string file, special, levels, edges, suite = "all";
  bool json = false, dot = false, count_only = false;
  EnumArgs en;

  auto* validate = app.add_subcommand("validate", "Parse a tree and print it back");
  validate->alias("show");
  validate->add_option("file", file, "Tree document (JSON)")->required();
  validate->add_flag("--json", json, "Print the normalized document");
  validate->add_flag("--dot", dot, "Print Graphviz with one rail per level");

  auto* indices = app.add_subcommand("indices", "m, hat edges, the index set and cross-sections");
  indices->add_option("file", file)->required();
  indices->add_option("--special", special, "Special vertices, e.g. -1:b,-2:a");
  indices->add_flag("--json", json);

  auto* contract = app.add_subcommand("contract", "The tree t_(I)");
  contract->add_option("file", file)->required();
  contract->add_option("--levels", levels, "Levels of I, e.g. -1,-2")->allow_extra_args(false);
  contract->add_option("--edges", edges, "Edges of I, e.g. e1,e2");
  contract->add_flag("--json", json);
  contract->add_flag("--dot", dot);

  auto* chart = app.add_subcommand("chart", "theta and the mu tables of every stratum");
  chart->add_option("file", file)->required();
  chart->add_option("--special", special);
  chart->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "Run identity checks on one tree");
  verify->add_option("file", file)->required();
  verify->add_option("--suite", suite, "index, charts, transitions, blowup, remark or all")
      ->capture_default_str();
  verify->add_option("--special", special);
  verify->add_flag("--json", json);

  auto* blowup = app.add_subcommand("blowup-report", "Sections, schedule, Y_k divisors and psi2 data");
  blowup->add_option("file", file)->required();
  blowup->add_option("--special", special);
  blowup->add_flag("--json", json);

  auto* enumerate = app.add_subcommand("enumerate", "Emit level trees as JSON lines");
  add_enum_options(enumerate, en);
  enumerate->add_flag("--count-only", count_only, "Print totals only");

  auto* check = app.add_subcommand("check", "Run a suite over every enumerated instance");
  check->add_option("suite", suite, "contraction, charts, transitions, blowup or remark")->required();
  add_enum_options(check, en);
  check->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const lt_format fmt = json ? LT_FORMAT_JSON : LT_FORMAT_TEXT;
  if (json && dot) {
    std::cerr << "leveltree: --json and --dot are exclusive\n";
    return kExitUsage;
  }

  if (*enumerate) {
    Output out;
    return emit(lt_enumerate(en.json().c_str(), count_only ? 1 : 0, &out.p), out);
  }
  if (*check) {
    Output out;
    int passed = 0;
    const lt_status s = lt_run_suite(suite.c_str(), en.json().c_str(), fmt, &passed, &out.p);
    if (s != LT_OK) return report_error(s);
    std::fputs(out.p, stdout);
    return passed ? kExitOk : kExitFailed;
  }

  TreeHandle tree;
  if (lt_status s = lt_tree_load(file.c_str(), &tree.p); s != LT_OK) return report_error(s);
  const char* sp = special.empty() ? nullptr : special.c_str();
  Output out;

  if (*validate) {
    if (dot) return emit(lt_tree_to_dot(tree.p, &out.p), out);
    if (json) return emit(lt_tree_to_json(tree.p, &out.p), out);
    if (!lt_tree_has_levels(tree.p)) {
      std::cout << "valid weighted tree (no levels)\n";
      return kExitOk;
    }
    return emit(lt_indices_report(tree.p, sp, LT_FORMAT_TEXT, &out.p), out);
  }
  if (*indices) return emit(lt_indices_report(tree.p, sp, fmt, &out.p), out);
  if (*contract)
    return emit(lt_contract(tree.p, levels.c_str(), edges.c_str(), dot ? LT_FORMAT_DOT : fmt, &out.p), out);
  if (*chart) return emit(lt_chart_report(tree.p, sp, fmt, &out.p), out);
  if (*blowup) return emit(lt_blowup_report(tree.p, sp, fmt, &out.p), out);
  if (*verify) {
    int passed = 0;
    const lt_status s = lt_verify(tree.p, suite.c_str(), sp, fmt, &passed, &out.p);
    if (s != LT_OK) return report_error(s);
    std::fputs(out.p, stdout);
    return passed ? kExitOk : kExitFailed;
  }
  return kExitUsage;
}
