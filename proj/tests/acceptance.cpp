// Acceptance run: one PASS/FAIL line per criterion, with its time limit and
// tolerance. Exit status 0 iff the failing criteria are exactly those named
// by --expect-fail (default: none).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "leveltree/blowup.hpp"
#include "leveltree/io.hpp"
#include "leveltree/report.hpp"

using namespace leveltree;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<Outcome()> run;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LevelTree load(const char* name) {
  return load_tree_document(std::string(LT_TEST_DATA_DIR) + "/" + name).level_tree();
}

EnumSpec edges(int n) {
  EnumSpec spec;
  spec.max_edges = n;
  return spec;
}

std::string counts(const RunReport& r) {
  return std::to_string(r.instances) + " instances, " + std::to_string(r.cases) + " cases, " +
         std::to_string(r.failure_count) + " failures";
}

Outcome suite_outcome(const RunReport& r) {
  Outcome o{r.ok(), counts(r)};
  if (!r.ok() && !r.failures.empty())
    o.detail += "; first: [" + r.failures.front().operation + "] " + r.failures.front().instance;
  return o;
}

Outcome golden() {
  const LevelTree t = load("fig2.json");
  const std::string text = render_chart(t, default_special(t));
  const std::string want = read_file(std::string(LT_GOLDEN_DIR) + "/fig2_chart.txt");
  const char* pieces[] = {"zeta_a = eps(-1) * eps(-2)\n", "zeta_b = eps(-1)\n", "zeta_c = eps(-2) * u_c\n",
                          "zeta_d = eps(-2) * u_d\n",
                          "mu(-2): [a=1, c=eps(-1)^-1 * u_c, d=eps(-1)^-1 * u_d]", "mu(-1): [a=eps(-2), b=1]"};
  for (const char* p : pieces)
    if (text.find(p) == std::string::npos) return {false, std::string("missing '") + p + "'"};
  if (text != want) return {false, "differs from tests/golden/fig2_chart.txt"};
  return {true, "theta and 4 strata string-equal to the golden file"};
}

Outcome fig1_annotations() {
  const LevelTree t = load("fig1.json");
  const SpecialChoice s = default_special(t);
  auto seq = [](std::initializer_list<int> xs) {
    std::vector<Rational> v;
    for (int x : xs) v.push_back(Rational(x));
    return v;
  };
  std::string bad;
  const std::pair<int, int> succ[] = {{-1, 0}, {-2, -1}, {-3, -2}};
  for (const auto& [i, j] : succ)
    if (t.level_successor(Rational(i)) != Rational(j)) bad += " successor(" + std::to_string(i) + ")";
  if (ascent_sequence(t, s, Rational(-3)) != seq({-3, -2, 0})) bad += " ascent(-3)";
  if (ascent_sequence(t, s, Rational(-1)) != seq({-1, 0})) bad += " ascent(-1)";
  if (!bad.empty()) return {false, "mismatch:" + bad};
  return {true, "-1#=0, -2#=-1, -3#=-2; ascents [-3,-2,0] and [-1,0]"};
}

Outcome contraction_suite() {
  const RunReport r = run_suite("contraction", edges(5));
  Outcome o = suite_outcome(r);
  if (!r.ok() && r.failure_count == r.operations.at("minus").failures && r.operation_ok("minus_amended"))
    o.detail = counts(r) + "; all in the literal I- identity (" +
               std::to_string(r.operations.at("minus").failed_instances) +
               " instances), the amended I- identity holds";
  return o;
}

Outcome blowup_suite() {
  const LevelTree t = load("fig2.json");
  const Chart x(t, default_special(t));
  const char* want[] = {"1", "eps(-1)", "eps(-1) * eps(-2)"};
  for (int k = 1; k <= 3; ++k) {
    const YkResult y = yk_pullback(x, k);
    if (y.divisor.str() != want[k - 1] || !y.check.ok)
      return {false, "Y_" + std::to_string(k) + " = " + y.divisor.str()};
  }
  Outcome o = suite_outcome(run_suite("blowup", edges(5)));
  o.detail += "; worked example Y_1..Y_3 = 1, eps(-1), eps(-1)*eps(-2)";
  return o;
}

Outcome determinism() {
  std::string first, second;
  for (std::string* out : {&first, &second})
    for (const std::string& s : enumerated_suite_names())
      *out += run_suite(s, edges(s == "transitions" ? 4 : 5)).to_json().dump() + "\n";
  if (first != second) return {false, "JSON reports differ between runs"};
  return {true, std::to_string(first.size()) + " bytes identical across two full runs"};
}

std::set<int> parse_ids(const std::string& csv) {
  std::set<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      expected = parse_ids(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--expect-fail N[,N...]]\n");
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "golden chart of the worked example", 1.0, golden},
      {2, "first figure successors and ascents", 1.0, fig1_annotations},
      {3, "contraction suite, <= 5 edges", 120.0, contraction_suite},
      {4, "chart isomorphism suite, <= 5 edges", 300.0,
       [] { return suite_outcome(run_suite("charts", edges(5))); }},
      {5, "transition suite, <= 4 edges", 300.0,
       [] { return suite_outcome(run_suite("transitions", edges(4))); }},
      {6, "blowup suite, <= 5 edges", 120.0, blowup_suite},
      {7, "remark identities, <= 5 edges", 300.0,
       [] { return suite_outcome(run_suite("remark", edges(5))); }},
      {8, "determinism of JSON reports", 600.0, determinism},
  };

  std::set<int> failed;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      o.ok = false;
      o.detail += "; over the time limit";
    }
    if (!o.ok) failed.insert(c.id);
    std::printf("[%d] %s  %s  (%.3f s, limit %.0f s, tolerance: exact)  %s\n", c.id, o.ok ? "PASS" : "FAIL",
                c.title.c_str(), secs, c.limit_s, o.detail.c_str());
    std::fflush(stdout);
  }

  if (failed == expected) {
    std::printf("acceptance: %zu of %zu criteria pass; failures match the expected set\n",
                criteria.size() - failed.size(), criteria.size());
    return 0;
  }
  std::printf("acceptance: failing set differs from the expected set\n");
  return 1;
}
