#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "leveltree/report.hpp"

using namespace leveltree;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(LT_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("chart of the worked example matches the golden file") {
  const LevelTree t = fixture::fig2();
  const std::string text = render_chart(t, default_special(t));
  CHECK(text == golden("fig2_chart.txt"));
  // The values printed in the worked example, one by one.
  CHECK(has(text, "zeta_a = eps(-1) * eps(-2)\n"));
  CHECK(has(text, "zeta_b = eps(-1)\n"));
  CHECK(has(text, "zeta_c = eps(-2) * u_c\n"));
  CHECK(has(text, "zeta_d = eps(-2) * u_d\n"));
  CHECK(has(text, "mu(-2): [a=1, c=eps(-1)^-1 * u_c, d=eps(-1)^-1 * u_d]"));
  CHECK(has(text, "mu(-1): [a=eps(-2), b=1]"));
}

TEST_CASE("blowup report of the worked example matches the golden file") {
  const LevelTree t = fixture::fig2();
  const std::string text = render_blowup(t, default_special(t));
  CHECK(text == golden("fig2_blowup.txt"));
  CHECK(has(text, "2  eps(-1)  [{a,b}]"));
  CHECK(has(text, "3  eps(-1) * eps(-2)  [{a,b} {a,c,d}]"));
}

TEST_CASE("index table of the first figure matches the golden file") {
  const LevelTree t = fixture::fig1();
  const std::string text = render_tree(t) + "\n" + render_indices(t, default_special(t));
  CHECK(text == golden("fig1_indices.txt"));
  CHECK(has(text, "-3     -2         v3       -3,-2,0"));
  CHECK(has(text, "-1     0          v1       -1,0"));
}

TEST_CASE("json reports are byte-identical across runs") {
  const LevelTree t = fixture::fig2();
  const SpecialChoice s = default_special(t);
  CHECK(chart_report(t, s).dump() == chart_report(t, s).dump());
  CHECK(blowup_report(t, s).dump() == blowup_report(t, s).dump());
  EnumSpec spec;
  spec.max_edges = 3;
  CHECK(run_suite("charts", spec).to_json().dump() == run_suite("charts", spec).to_json().dump());
}
