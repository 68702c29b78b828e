#pragma once

#include <map>
#include <string>
#include <vector>

#include "leveltree/check.hpp"
#include "leveltree/enumerate.hpp"
#include "leveltree/io.hpp"

namespace leveltree {

// m, hat edges, the index set and the per-level tables.
Json indices_report(const LevelTree& t, const SpecialChoice& s);

// t_(I) with its contracted edges and the index identities.
Json contraction_report(const LevelTree& t, const IndexSubset& I);

// theta, then for every subset I: the values of theta on the stratum, the
// coefficients mu_{e;i;I} (0 where they vanish) and the inverse map Psi.
Json chart_report(const LevelTree& t, const SpecialChoice& s);
std::string render_chart(const LevelTree& t, const SpecialChoice& s);

// Sections of gamma_bar, the (step, section) schedule, the divisor of the
// pullback of each Y_k, the psi2 data and the bundles.
Json blowup_report(const LevelTree& t, const SpecialChoice& s);
std::string render_blowup(const LevelTree& t, const SpecialChoice& s);

struct NamedCheck {
  std::string name;
  CheckResult result;
};

struct VerifyReport {
  std::string suite;
  std::vector<NamedCheck> checks;
  bool ok() const;
  Json to_json() const;
  std::string str() const;
};

// Suites on one tree: index, charts, transitions, blowup, remark or all.
// Throws kDomain for an unknown suite name.
VerifyReport verify_report(const LevelTree& t, const SpecialChoice& s, const std::string& suite);
const std::vector<std::string>& tree_suite_names();

struct SuiteFailure {
  std::string instance;
  std::string operation;
  std::string detail;
};

struct OperationTally {
  long cases = 0;
  long failures = 0;          // failing cases
  long failed_instances = 0;  // instances with at least one failing case
};

// Aggregate of one suite over every enumerated instance. The failure list
// keeps the first failing instance per operation check, up to a cap;
// failure_count counts every failing case.
struct RunReport {
  std::string suite;
  EnumSpec spec;
  long instances = 0;
  long cases = 0;
  std::map<std::string, OperationTally> operations;
  std::vector<SuiteFailure> failures;
  long failure_count = 0;
  long failed_instances = 0;

  bool ok() const { return failure_count == 0; }
  bool operation_ok(const std::string& op) const;
  Json to_json() const;  // no timings, so reruns are byte-identical
  std::string str() const;
};

inline constexpr std::size_t kMaxListedFailures = 20;

// contraction, charts, transitions, blowup or remark.
RunReport run_suite(const std::string& suite, const EnumSpec& spec);
const std::vector<std::string>& enumerated_suite_names();

// Re-levelings of t equivalent to it: levels doubled, a nonlinear monotone
// reshaping above m, fractional levels below m, and the canonical form.
std::vector<LevelTree> equivalent_relevelings(const LevelTree& t);

Json to_json(const EnumSpec& spec);
EnumSpec enum_spec_from_json(const Json& j);

}  // namespace leveltree
