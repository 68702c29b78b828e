#include "leveltree/report.hpp"

#include <algorithm>
#include <sstream>

#include "leveltree/blowup.hpp"
#include "leveltree/charts.hpp"
#include "leveltree/contraction.hpp"
#include "leveltree/errors.hpp"
#include "leveltree/transitions.hpp"

namespace leveltree {
namespace {

std::vector<std::string> edge_ids(const RootedTree& tr, const std::vector<Edge>& es) {
  std::vector<std::string> out;
  for (Edge e : es) out.push_back(tr.name(e));
  return out;
}

std::string part_of(const LevelTree& t, Edge e) {
  if (t.in_m(e)) return "Im";
  if (t.in_minus(e)) return "I-";
  return "E";
}

// Value of a monomial on a stratum: "0" where it vanishes.
std::string on_stratum(const Monomial& m, const Stratum& st) {
  try {
    return evaluate(m, st) == Value::kZero ? "0" : m.str();
  } catch (const Error&) {
    return "undefined";
  }
}

Json sections_json(const std::vector<TraverseSection>& ss) {
  Json j = Json::array();
  for (const auto& s : ss) j.push_back(to_string(s));
  return j;
}

// Runs body, turning a thrown Error into a failed case.
template <class F>
CheckResult guarded(F&& body) {
  CheckResult r;
  try {
    r = body();
  } catch (const Error& e) {
    r.fail(e.what());
  }
  return r;
}

void add(std::vector<NamedCheck>& out, const std::string& name, const CheckResult& r) {
  for (auto& c : out)
    if (c.name == name) {
      c.result.merge(r);
      return;
    }
  out.push_back({name, r});
}

void index_checks(const LevelTree& t, std::vector<NamedCheck>& out) {
  const std::vector<LevelTree> relevel = equivalent_relevelings(t);
  for (const IndexSubset& I : t.all_index_subsets()) {
    const std::string at = "I = " + to_string(I) + ": ";
    IdentityReport rep;
    try {
      rep = verify_index_identities(t, I);
    } catch (const Error& e) {
      CheckResult r;
      r.fail(at + e.what());
      add(out, "valid_tree", r);
      continue;
    }
    const std::pair<const char*, bool> parts[] = {
        {"valid_tree", rep.valid_tree}, {"m", rep.m},          {"plus", rep.plus},
        {"im", rep.im},                 {"minus", rep.minus},  {"minus_amended", rep.minus_amended},
        {"weight", rep.weight}};
    for (const auto& [name, ok] : parts) {
      CheckResult r;
      if (!r.expect(ok)) r.note(at + rep.detail);
      add(out, name, r);
    }
    for (std::size_t k = 0; k < relevel.size(); ++k) {
      add(out, "equivalence_compat", guarded([&] {
            CheckResult r;
            if (!r.expect(verify_equivalence_compat(t, relevel[k], I)))
              r.note(at + "re-leveling " + std::to_string(k) + " breaks compatibility");
            return r;
          }));
    }
  }
}

void chart_checks(const LevelTree& t, const SpecialChoice& s, std::vector<NamedCheck>& out) {
  for (const auto& tags : {std::vector<std::string>{}, default_tags()}) {
    const Chart x(t, s, tags);
    for (const IndexSubset& I : t.all_index_subsets()) {
      const std::string at = "I = " + to_string(I) + ", |J| = " + std::to_string(tags.size()) + ": ";
      auto located = [&](CheckResult r) {
        if (!r.ok) r.detail = at + r.detail;
        return r;
      };
      add(out, "mu_vanishing", located(guarded([&] { return check_mu_vanishing(x, I); })));
      add(out, "round_trip", located(guarded([&] { return verify_round_trip(x, I); })));
      add(out, "stratum_image", located(guarded([&] { return check_stratum_image(x, I); })));
    }
  }
}

void transition_checks(const LevelTree& t, const SpecialChoice& s, std::vector<NamedCheck>& out) {
  const std::vector<SpecialChoice> choices = all_special_choices(t);
  for (const auto& a : choices)
    for (const auto& b : choices)
      add(out, "special_vertex_transition",
          guarded([&] { return verify_special_vertex_transition(t, a, b); }));
  for (const auto& a : choices)
    add(out, "parameter_transition", guarded([&] { return verify_parameter_transition(t, a); }));
  for (const IndexSubset& I : t.all_index_subsets())
    add(out, "stratum_transition", guarded([&] { return verify_stratum_transition(t, s, I); }));
}

void remark_checks(const LevelTree& t, std::vector<NamedCheck>& out) {
  for (const auto& s : all_special_choices(t))
    add(out, "remark_identities",
        guarded([&] { return remark_identities(Chart(t, s, default_tags())); }));
}

void blowup_group(const LevelTree& t, std::vector<NamedCheck>& out) {
  try {
    for (auto& [name, r] : blowup_checks(t)) add(out, name, r);
  } catch (const Error& e) {
    CheckResult r;
    r.fail(e.what());
    add(out, "blowup", r);
  }
}

std::vector<NamedCheck> tree_checks(const LevelTree& t, const SpecialChoice& s,
                                    const std::string& suite) {
  std::vector<NamedCheck> out;
  const bool all = suite == "all";
  if (all || suite == "index" || suite == "contraction") index_checks(t, out);
  if (all || suite == "charts") chart_checks(t, s, out);
  if (all || suite == "transitions") transition_checks(t, s, out);
  if (all || suite == "blowup") blowup_group(t, out);
  if (all || suite == "remark") remark_checks(t, out);
  return out;
}

bool known(const std::vector<std::string>& names, const std::string& s) {
  for (const auto& n : names)
    if (n == s) return true;
  return false;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

Json indices_report(const LevelTree& t, const SpecialChoice& s) {
  const RootedTree& tr = t.tree();
  Json j;
  j["tree"] = to_json(t);
  if (!t.has_level_data()) {
    j["m"] = nullptr;
    j["note"] = "no vertex of positive weight";
    return j;
  }
  const IndexPartition p = t.index_partition();
  j["m"] = to_string(t.m());
  j["I+"] = Json::array();
  for (const auto& l : p.plus) j["I+"].push_back(to_string(l));
  j["Im"] = p.m;
  j["I-"] = p.minus;
  j["edges"] = Json::object();
  for (Edge e : tr.edges()) {
    Json row;
    row["upper"] = tr.name(tr.parent(e));
    row["lower"] = tr.name(e);
    row["hat"] = t.is_hat(e);
    row["level"] = t.is_hat(e) ? Json(to_string(t.edge_level(e))) : Json(nullptr);
    row["part"] = part_of(t, e);
    j["edges"][tr.name(e)] = row;
  }
  j["levels"] = Json::array();
  for (int k = 1; k <= t.m_index(); ++k) {
    const Rational& i = t.occupied()[k];
    Json row;
    row["level"] = to_string(i);
    row["successor"] = to_string(t.level_successor(i));
    row["special"] = tr.name(s.vertex[k]);
    row["ascent"] = Json::array();
    for (const auto& a : ascent_sequence(t, s, i)) row["ascent"].push_back(to_string(a));
    row["cross_section"] = edge_ids(tr, t.cross_section_at(k));
    j["levels"].push_back(row);
  }
  return j;
}

Json contraction_report(const LevelTree& t, const IndexSubset& I) {
  const ContractionResult c = contract(t, I);
  const IdentityReport rep = verify_index_identities(t, I);
  Json j;
  j["I"] = to_json(I);
  j["contracted"] = Json(std::vector<std::string>(c.contracted.begin(), c.contracted.end()));
  j["tree"] = to_json(c.tree);
  j["projection"] = Json::object();
  for (Vertex v = 0; v < t.tree().size(); ++v) j["projection"][t.tree().name(v)] = c.projection[v];
  Json id;
  id["valid_tree"] = rep.valid_tree;
  id["m"] = rep.m;
  id["plus"] = rep.plus;
  id["im"] = rep.im;
  id["minus"] = rep.minus;
  id["minus_amended"] = rep.minus_amended;
  id["weight"] = rep.weight;
  id["detail"] = rep.detail;
  j["identities"] = id;
  return j;
}

Json chart_report(const LevelTree& t, const SpecialChoice& s) {
  if (!t.has_level_data()) fail(ErrorKind::kDomain, "charts need a vertex of positive weight");
  const RootedTree& tr = t.tree();
  const Chart x(t, s, default_tags());
  Json j;
  j["special"] = Json::object();
  for (int k = 1; k <= t.m_index(); ++k) j["special"][to_string(t.occupied()[k])] = tr.name(s.vertex[k]);
  j["coordinates"] = Json::array();
  for (const Symbol& c : x.coords()) j["coordinates"].push_back(c.str());
  j["theta"] = to_json(x.theta());
  j["strata"] = Json::array();
  for (const IndexSubset& I : t.all_index_subsets()) {
    const Stratum st = x.stratum(t.mask(I));
    Json row;
    row["I"] = to_json(I);
    row["zeta"] = Json::object();
    for (Edge e : tr.edges()) row["zeta"][zeta_symbol(tr.name(e)).str()] = on_stratum(x.theta_zeta(e), st);
    row["mu"] = Json::array();
    for (const auto& [key, m] : build_mu(x, I)) {
      Json mu;
      mu["level"] = to_string(key.first);
      mu["edge"] = key.second;
      mu["value"] = on_stratum(m, st);
      row["mu"].push_back(mu);
    }
    try {
      row["psi"] = to_json(build_inverse(x, I));
    } catch (const Error& e) {
      row["psi"] = std::string("ill-defined: ") + e.what();
    }
    j["strata"].push_back(row);
  }
  return j;
}

std::string render_chart(const LevelTree& t, const SpecialChoice& s) {
  const Json j = chart_report(t, s);
  std::ostringstream os;
  os << "theta:\n";
  for (const auto& [k, v] : j["theta"].items()) os << "  " << k << " = " << v.get<std::string>() << "\n";
  for (const Json& row : j["strata"]) {
    std::string levels, edges;
    for (const auto& l : row["I"]["levels"]) levels += (levels.empty() ? "" : ",") + l.get<std::string>();
    for (const auto& e : row["I"]["edges"]) edges += (edges.empty() ? "" : ",") + e.get<std::string>();
    os << "\nI = {" << levels << (edges.empty() || levels.empty() ? "" : ";") << edges << "}\n";
    os << "  zeta:";
    for (const auto& [k, v] : row["zeta"].items()) os << " " << k << "=" << v.get<std::string>();
    os << "\n";
    // Levels descend as in the index set, edges ascend within a level.
    std::map<Rational, std::vector<std::string>, std::greater<>> by_level;
    for (const Json& mu : row["mu"])
      by_level[parse_rational(mu["level"].get<std::string>())].push_back(
          mu["edge"].get<std::string>() + "=" + mu["value"].get<std::string>());
    for (const auto& [lv, vals] : by_level) {
      os << "  mu(" << to_string(lv) << "): [";
      for (std::size_t i = 0; i < vals.size(); ++i) os << (i ? ", " : "") << vals[i];
      os << "]\n";
    }
    if (row["psi"].is_object()) {
      os << "  psi:";
      for (const auto& [k, v] : row["psi"].items()) os << " " << k << "=" << v.get<std::string>();
      os << "\n";
    } else {
      os << "  psi: " << row["psi"].get<std::string>() << "\n";
    }
  }
  return os.str();
}

Json blowup_report(const LevelTree& t, const SpecialChoice& s) {
  if (!t.has_level_data()) fail(ErrorKind::kDomain, "blowup data needs a vertex of positive weight");
  const BlowupSchedule sched = blowup_schedule(t.base());
  const Chart x(t, s, default_tags());
  Json j;
  j["gamma_bar"] = to_json(WeightedTree(sched.gamma_bar, std::vector<int>(sched.gamma_bar.size(), 0)))["parents"];
  j["sections"] = sections_json(traverse_sections(sched.gamma_bar));
  j["schedule"] = Json::array();
  for (const auto& [k, sec] : sched.sections) j["schedule"].push_back({{"step", k}, {"section", to_string(sec)}});
  j["yk"] = Json::array();
  for (int k = 1; k <= std::max(1, t.tree().edge_count()); ++k) {
    const YkResult y = yk_pullback(x, k);
    Json row;
    row["k"] = k;
    row["components"] = sections_json(zk_components(t, k));
    row["divisor"] = y.divisor.str();
    row["witnesses"] = Json::object();
    for (const auto& [sec, e] : y.witnesses) row["witnesses"][to_string(sec)] = e;
    row["ok"] = y.check.ok;
    j["yk"].push_back(row);
  }
  try {
    const BlowupPoint p = psi2_point(t);
    Json pj;
    pj["divisors"] = Json::array();
    for (const Divisor& d : p.divisors) pj["divisors"].push_back({{"index", d.index}, {"section", to_string(d.section)}});
    pj["vanishing_zc"] = Json(std::vector<std::string>(p.vanishing_zc.begin(), p.vanishing_zc.end()));
    pj["reconstruction"] = to_json(psi2_level_tree(t.base(), p))["levels"];
    j["psi2"] = pj;
  } catch (const Error& e) {
    j["psi2"] = std::string("unavailable: ") + e.what();
  }
  const BundleTable b = build_bundles(t, s);
  j["bundles"]["levels"] = Json::object();
  for (const auto& [k, f] : b.level) j["bundles"]["levels"][to_string(t.occupied()[k])] = f.str();
  j["bundles"]["edges"] = Json::object();
  for (const auto& [e, f] : b.edge) j["bundles"]["edges"][t.tree().name(e)] = f.str();
  j["pullback"] = to_json(blowup_pullback(x));
  j["psi2_map"] = to_json(psi2_map(x));
  return j;
}

std::string render_blowup(const LevelTree& t, const SpecialChoice& s) {
  const Json j = blowup_report(t, s);
  std::ostringstream os;
  os << "traverse sections of gamma_bar:";
  for (const auto& x : j["sections"]) os << " " << x.get<std::string>();
  os << "\nschedule:";
  for (const auto& x : j["schedule"]) os << " " << x["step"].get<int>() << ":" << x["section"].get<std::string>();
  os << "\n\nk  divisor  components\n";
  for (const auto& row : j["yk"]) {
    os << row["k"].get<int>() << "  " << row["divisor"].get<std::string>() << "  [";
    std::string comps;
    for (const auto& c : row["components"]) comps += (comps.empty() ? "" : " ") + c.get<std::string>();
    os << comps << "]" << (row["ok"].get<bool>() ? "" : "  FAILED") << "\n";
  }
  os << "\npsi2:";
  if (j["psi2"].is_string()) {
    os << " " << j["psi2"].get<std::string>() << "\n";
  } else {
    for (const auto& d : j["psi2"]["divisors"])
      os << " D" << d["index"].get<int>() << d["section"].get<std::string>();
    os << "  zc vanishing:";
    for (const auto& z : j["psi2"]["vanishing_zc"]) os << " " << z.get<std::string>();
    os << "\n  levels:";
    for (const auto& [v, l] : j["psi2"]["reconstruction"].items()) os << " " << v << "@" << l.get<std::string>();
    os << "\n";
  }
  os << "\nbundles:\n";
  for (const auto& [k, v] : j["bundles"]["levels"].items()) os << "  L(" << k << ") = " << v.get<std::string>() << "\n";
  for (const auto& [k, v] : j["bundles"]["edges"].items()) os << "  L(" << k << ") = " << v.get<std::string>() << "\n";
  os << "\npi:\n";
  for (const auto& [k, v] : j["pullback"].items()) os << "  " << k << " = " << v.get<std::string>() << "\n";
  os << "\npsi2 map:\n";
  for (const auto& [k, v] : j["psi2_map"].items()) os << "  " << k << " = " << v.get<std::string>() << "\n";
  return os.str();
}

bool VerifyReport::ok() const {
  for (const auto& c : checks)
    if (!c.result.ok) return false;
  return true;
}

Json VerifyReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["ok"] = ok();
  j["checks"] = Json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name}, {"ok", c.result.ok}, {"cases", c.result.cases},
                           {"detail", c.result.detail}});
  return j;
}

std::string VerifyReport::str() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.result.ok ? "PASS  " : "FAIL  ") << c.name << "  (" << c.result.cases << " cases)";
    if (!c.result.ok) os << "  " << c.result.detail;
    os << "\n";
  }
  os << "suite " << suite << ": " << (ok() ? "ok" : "FAILED") << "\n";
  return os.str();
}

const std::vector<std::string>& tree_suite_names() {
  static const std::vector<std::string> names{"index", "charts", "transitions", "blowup", "remark", "all"};
  return names;
}

VerifyReport verify_report(const LevelTree& t, const SpecialChoice& s, const std::string& suite) {
  if (!known(tree_suite_names(), suite) && suite != "contraction")
    fail(ErrorKind::kDomain, "unknown suite '" + suite + "' (expected one of " +
                                 join_names(tree_suite_names()) + ")");
  if (!t.has_level_data()) fail(ErrorKind::kDomain, "verification needs a vertex of positive weight");
  validate_special(t, s);
  return VerifyReport{suite, tree_checks(t, s, suite)};
}

bool RunReport::operation_ok(const std::string& op) const {
  auto it = operations.find(op);
  return it != operations.end() && it->second.failures == 0;
}

Json RunReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["spec"] = leveltree::to_json(spec);
  j["instances"] = instances;
  j["cases"] = cases;
  j["operations"] = Json::object();
  for (const auto& [op, tally] : operations)
    j["operations"][op] = {
        {"cases", tally.cases}, {"failures", tally.failures}, {"failed_instances", tally.failed_instances}};
  j["failure_count"] = failure_count;
  j["failed_instances"] = failed_instances;
  j["failures"] = Json::array();
  for (const auto& f : failures)
    j["failures"].push_back({{"instance", f.instance}, {"operation", f.operation}, {"detail", f.detail}});
  j["ok"] = ok();
  return j;
}

std::string RunReport::str() const {
  std::ostringstream os;
  os << "suite " << suite << ": " << instances << " instances, " << cases << " cases, "
     << failure_count << " failures in " << failed_instances << " instances\n";
  for (const auto& [op, tally] : operations)
    os << "  " << (tally.failures ? "FAIL  " : "PASS  ") << op << "  (" << tally.cases << " cases, "
       << tally.failures << " failures in " << tally.failed_instances << " instances)\n";
  for (const auto& f : failures) os << "  [" << f.operation << "] " << f.instance << "  " << f.detail << "\n";
  return os.str();
}

const std::vector<std::string>& enumerated_suite_names() {
  static const std::vector<std::string> names{"contraction", "charts", "transitions", "blowup", "remark"};
  return names;
}

RunReport run_suite(const std::string& suite, const EnumSpec& spec) {
  if (!known(enumerated_suite_names(), suite))
    fail(ErrorKind::kDomain, "unknown suite '" + suite + "' (expected one of " +
                                 join_names(enumerated_suite_names()) + ")");
  validate(spec);
  RunReport rep;
  rep.suite = suite;
  rep.spec = spec;
  for_each_level_tree(spec, [&](const LevelTree& t) {
    if (!t.has_level_data()) return;
    ++rep.instances;
    bool instance_ok = true;
    for (const NamedCheck& c : tree_checks(t, default_special(t), suite)) {
      OperationTally& tally = rep.operations[c.name];
      tally.cases += c.result.cases;
      rep.cases += c.result.cases;
      if (c.result.ok) continue;
      const long failed = std::max(c.result.failures, 1L);
      tally.failures += failed;
      ++tally.failed_instances;
      rep.failure_count += failed;
      instance_ok = false;
      if (rep.failures.size() < kMaxListedFailures)
        rep.failures.push_back({instance_id(t), c.name, c.result.detail});
    }
    if (!instance_ok) ++rep.failed_instances;
  });
  return rep;
}

std::vector<LevelTree> equivalent_relevelings(const LevelTree& t) {
  std::vector<LevelTree> out;
  if (!t.has_level_data()) return out;
  const int n = t.tree().size();
  const Rational m = t.m();

  std::vector<Rational> doubled(n), reshaped(n), fractional(n);
  const Rational new_m(-(t.m_index() * (t.m_index() + 1)) / 2);
  for (Vertex v = 0; v < n; ++v) {
    const Rational& l = t.level(v);
    doubled[v] = l * Rational(2);
    if (l >= m) {
      // Occupied index k goes to -k(k+1)/2: monotone, spacing not affine.
      const int k = t.level_index(v);
      reshaped[v] = Rational(-(k * (k + 1)) / 2);
      fractional[v] = l;
    } else {
      reshaped[v] = new_m + (l - m);
      fractional[v] = m + (l - m) / Rational(3);
    }
  }
  out.emplace_back(t.base(), doubled);
  out.emplace_back(t.base(), reshaped);
  out.emplace_back(t.base(), fractional);
  out.push_back(canonical_form(t));
  return out;
}

Json to_json(const EnumSpec& spec) {
  return {{"max_edges", spec.max_edges},
          {"max_weight", spec.max_weight},
          {"max_levels", spec.max_levels},
          {"require_positive_weight", spec.require_positive_weight},
          {"stable", spec.stable}};
}

EnumSpec enum_spec_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::kParse, "an enumeration spec must be a JSON object");
  EnumSpec s;
  for (const auto& [k, v] : j.items()) {
    if (k == "max_edges" || k == "max_weight" || k == "max_levels") {
      if (!v.is_number_integer()) fail(ErrorKind::kParse, "\"" + k + "\" must be an integer");
      (k == "max_edges" ? s.max_edges : k == "max_weight" ? s.max_weight : s.max_levels) = v.get<int>();
    } else if (k == "require_positive_weight" || k == "stable") {
      if (!v.is_boolean()) fail(ErrorKind::kParse, "\"" + k + "\" must be a boolean");
      (k == "stable" ? s.stable : s.require_positive_weight) = v.get<bool>();
    } else {
      fail(ErrorKind::kParse, "unknown enumeration field \"" + k + "\"");
    }
  }
  validate(s);
  return s;
}

}  // namespace leveltree
