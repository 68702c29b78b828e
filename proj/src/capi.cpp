#include "leveltree/leveltree.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "leveltree/blowup.hpp"
#include "leveltree/contraction.hpp"
#include "leveltree/errors.hpp"
#include "leveltree/io.hpp"
#include "leveltree/report.hpp"

struct lt_tree {
  leveltree::TreeDocument doc;
};

namespace {

using namespace leveltree;

thread_local std::string g_last_error;

lt_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::kParse: return LT_ERR_PARSE;
    case ErrorKind::kStructure: return LT_ERR_STRUCTURE;
    case ErrorKind::kInvalidLevel: return LT_ERR_INVALID_LEVEL;
    case ErrorKind::kDomain: return LT_ERR_DOMAIN;
    case ErrorKind::kIllDefined: return LT_ERR_ILL_DEFINED;
    case ErrorKind::kVerification: return LT_ERR_VERIFICATION;
    case ErrorKind::kLimit: return LT_ERR_LIMIT;
  }
  return LT_ERR_INTERNAL;
}

struct ArgumentError {
  std::string what;
};

// Runs body and maps exceptions to status codes, recording the message.
template <class F>
lt_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return LT_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const ArgumentError& e) {
    g_last_error = e.what;
    return LT_ERR_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return LT_ERR_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw ArgumentError{what};
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string opt(const char* s) { return s ? std::string(s) : std::string(); }

void check_format(lt_format f, bool dot_allowed) {
  require(f == LT_FORMAT_TEXT || f == LT_FORMAT_JSON || (dot_allowed && f == LT_FORMAT_DOT),
          "unsupported output format");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

EnumSpec spec_of(const char* spec_json) {
  if (!spec_json || !*spec_json) return EnumSpec{};
  Json j;
  try {
    j = Json::parse(spec_json);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::kParse, "malformed enumeration spec at byte " + std::to_string(e.byte));
  }
  return enum_spec_from_json(j);
}

std::string identities_text(const IdentityReport& r) {
  std::ostringstream os;
  const std::pair<const char*, bool> parts[] = {
      {"valid tree", r.valid_tree}, {"m", r.m},       {"I+", r.plus},
      {"Im", r.im},                 {"I-", r.minus}, {"I- amended", r.minus_amended},
      {"weight", r.weight}};
  for (const auto& [name, ok] : parts) os << "  " << (ok ? "holds " : "FAILS ") << name << "\n";
  if (!r.detail.empty()) os << "  first mismatch: " << r.detail << "\n";
  return os.str();
}

}  // namespace

extern "C" {

const char* lt_version(void) { return "1.0.0"; }

const char* lt_status_name(lt_status s) {
  switch (s) {
    case LT_OK: return "ok";
    case LT_ERR_PARSE: return "parse error";
    case LT_ERR_STRUCTURE: return "structure error";
    case LT_ERR_INVALID_LEVEL: return "invalid level map";
    case LT_ERR_DOMAIN: return "domain error";
    case LT_ERR_ILL_DEFINED: return "ill-defined expression";
    case LT_ERR_VERIFICATION: return "verification failure";
    case LT_ERR_LIMIT: return "limit exceeded";
    case LT_ERR_ARGUMENT: return "invalid argument";
    case LT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lt_last_error(void) { return g_last_error.c_str(); }

void lt_string_free(char* s) { std::free(s); }

lt_status lt_tree_from_json(const char* json, lt_tree** out) {
  return guard([&] {
    require(json && out, "null argument");
    *out = nullptr;
    *out = new lt_tree{parse_tree_document(json)};
  });
}

lt_status lt_tree_load(const char* path, lt_tree** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = nullptr;
    *out = new lt_tree{load_tree_document(path)};
  });
}

void lt_tree_free(lt_tree* t) { delete t; }

int lt_tree_has_levels(const lt_tree* t) { return t && t->doc.tree ? 1 : 0; }

lt_status lt_tree_to_json(const lt_tree* t, char** out) {
  return guard([&] {
    require(t && out, "null argument");
    Json j = t->doc.tree ? to_json(*t->doc.tree) : to_json(t->doc.base);
    if (!t->doc.special.empty()) j["special"] = t->doc.special;
    *out = dup(dump(j));
  });
}

lt_status lt_tree_to_dot(const lt_tree* t, char** out) {
  return guard([&] {
    require(t && out, "null argument");
    *out = dup(t->doc.tree ? to_dot(*t->doc.tree) : to_dot(t->doc.base));
  });
}

lt_status lt_indices_report(const lt_tree* t, const char* special, lt_format format, char** out) {
  return guard([&] {
    require(t && out, "null argument");
    check_format(format, false);
    const LevelTree& lt = t->doc.level_tree();
    if (!lt.has_level_data()) {
      *out = dup(format == LT_FORMAT_JSON ? dump(indices_report(lt, {}))
                                          : render_tree(lt) + "\nno vertex of positive weight: I+ = {}\n");
      return;
    }
    const SpecialChoice s = special_for(t->doc, opt(special));
    *out = dup(format == LT_FORMAT_JSON ? dump(indices_report(lt, s))
                                        : render_tree(lt) + "\n" + render_indices(lt, s));
  });
}

lt_status lt_contract(const lt_tree* t, const char* levels_csv, const char* edges_csv,
                      lt_format format, char** out) {
  return guard([&] {
    require(t && out, "null argument");
    check_format(format, true);
    const LevelTree& lt = t->doc.level_tree();
    const IndexSubset I = parse_index_subset(lt, opt(levels_csv), opt(edges_csv));
    if (format == LT_FORMAT_JSON) {
      *out = dup(dump(contraction_report(lt, I)));
      return;
    }
    const ContractionResult c = contract(lt, I);
    if (format == LT_FORMAT_DOT) {
      *out = dup(to_dot(c.tree));
      return;
    }
    std::string contracted;
    for (const auto& e : c.contracted) contracted += (contracted.empty() ? "" : ", ") + e;
    *out = dup("I = " + to_string(I) + "\ncontracted edges: {" + contracted + "}\n\n" +
               render_tree(c.tree) + "\nindex identities:\n" +
               identities_text(verify_index_identities(lt, I)));
  });
}

lt_status lt_chart_report(const lt_tree* t, const char* special, lt_format format, char** out) {
  return guard([&] {
    require(t && out, "null argument");
    check_format(format, false);
    const LevelTree& lt = t->doc.level_tree();
    const SpecialChoice s = special_for(t->doc, opt(special));
    *out = dup(format == LT_FORMAT_JSON ? dump(chart_report(lt, s)) : render_chart(lt, s));
  });
}

lt_status lt_blowup_report(const lt_tree* t, const char* special, lt_format format, char** out) {
  return guard([&] {
    require(t && out, "null argument");
    check_format(format, false);
    const LevelTree& lt = t->doc.level_tree();
    const SpecialChoice s = special_for(t->doc, opt(special));
    *out = dup(format == LT_FORMAT_JSON ? dump(blowup_report(lt, s)) : render_blowup(lt, s));
  });
}

lt_status lt_verify(const lt_tree* t, const char* suite, const char* special, lt_format format,
                    int* passed, char** out) {
  return guard([&] {
    require(t && out && passed, "null argument");
    check_format(format, false);
    const LevelTree& lt = t->doc.level_tree();
    if (!lt.has_level_data()) fail(ErrorKind::kDomain, "verification needs a vertex of positive weight");
    const SpecialChoice s = special_for(t->doc, opt(special));
    const VerifyReport r = verify_report(lt, s, suite ? suite : "all");
    *passed = r.ok() ? 1 : 0;
    *out = dup(format == LT_FORMAT_JSON ? dump(r.to_json()) : r.str());
  });
}

lt_status lt_enumerate(const char* spec_json, int count_only, char** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    const EnumSpec spec = spec_of(spec_json);
    validate(spec);
    long weighted = 0, level_trees = 0;
    std::string lines;
    for (const WeightedTree& w : gen_weighted_trees(spec)) {
      ++weighted;
      for (const LevelTree& t : gen_level_trees(w, spec)) {
        ++level_trees;
        if (!count_only) lines += to_json(t).dump() + "\n";
      }
    }
    if (count_only) {
      Json j;
      j["spec"] = to_json(spec);
      j["weighted_trees"] = weighted;
      j["level_trees"] = level_trees;
      *out = dup(dump(j));
    } else {
      *out = dup(lines);
    }
  });
}

lt_status lt_run_suite(const char* suite, const char* spec_json, lt_format format, int* passed,
                       char** out) {
  return guard([&] {
    require(suite && out && passed, "null argument");
    check_format(format, false);
    const RunReport r = run_suite(suite, spec_of(spec_json));
    *passed = r.ok() ? 1 : 0;
    *out = dup(format == LT_FORMAT_JSON ? dump(r.to_json()) : r.str());
  });
}

}  // extern "C"
