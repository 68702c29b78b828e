#pragma once

#include <string>

namespace leveltree {

// Outcome of a batch of exact identity checks: the number of cases examined,
// how many failed, and the first failure.
struct CheckResult {
  bool ok = true;
  long cases = 0;
  long failures = 0;
  std::string detail;

  bool expect(bool pass) {
    ++cases;
    if (!pass) {
      ok = false;
      ++failures;
    }
    return pass;
  }
  void note(const std::string& what) {
    if (detail.empty()) detail = what;
  }
  void fail(const std::string& what) {
    expect(false);
    note(what);
  }
  void merge(const CheckResult& o) {
    cases += o.cases;
    failures += o.failures;
    if (!o.ok) {
      ok = false;
      note(o.detail);
    }
  }
};

}  // namespace leveltree
