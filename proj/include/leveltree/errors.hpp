#pragma once

#include <stdexcept>
#include <string>

namespace leveltree {

enum class ErrorKind {
  kParse,         // malformed input text
  kStructure,     // not a rooted tree, unknown vertex or edge
  kInvalidLevel,  // level map violates the level-tree conditions
  kDomain,        // operation applied outside its domain
  kIllDefined,    // negative power of a symbol constrained to zero
  kVerification,  // an asserted identity failed
  kLimit,         // input exceeds a configured bound
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace leveltree
