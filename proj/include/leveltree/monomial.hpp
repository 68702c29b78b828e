#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leveltree/rational.hpp"

namespace leveltree {

// Coordinate families. Level-keyed kinds carry a level, the others a string
// key (an edge id or a tag).
enum class Kind : unsigned char {
  kEpsilon,  // eps(i)
  kU,        // u_e
  kZ,        // z_e
  kW,        // w_j, j a tag
  kWEdge,    // we_e: extra parameter carried by a contracted edge
  kZeta,     // zeta_e
  kSigma,    // sigma_j
  kMu,       // mu_e
  kF,        // f_e, a unit
  kRho,      // rho_e, a unit
  kZCheck,   // zc_e
  kS,        // s_j
  kGeneric,  // x_k
};

// Distinguishes the parallel coordinate systems of a transition check.
enum class Decor : unsigned char { kNone, kPrime, kHat, kTilde };

struct Symbol {
  Kind kind = Kind::kGeneric;
  Decor decor = Decor::kNone;
  Rational level{0};
  std::string key;

  static Symbol at_level(Kind k, const Rational& level, Decor d = Decor::kNone) {
    return Symbol{k, d, level, {}};
  }
  static Symbol keyed(Kind k, std::string key, Decor d = Decor::kNone) {
    return Symbol{k, d, Rational(0), std::move(key)};
  }
  static Symbol eps(const Rational& level, Decor d = Decor::kNone) {
    return at_level(Kind::kEpsilon, level, d);
  }

  bool level_keyed() const { return kind == Kind::kEpsilon; }
  std::string str() const;

  bool operator==(const Symbol& o) const {
    return kind == o.kind && decor == o.decor && level == o.level && key == o.key;
  }
  bool operator<(const Symbol& o) const;
};

// Laurent monomial with integer exponents, or the constant 0.
class Monomial {
 public:
  using Term = std::pair<Symbol, int>;

  Monomial() = default;  // the unit 1
  explicit Monomial(Symbol s, int exp = 1);
  static Monomial zero();

  bool is_zero() const { return zero_; }
  bool is_one() const { return !zero_ && terms_.empty(); }
  int exponent(const Symbol& s) const;
  const std::vector<Term>& terms() const { return terms_; }

  Monomial& operator*=(const Monomial& o);
  // Throws kIllDefined when dividing by 0.
  Monomial& operator/=(const Monomial& o);
  // Throws kIllDefined for a negative power of 0; 0^0 is 1.
  Monomial pow(int k) const;

  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend Monomial operator/(Monomial a, const Monomial& b) { return a /= b; }
  bool operator==(const Monomial& o) const { return zero_ == o.zero_ && terms_ == o.terms_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator<(const Monomial& o) const;

  // "u_c * eps(-2) * u_b^-1"; "1" and "0" for the constants.
  std::string str() const;

 private:
  void merge(const Monomial& o, int sign);

  bool zero_ = false;
  std::vector<Term> terms_;  // sorted by symbol, no zero exponents
};

Symbol parse_symbol(std::string_view text);
Monomial parse_monomial(std::string_view text);

// Pullback data: each target coordinate is assigned a monomial in source
// coordinates.
class MonomialMap {
 public:
  void set(const Symbol& target, Monomial image);
  void add_source(const Symbol& s) { source_.insert(s); }
  bool contains(const Symbol& target) const { return assignment_.count(target) != 0; }
  const Monomial& at(const Symbol& target) const;  // throws kDomain if absent

  const std::map<Symbol, Monomial>& assignment() const { return assignment_; }
  const std::set<Symbol>& source() const { return source_; }
  std::set<Symbol> targets() const;

  static MonomialMap identity(const std::set<Symbol>& coords);

 private:
  std::map<Symbol, Monomial> assignment_;
  std::set<Symbol> source_;
};

// Rewrites every symbol of m through g. Symbols without an assignment are
// kept as they are when passthrough is set, and rejected otherwise.
Monomial substitute(const Monomial& m, const MonomialMap& g, bool passthrough = false);

// (f after g): assigns to each target of f its image rewritten through g.
// Throws kDomain when a symbol used by f is not a target of g.
MonomialMap compose(const MonomialMap& f, const MonomialMap& g);

struct Stratum {
  std::set<Symbol> zeros;
  std::set<Symbol> units;
};

enum class Value { kZero, kUnit, kFree };
const char* to_string(Value v);

// Throws kIllDefined for a negative power of a zero symbol.
Value evaluate(const Monomial& m, const Stratum& s);

// Same targets required; compares images after imposing the stratum.
bool equal_on_stratum(const MonomialMap& f, const MonomialMap& g, const Stratum& s);

}  // namespace leveltree
