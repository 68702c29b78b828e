#include "leveltree/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "leveltree/errors.hpp"

namespace leveltree {

namespace {

const char* base_name(Kind k) {
  switch (k) {
    case Kind::kEpsilon: return "eps";
    case Kind::kU: return "u";
    case Kind::kZ: return "z";
    case Kind::kW: return "w";
    case Kind::kWEdge: return "we";
    case Kind::kZeta: return "zeta";
    case Kind::kSigma: return "sigma";
    case Kind::kMu: return "mu";
    case Kind::kF: return "f";
    case Kind::kRho: return "rho";
    case Kind::kZCheck: return "zc";
    case Kind::kS: return "s";
    case Kind::kGeneric: return "x";
  }
  return "?";
}

const char* decor_mark(Decor d) {
  switch (d) {
    case Decor::kNone: return "";
    case Decor::kPrime: return "'";
    case Decor::kHat: return "#";
    case Decor::kTilde: return "~";
  }
  return "";
}

bool is_mark(char c) { return c == '\'' || c == '#' || c == '~'; }

Decor decor_of(char c) {
  if (c == '\'') return Decor::kPrime;
  if (c == '#') return Decor::kHat;
  return Decor::kTilde;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string Symbol::str() const {
  std::string out = base_name(kind);
  out += decor_mark(decor);
  if (level_keyed()) {
    out += "(" + to_string(level) + ")";
  } else {
    out += "_" + key;
  }
  return out;
}

bool Symbol::operator<(const Symbol& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (decor != o.decor) return decor < o.decor;
  if (level != o.level) return level > o.level;  // eps(-1) before eps(-2)
  return key < o.key;
}

Monomial::Monomial(Symbol s, int exp) {
  if (exp != 0) terms_.emplace_back(std::move(s), exp);
}

Monomial Monomial::zero() {
  Monomial m;
  m.zero_ = true;
  return m;
}

int Monomial::exponent(const Symbol& s) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                             [](const Term& t, const Symbol& x) { return t.first < x; });
  return (it != terms_.end() && it->first == s) ? it->second : 0;
}

void Monomial::merge(const Monomial& o, int sign) {
  if (o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, sign * b->second);
      ++b;
    } else {
      int e = a->second + sign * b->second;
      if (e != 0) out.emplace_back(std::move(a->first), e);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Monomial& Monomial::operator*=(const Monomial& o) {
  if (zero_ || o.zero_) {
    *this = zero();
    return *this;
  }
  merge(o, 1);
  return *this;
}

Monomial& Monomial::operator/=(const Monomial& o) {
  if (o.zero_) fail(ErrorKind::kIllDefined, "division by 0");
  if (zero_) return *this;
  merge(o, -1);
  return *this;
}

Monomial Monomial::pow(int k) const {
  if (k == 0) return Monomial();
  if (zero_) {
    if (k < 0) fail(ErrorKind::kIllDefined, "negative power of 0");
    return zero();
  }
  Monomial out = *this;
  for (auto& t : out.terms_) t.second *= k;
  return out;
}

bool Monomial::operator<(const Monomial& o) const {
  if (zero_ != o.zero_) return zero_ < o.zero_;
  return terms_ < o.terms_;
}

std::string Monomial::str() const {
  if (zero_) return "0";
  if (terms_.empty()) return "1";
  std::string out;
  for (const auto& [s, e] : terms_) {
    if (!out.empty()) out += " * ";
    out += s.str();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

Symbol parse_symbol(std::string_view text) {
  std::string_view s = trim(text);
  std::size_t i = 0;
  while (i < s.size() && std::islower(static_cast<unsigned char>(s[i]))) ++i;
  std::string_view base = s.substr(0, i);
  static const Kind kinds[] = {Kind::kEpsilon, Kind::kU,     Kind::kZ,      Kind::kW,
                               Kind::kWEdge,   Kind::kZeta,  Kind::kSigma,  Kind::kMu,
                               Kind::kF,       Kind::kRho,   Kind::kZCheck, Kind::kS,
                               Kind::kGeneric};
  const Kind* found = nullptr;
  for (const Kind& k : kinds) {
    if (base == base_name(k)) found = &k;
  }
  if (found == nullptr) fail(ErrorKind::kParse, "unknown symbol '" + std::string(s) + "'");
  Symbol out;
  out.kind = *found;
  if (i < s.size() && is_mark(s[i])) out.decor = decor_of(s[i++]);
  if (out.level_keyed()) {
    if (i >= s.size() || s[i] != '(' || s.back() != ')') {
      fail(ErrorKind::kParse, "expected eps(level) in '" + std::string(s) + "'");
    }
    out.level = parse_rational(s.substr(i + 1, s.size() - i - 2));
  } else {
    if (i >= s.size() || s[i] != '_' || i + 1 == s.size()) {
      fail(ErrorKind::kParse, "expected name_key in '" + std::string(s) + "'");
    }
    out.key = std::string(s.substr(i + 1));
  }
  return out;
}

Monomial parse_monomial(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "0") return Monomial::zero();
  if (s == "1") return Monomial();
  if (s.empty()) fail(ErrorKind::kParse, "empty monomial");
  Monomial out;
  bool more = true;
  while (more) {
    std::size_t star = s.find('*');
    more = star != std::string_view::npos;
    std::string_view factor = trim(s.substr(0, star));
    s = more ? s.substr(star + 1) : std::string_view();
    if (factor.empty()) fail(ErrorKind::kParse, "empty factor in monomial");
    int exp = 1;
    std::size_t caret = factor.rfind('^');
    if (caret != std::string_view::npos) {
      std::string_view e = trim(factor.substr(caret + 1));
      auto [p, ec] = std::from_chars(e.data(), e.data() + e.size(), exp);
      if (ec != std::errc() || p != e.data() + e.size()) {
        fail(ErrorKind::kParse, "bad exponent in '" + std::string(factor) + "'");
      }
      factor = factor.substr(0, caret);
    }
    out *= Monomial(parse_symbol(factor), exp);
  }
  return out;
}

void MonomialMap::set(const Symbol& target, Monomial image) {
  assignment_[target] = std::move(image);
}

const Monomial& MonomialMap::at(const Symbol& target) const {
  auto it = assignment_.find(target);
  if (it == assignment_.end()) fail(ErrorKind::kDomain, "no image for " + target.str());
  return it->second;
}

std::set<Symbol> MonomialMap::targets() const {
  std::set<Symbol> out;
  for (const auto& kv : assignment_) out.insert(kv.first);
  return out;
}

MonomialMap MonomialMap::identity(const std::set<Symbol>& coords) {
  MonomialMap g;
  for (const Symbol& s : coords) {
    g.set(s, Monomial(s));
    g.add_source(s);
  }
  return g;
}

Monomial substitute(const Monomial& m, const MonomialMap& g, bool passthrough) {
  if (m.is_zero()) return m;
  Monomial out;
  for (const auto& [s, e] : m.terms()) {
    auto it = g.assignment().find(s);
    if (it == g.assignment().end()) {
      if (!passthrough) fail(ErrorKind::kDomain, "no image for " + s.str());
      out *= Monomial(s, e);
    } else {
      out *= it->second.pow(e);
    }
  }
  return out;
}

MonomialMap compose(const MonomialMap& f, const MonomialMap& g) {
  MonomialMap out;
  for (const Symbol& s : g.source()) out.add_source(s);
  for (const auto& [t, img] : f.assignment()) out.set(t, substitute(img, g));
  return out;
}

const char* to_string(Value v) {
  switch (v) {
    case Value::kZero: return "zero";
    case Value::kUnit: return "unit";
    case Value::kFree: return "free";
  }
  return "?";
}

Value evaluate(const Monomial& m, const Stratum& s) {
  if (m.is_zero()) return Value::kZero;
  bool vanishes = false;
  bool all_units = true;
  for (const auto& [sym, e] : m.terms()) {
    if (s.zeros.count(sym)) {
      if (e < 0) fail(ErrorKind::kIllDefined, "negative power of vanishing " + sym.str());
      vanishes = true;
    } else if (!s.units.count(sym)) {
      all_units = false;
    }
  }
  if (vanishes) return Value::kZero;
  return all_units ? Value::kUnit : Value::kFree;
}

bool equal_on_stratum(const MonomialMap& f, const MonomialMap& g, const Stratum& s) {
  if (f.assignment().size() != g.assignment().size()) return false;
  auto a = f.assignment().begin();
  auto b = g.assignment().begin();
  for (; a != f.assignment().end(); ++a, ++b) {
    if (!(a->first == b->first)) return false;
    bool za = evaluate(a->second, s) == Value::kZero;
    bool zb = evaluate(b->second, s) == Value::kZero;
    if (za != zb) return false;
    if (!za && a->second != b->second) return false;
  }
  return true;
}

}  // namespace leveltree
