#include <random>

#include "doctest.h"
#include "leveltree/errors.hpp"
#include "leveltree/monomial.hpp"
#include "oracles.hpp"

using namespace leveltree;

namespace {

Monomial M(const char* s) { return parse_monomial(s); }
Symbol S(const char* s) { return parse_symbol(s); }

}  // namespace

TEST_CASE("products cancel exponents") {
  CHECK((M("eps(-1)") * M("eps(-2)")).str() == "eps(-1) * eps(-2)");
  CHECK(M("eps(-1) * eps(-2)").exponent(S("eps(-2)")) == 1);
  CHECK(M("u_c") * Monomial() == M("u_c"));
  CHECK(M("u_c * u_b^-1") * M("u_b") == M("u_c"));
  CHECK((M("u_c") / M("u_c")).is_one());
  CHECK((M("u_c") * Monomial::zero()).is_zero());
  CHECK(M("u_c").pow(-2) == M("u_c^-2"));
}

TEST_CASE("the constant zero") {
  CHECK_THROWS_AS(M("u_c") / Monomial::zero(), Error);
  CHECK_THROWS_AS(Monomial::zero().pow(-1), Error);
  CHECK(Monomial::zero().pow(0).is_one());
  CHECK(Monomial::zero().str() == "0");
  CHECK(Monomial().str() == "1");
}

TEST_CASE("parsing and printing round trip") {
  for (const char* s : {"1", "0", "eps(-1)", "eps(-3/2)^2 * u_c^-1", "zeta_a * sigma_j1", "rho_c * zc_d",
                        "eps~(-1) * z~_e", "eps'(-2) * u'_b", "s_j", "f_a^-1"}) {
    const Monomial m = M(s);
    CHECK(M(m.str().c_str()) == m);
  }
  CHECK_THROWS_AS(M("q_a"), Error);
  CHECK_THROWS_AS(M("eps-1"), Error);
  CHECK_THROWS_AS(M("u_c * "), Error);
  CHECK_THROWS_AS(M("u_c^x"), Error);
}

TEST_CASE("substitution and composition") {
  MonomialMap g;
  g.set(S("u_c"), M("zeta_c * zeta_a^-1"));
  g.set(S("eps(-1)"), M("zeta_b"));
  CHECK(substitute(M("eps(-1) * u_c"), g) == M("zeta_b * zeta_c * zeta_a^-1"));
  CHECK_THROWS_AS(substitute(M("u_d"), g), Error);
  CHECK(substitute(M("u_d * u_c"), g, true) == M("u_d * zeta_c * zeta_a^-1"));

  MonomialMap f;
  f.set(S("zeta_c"), M("eps(-1) * u_c^2"));
  const MonomialMap fg = compose(f, g);
  CHECK(fg.at(S("zeta_c")) == M("zeta_b * zeta_c^2 * zeta_a^-2"));
  MonomialMap h;
  h.set(S("zeta_c"), M("u_d"));
  CHECK_THROWS_AS(compose(h, g), Error);
}

TEST_CASE("equality on strata") {
  MonomialMap f, g;
  f.set(S("zeta_c"), M("eps(-2) * u_c"));
  g.set(S("zeta_c"), Monomial::zero());
  Stratum st;
  st.zeros = {S("eps(-2)")};
  st.units = {S("eps(-1)"), S("u_c")};
  CHECK(equal_on_stratum(f, f, st));
  CHECK(equal_on_stratum(f, g, st));
  CHECK_FALSE(equal_on_stratum(f, g, Stratum{}));

  MonomialMap a, b;
  a.set(S("zeta_a"), M("eps(-1)"));
  b.set(S("zeta_a"), M("eps(-2)"));
  CHECK_FALSE(equal_on_stratum(a, b, Stratum{}));
  CHECK(evaluate(M("eps(-2)^-1"), Stratum{}) == Value::kFree);
  CHECK_THROWS_AS(evaluate(M("eps(-2)^-1"), st), Error);
}

TEST_CASE("composition commutes with evaluation at random points") {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<int> val(1, 3), ex(-2, 2), sign(0, 1);
  const std::vector<Symbol> src{S("x_1"), S("x_2"), S("x_3")};
  const std::vector<Symbol> mid{S("u_a"), S("u_b"), S("u_c")};
  auto random_monomial = [&](const std::vector<Symbol>& over) {
    Monomial m;
    for (const Symbol& s : over) m *= Monomial(s, ex(rng));
    return m;
  };
  // Small ranges keep every intermediate value inside int64.
  for (int trial = 0; trial < 500; ++trial) {
    MonomialMap f, g;
    f.set(S("zeta_e"), random_monomial(mid));
    for (const Symbol& s : mid) g.set(s, random_monomial(src));
    std::map<Symbol, Rational> point;
    for (const Symbol& s : src) point[s] = Rational(sign(rng) ? val(rng) : -val(rng), val(rng));
    std::map<Symbol, Rational> image;
    for (const Symbol& s : mid) image[s] = oracle::evaluate(g.at(s), point);
    const Rational direct = oracle::evaluate(f.at(S("zeta_e")), image);
    CHECK(oracle::evaluate(compose(f, g).at(S("zeta_e")), point) == direct);
  }
}
