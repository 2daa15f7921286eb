#include "doctest.h"
#include "thhcalc/errors.hpp"
#include "thhcalc/models.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace thhcalc;

namespace {
ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

struct Theta {
  PrimeField f;
  Presentation pres;
  explicit Theta(std::uint32_t p) : f(p), pres(make_theta(f)) {}
  const AlgebraSpec& amb() const { return pres.ambient(); }
  Element g(const char* name, int e = 1) const { return gen(amb(), name, e); }
  Element mul(const Element& a, const Element& b) const { return pres.multiply(a, b); }
};
}  // namespace

TEST_CASE("theta products at p = 3") {
  Theta t(3);
  // b1^2 rewrites to u b2 in one step, which u^{p-2} b_j = 0 then kills.
  const auto b1sq = std::find_if(t.pres.rules().begin(), t.pres.rules().end(), [&](const RewriteRule& r) {
    Monomial m = t.amb().unit();
    m[t.amb().index_of("b1")] = 2;
    return r.lhs == m;
  });
  REQUIRE(b1sq != t.pres.rules().end());
  CHECK(b1sq->rhs == multiply(t.amb(), t.g("u"), t.g("b2")));
  CHECK(t.mul(t.g("b1"), t.g("b1")).is_zero());
  CHECK(t.mul(t.g("a1"), t.g("a2")).is_zero());
  CHECK(t.mul(t.g("b1"), t.g("b2")).is_zero());
  CHECK(t.mul(t.g("a0"), t.g("b1")).is_zero());
  CHECK(t.mul(t.g("a1"), t.g("b1")) == multiply(t.amb(), t.g("u"), t.g("a2")));
  CHECK(t.pres.normal_form(one(t.amb())) == one(t.amb()));
}

TEST_CASE("theta products at p = 5 wrap through mu2") {
  Theta t(5);
  auto lhs = t.mul(t.g("b3"), t.g("b4"));  // u b_{7-5} mu2
  auto rhs = product_of(t.amb(), {{"u", 1}, {"mu2", 1}, {"b2", 1}});
  CHECK(lhs == t.pres.normal_form(rhs));
  CHECK_FALSE(lhs.is_zero());
  CHECK(t.mul(t.g("u", 3), t.g("a1")).is_zero());
  CHECK_FALSE(t.mul(t.g("u", 3), t.g("a4")).is_zero());
}

TEST_CASE("theta basis below mu2 at p = 3") {
  Theta t(3);
  auto h = hilbert_pres(t.pres, 17);
  for (int n = 0; n <= 17; ++n) {
    const bool expected = n == 0 || n == 2 || n == 3 || n == 8 || n == 9 || n == 14 || n == 15 || n == 17;
    CHECK_MESSAGE(h[n] == (expected ? 1 : 0), "degree " << n);
  }
  CHECK(h[1] == 0);
}

TEST_CASE("E(lambda1) (x) Theta splits as kernel plus image") {
  for (std::uint32_t p : {3u, 5u}) {
    PrimeField f(p);
    const int cap = 60;
    const int P = static_cast<int>(p);
    auto e = make_algebra(f, {exterior("lambda1", 2 * P - 1)});
    auto ker = shifted(hilbert(tensor(e, make_algebra(f, {polynomial("mu2", 2 * P * P)})), cap), 2 * P * P - 1);
    auto kp = hilbert(tensor(e, make_algebra(f, {polynomial("kp", 2 * P * P)})), cap);
    auto free_part = hilbert(make_algebra(f, {exterior("lambda1", 2 * P - 1), exterior("dlogu", 1),
                                              polynomial("kappa1", 2 * P)}), cap);
    auto u_part = hilbert(models::thh_ku_log(f), cap) - free_part;
    CHECK(hilbert_pres(models::thh_ku(f), cap) == ker + kp + u_part);
  }
}

TEST_CASE("normal form is idempotent and order independent") {
  Theta t(5);
  std::mt19937 rng(7);
  std::vector<std::size_t> order(t.pres.rules().size());
  std::iota(order.begin(), order.end(), 0);
  const auto& gens = t.amb().generators();
  for (int trial = 0; trial < 60; ++trial) {
    Monomial m = t.amb().unit();
    for (int k = 0; k < 3; ++k) m[rng() % gens.size()] += 1;
    bool ok = true;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (auto mx = t.amb().max_exponent(i); mx && m[i] > *mx) ok = false;
    if (!ok) continue;
    auto e = monomial(t.amb(), m);
    auto nf = t.pres.normal_form(e);
    CHECK(t.pres.normal_form(nf) == nf);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(t.pres.normal_form(e, &order) == nf);
    if (!nf.is_zero()) CHECK(homogeneous_degree(t.amb(), nf) == homogeneous_degree(t.amb(), e));
  }
}

TEST_CASE("looping rules are caught") {
  PrimeField f(3);
  auto a = make_algebra(f, {polynomial("x", 2), polynomial("y", 2)});
  auto x = a.index_of("x");
  auto y = a.index_of("y");
  Monomial mx = a.unit(), my = a.unit();
  mx[x] = 1;
  my[y] = 1;
  auto pres = make_presentation(a, {{mx, monomial(a, my), "x->y"}, {my, monomial(a, mx), "y->x"}});
  CHECK(code_of([&] { pres.normal_form(gen(a, "x")); }) == ErrorCode::NonTermination);
  Monomial mxx = a.unit();
  mxx[x] = 2;
  CHECK(code_of([&] { make_presentation(a, {{mxx, gen(a, "y"), "bad"}}); }) == ErrorCode::DegreeMismatch);
}

TEST_CASE("sigma on THH(ku, D(u)) is a derivation") {
  PrimeField f(3);
  auto s = models::thh_ku_log(f);
  DerivationSpec sigma;
  sigma.values["u"] = multiply(s, gen(s, "u"), gen(s, "dlogu"));
  sigma.values["kappa1"] = scale(s, multiply(s, gen(s, "kappa1"), gen(s, "dlogu")), f.neg(1));
  auto rep = check_derivation(s, sigma);
  CHECK(rep.passed);
  CHECK(std::any_of(rep.checks.begin(), rep.checks.end(),
                    [](const RelationCheck& c) { return c.name.find("u") != std::string::npos; }));
  CHECK(check_derivation(s, DerivationSpec{}).passed);

  DerivationSpec bad;
  bad.values["u"] = gen(s, "lambda1");
  CHECK(code_of([&] { check_derivation(s, bad); }) == ErrorCode::DegreeMismatch);
}

TEST_CASE("sigma on E(lambda1) (x) Theta") {
  for (std::uint32_t p : {3u, 5u}) {
    PrimeField f(p);
    auto ku = models::thh_ku(f);
    const auto& a = ku.ambient();
    DerivationSpec sigma;
    sigma.values["u"] = gen(a, "a0");
    for (int j = 1; j < static_cast<int>(p); ++j)
      sigma.values["b" + std::to_string(j)] = scale(a, gen(a, "a" + std::to_string(j)), f.reduce(1 - j));
    CHECK(check_derivation(ku, sigma).passed);

    DerivationSpec wrong = sigma;
    wrong.values["b1"] = scale(a, gen(a, "a1"), 2);  // (1 + j) in place of (1 - j)
    CHECK_FALSE(check_derivation(ku, wrong).passed);
  }
}
