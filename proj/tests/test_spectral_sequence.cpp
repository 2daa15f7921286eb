#include "doctest.h"
#include "thhcalc/errors.hpp"
#include "thhcalc/models.hpp"
#include "thhcalc/tor.hpp"

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

Page thhz_e2(const PrimeField& f, int cap) {
  return tor_closed_form(models::cyclic_v(f), trivial_module(models::thh_ell(f)), ground_module(), cap);
}

bool shrinks(const Page& before, const Page& after) {
  for (const auto& [b, n] : after.dims())
    if (n > before.dim(b)) return false;
  return true;
}

Monomial with(const AlgebraSpec& s, std::initializer_list<std::pair<const char*, int>> xs) {
  Monomial m = s.unit();
  for (const auto& [name, e] : xs) m[s.index_of(name)] = e;
  return m;
}
}  // namespace

TEST_CASE("no rules leaves the page unchanged") {
  PrimeField f(3);
  auto e2 = thhz_e2(f, 40);
  auto e3 = run_differential(e2, {});
  CHECK(e3.dims() == e2.dims());
  CHECK(run_differential(e3, {}).dims() == e3.dims());
}

TEST_CASE("thhz differentials leave E(lambda1) P(mu2) E([v]) P_p([dv])") {
  for (std::uint32_t p : {3u, 5u}) {
    PrimeField f(p);
    const int cap = p == 3 ? 54 : 60;
    auto e2 = thhz_e2(f, cap);
    auto einf = run_differential(e2, models::dv_rules(e2));
    CHECK(shrinks(e2, einf));
    auto claimed = make_algebra(f, {exterior("lambda1", 2 * p - 1), polynomial("mu2", 2 * p * p),
                                    exterior("[v]", 2 * p - 2, 1), truncated("[dv]", 2 * p - 1, p, 1)});
    CHECK(einf.dims() == window(hilbert_bigraded(claimed, cap), cap));
  }
}

TEST_CASE("dv family scalars at p = 3") {
  PrimeField f(3);
  auto e2 = thhz_e2(f, 60);
  auto rules = models::dv_rules(e2);
  const auto& s = e2.spec();
  std::vector<FamilyEntry> entries{
      {e2.mono(with(s, {{"[dv]", 4}})), e2.element(e2.mono(with(s, {{"lambda2", 1}, {"[dv]", 1}})))},
      {e2.mono(with(s, {{"[dv]", 6}})), e2.element(e2.mono(with(s, {{"lambda2", 1}, {"[dv]", 3}})))},
      {e2.mono(with(s, {{"[dv]", 2}})), PageElement{}},
  };
  auto rep = verify_rule_family(e2, rules, entries);
  CHECK(rep.passed);
  REQUIRE(rep.entries.size() == 3);
  CHECK(rep.entries[0].scalar == 1);
  CHECK(rep.entries[1].scalar == 1);
  CHECK(verify_rule_family(e2, rules, models::dv_family(e2, 10)).passed);

  std::vector<FamilyEntry> wrong{{e2.mono(with(s, {{"[dv]", 4}})), PageElement{}}};
  auto bad = verify_rule_family(e2, rules, wrong);
  CHECK_FALSE(bad.passed);
  CHECK(code_of([&] { bad.require(); }) == ErrorCode::FamilyViolation);
}

TEST_CASE("rule errors") {
  PrimeField f(3);
  auto e2 = thhz_e2(f, 40);
  auto wrong = DifferentialRule::on_generator(3, "[dv]", gen(e2.spec(), "lambda1"), 3);
  CHECK(code_of([&] { run_differential(e2, {wrong}); }) == ErrorCode::BidegreeViolation);

  auto spec = make_algebra(f, {polynomial("y", 0, 4), exterior("x", 1, 2), polynomial("z", 2)});
  auto page = spec_page(spec, 2, 20);
  std::vector<DifferentialRule> rules{DifferentialRule::on_generator(2, "y", gen(spec, "x")),
                                      DifferentialRule::on_generator(2, "x", gen(spec, "z"))};
  CHECK(code_of([&] { run_differential(page, rules); }) == ErrorCode::NotADifferential);
}

TEST_CASE("ell-log abutment with [dv]^p = mu2") {
  PrimeField f(3);
  const int cap = 60;
  auto e = make_algebra(f, {exterior("dv", 5)});
  auto e2 = tor_closed_form(e, trivial_module(models::thh_ell(f)),
                            trivial_module(make_algebra(f, {exterior("dlogv", 1)})), cap);
  auto einf = run_differential(e2, models::dv_rules(e2));
  auto target = models::thh_ell_log(f);
  AbutmentSpec ab{target,
                  {{"lambda1", 0}, {"dlogv", 0}, {"kappa1", 1}},
                  models::dv_einfty(f, {exterior("dlogv", 1)}, cap),
                  {{"lambda1", gen(target, "lambda1")},
                   {"dlogv", gen(target, "dlogv")},
                   {"mu2", gen(target, "kappa1", 3)},
                   {"[dv]", gen(target, "kappa1")}},
                  {}};
  ExtensionRule ext{"[dv]^p = mu2", {{ClaimRef{{{"[dv]", 1}}, "1", {}}, 3}}, ClaimRef{{{"mu2", 1}}, "1", {}}};
  auto rep = compare_abutment(einf, ab, {ext}, cap);
  CHECK(rep.passed);
  CHECK_FALSE(rep.first_mismatch.has_value());

  // Without the differentials the dimensions disagree.
  auto early = compare_abutment(e2, ab, {ext}, cap);
  CHECK_FALSE(early.passed);
  CHECK(early.first_mismatch.has_value());
  CHECK(code_of([&] { early.require(); }) == ErrorCode::DimMismatch);

  // An extension between different total degrees is rejected.
  ExtensionRule skew{"[dv]^2 = mu2", {{ClaimRef{{{"[dv]", 1}}, "1", {}}, 2}}, ClaimRef{{{"mu2", 1}}, "1", {}}};
  CHECK(code_of([&] { compare_abutment(einf, ab, {skew}, cap); }) == ErrorCode::ExtensionDegreeError);
}

TEST_CASE("identity abutment") {
  PrimeField f(5);
  auto spec = models::thh_z(f);
  auto page = spec_page(spec, 2, 50);
  GeneratorImages id;
  for (const auto& g : spec.generators()) id[g.name] = gen(spec, g.name);
  AbutmentSpec ab{spec, {}, spec_page(spec, 2, 50), id, {}};
  CHECK(compare_abutment(page, ab, {}, 50).passed);
}

TEST_CASE("ku spectral sequence collapses to the stated E3") {
  for (std::uint32_t p : {3u, 5u}) {
    PrimeField f(p);
    const int cap = static_cast<int>(2 * p * p + 4 * p);
    auto m = models::ku_module(f);
    auto e2 = tor_exterior_module(exterior("du", 3), m.module, models::ku_coefficients(f), cap);
    auto rules = models::du_rules(e2, m);
    auto e3 = run_differential(e2, rules);
    CHECK(shrinks(e2, e3));
    CHECK(verify_rule_family(e2, rules, models::du_family(e2, m, cap + 1)).passed);
    CHECK(compare_abutment(e3, models::ku_abutment(f, m, cap), models::ku_extensions(f), cap).passed);
  }
}
