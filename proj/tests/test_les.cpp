#include "doctest.h"
#include "thhcalc/errors.hpp"
#include "thhcalc/les.hpp"

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

const JointCheck* joint(const ExactnessReport& r, int n, const char* which) {
  for (const auto& j : r.joints)
    if (j.n == n && j.joint == which) return &j;
  return nullptr;
}

Monomial mono(const AlgebraSpec& s, std::initializer_list<std::pair<const char*, int>> xs) {
  Monomial m = s.unit();
  for (const auto& [name, e] : xs) m[s.index_of(name)] = e;
  return m;
}
}  // namespace

TEST_CASE("ell sequence at p = 3, degree 6") {
  PrimeField f(3);
  auto les = ell_sequence(f);
  const auto& b = ambient(les.B);
  const auto& c = ambient(les.C);
  CHECK(les.del(mono(b, {{"kappa1", 1}})) == gen(c, "epsilon1"));
  CHECK(les.del(mono(b, {{"lambda1", 1}, {"dlogv", 1}})) == gen(c, "lambda1"));
  CHECK(les.tau(mono(c, {{"epsilon1", 1}})).is_zero());
  CHECK(les.tau(mono(c, {{"lambda1", 1}})).is_zero());

  auto rep = check_les(les, 30);
  CHECK(rep.passed);
  const auto* j = joint(rep, 6, "B");
  REQUIRE(j != nullptr);
  CHECK(j->dim == 2);
  CHECK(j->rank_in == 0);
  CHECK(j->rank_out == 2);
}

TEST_CASE("ell sequence at p = 3, degree 17") {
  PrimeField f(3);
  auto les = ell_sequence(f);
  const auto& a = ambient(les.A);
  const auto& c = ambient(les.C);
  CHECK(les.tau(mono(c, {{"epsilon1", 1}, {"mu1", 2}})) == gen(a, "lambda2"));
  auto rep = check_les(les, 40);
  CHECK(rep.passed);
  const auto* j = joint(rep, 17, "A");
  REQUIRE(j != nullptr);
  CHECK(j->dim == 1);
  CHECK(j->rank_in == 1);
  CHECK(j->rank_out == 0);
}

TEST_CASE("exactness holds for both choices of the undetermined coefficient") {
  for (std::uint32_t p : {3u, 5u}) {
    PrimeField f(p);
    const int cap = static_cast<int>(2 * p * p + 4 * p);
    CHECK(check_les(ell_sequence(f, 0), cap).passed);
    CHECK(check_les(ell_sequence(f, 1), cap).passed);
    CHECK(check_les(ku_sequence(f, 0), cap).passed);
    CHECK(check_les(ku_sequence(f, 1), cap).passed);
  }
}

TEST_CASE("ku sequence: del' kills u-multiples") {
  PrimeField f(5);
  auto les = ku_sequence(f);
  const auto& b = ambient(les.B);
  CHECK(les.del(mono(b, {{"u", 1}, {"kappa1", 1}})).is_zero());
  CHECK(les.del(mono(b, {{"u", 2}, {"dlogu", 1}})).is_zero());
  CHECK_FALSE(les.del(mono(b, {{"kappa1", 1}})).is_zero());
}

TEST_CASE("a broken connecting map is reported") {
  PrimeField f(3);
  auto les = ell_sequence(f);
  const auto& a = ambient(les.A);
  les.tau = [&a](const Monomial&) { return zero(a); };
  auto rep = check_les(les, 30);
  CHECK_FALSE(rep.passed);
  REQUIRE(rep.first_failure() != nullptr);
  CHECK(rep.first_failure()->n <= 17);
  CHECK(code_of([&] { rep.require(); }) == ErrorCode::InexactAt);
}
