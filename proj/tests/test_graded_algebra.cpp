#include "doctest.h"
#include "thhcalc/errors.hpp"
#include "thhcalc/models.hpp"
#include "thhcalc/morphism.hpp"

using namespace thhcalc;

namespace {
GradedDims prefix(std::initializer_list<std::int64_t> xs) {
  GradedDims g(static_cast<int>(xs.size()) - 1);
  int i = 0;
  for (auto x : xs) g.at(i++) = x;
  return g;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}
}  // namespace

TEST_CASE("make_algebra validation") {
  PrimeField f3(3);
  CHECK_NOTHROW(make_algebra(f3, {exterior("lambda1", 5), polynomial("mu2", 18)}));
  CHECK(code_of([&] { make_algebra(f3, {polynomial("w", 3)}); }) == ErrorCode::ParityViolation);
  CHECK(code_of([&] { make_algebra(f3, {exterior("x", 1), exterior("x", 3)}); }) ==
        ErrorCode::DuplicateName);
  auto pu = make_algebra(PrimeField(5), {truncated("u", 2, 4)});
  CHECK(hilbert(pu, 10) == prefix({1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0}));
}

TEST_CASE("products carry Koszul signs") {
  PrimeField f(3);
  auto a = make_algebra(f, {exterior("lambda1", 5), exterior("dlogv", 1), divided("dv", 5, 1)});
  CHECK(multiply(a, gen(a, "lambda1"), gen(a, "lambda1")).is_zero());
  auto lhs = multiply(a, gen(a, "dlogv"), gen(a, "lambda1"));
  auto rhs = multiply(a, gen(a, "lambda1"), gen(a, "dlogv"));
  CHECK(lhs == scale(a, rhs, f.neg(1)));
  CHECK(multiply(a, gen(a, "dv", 1), gen(a, "dv", 2)).is_zero());
  CHECK(multiply(a, gen(a, "dv", 3), gen(a, "dv", 3)) == scale(a, gen(a, "dv", 6), 2));
}

TEST_CASE("multiply rejects elements of another spec") {
  PrimeField f(3);
  auto a = make_algebra(f, {exterior("x", 1)});
  auto b = make_algebra(f, {exterior("x", 1), exterior("y", 3)});
  CHECK(code_of([&] { multiply(a, gen(a, "x"), gen(b, "x")); }) == ErrorCode::MixedSpec);
}

TEST_CASE("hilbert examples") {
  PrimeField f(3);
  CHECK(hilbert(models::thh_ell_log(f), 7) == prefix({1, 1, 0, 0, 0, 1, 2, 1}));
  CHECK(hilbert(make_algebra(f, {}), 5) == prefix({1, 0, 0, 0, 0, 0}));
  CHECK(hilbert(models::thh_z(f), 6) == prefix({1, 0, 0, 0, 0, 2, 1}));
}

TEST_CASE("tensor products") {
  PrimeField f(3);
  auto e = make_algebra(f, {exterior("lambda1", 5)});
  auto p = make_algebra(f, {polynomial("mu2", 18)});
  CHECK(hilbert(tensor(e, make_algebra(f, {})), 40) == hilbert(e, 40));
  CHECK(hilbert(tensor(e, p), 60) == convolve(hilbert(e, 60), hilbert(p, 60)));
  CHECK(code_of([&] { tensor(e, e); }) == ErrorCode::DuplicateName);

  auto left = tensor(tensor(e, p), make_algebra(f, {exterior("[v]", 4, 1), truncated("[dv]", 5, 3, 1)}));
  auto right = make_algebra(f, {exterior("lambda1", 5), exterior("[v]", 4, 1), polynomial("[dv]", 5, 1)});
  CHECK(hilbert(left, 60) == hilbert(right, 60));
}

TEST_CASE("check_morphism examples") {
  PrimeField f(3);
  auto src = make_algebra(f, {truncated("u", 2, 2), exterior("lambda1", 5), exterior("dlogv", 1),
                              polynomial("kappa1", 6)});
  auto tgt = models::thh_ku_log(f);
  GeneratorImages iso{{"u", gen(tgt, "u")},
                      {"lambda1", gen(tgt, "lambda1")},
                      {"dlogv", scale(tgt, gen(tgt, "dlogu"), f.neg(1))},
                      {"kappa1", gen(tgt, "kappa1")}};
  auto rep = check_morphism(src, tgt, iso, 60);
  CHECK(rep.relations_ok);
  CHECK(rep.iso_everywhere());

  GeneratorImages id;
  for (const auto& g : tgt.generators()) id[g.name] = gen(tgt, g.name);
  CHECK(check_morphism(tgt, tgt, id, 40).iso_everywhere());

  auto pv = make_algebra(f, {polynomial("v", 4), exterior("dlogv", 1)});
  auto ell_log = models::thh_ell_log(f);
  auto alpha = check_morphism(pv, ell_log, {{"v", zero(ell_log)}, {"dlogv", gen(ell_log, "dlogv")}}, 20);
  CHECK(alpha.relations_ok);
  REQUIRE(alpha.at(6) != nullptr);
  CHECK(alpha.at(6)->target_dim == 2);
  CHECK(alpha.at(6)->rank == 0);
  CHECK_FALSE(alpha.at(6)->surjective());

  CHECK(code_of([&] { check_morphism(pv, ell_log, {{"v", gen(ell_log, "dlogv")}, {"dlogv", gen(ell_log, "dlogv")}}, 10); }) ==
        ErrorCode::DegreeMismatch);
}

TEST_CASE("rebase reorders with signs") {
  PrimeField f(5);
  auto a = make_algebra(f, {exterior("x", 1), exterior("y", 3)});
  auto b = make_algebra(f, {exterior("y", 3), exterior("x", 1)});
  auto xy = multiply(a, gen(a, "x"), gen(a, "y"));
  auto yx = multiply(b, gen(b, "y"), gen(b, "x"));
  CHECK(rebase(a, b, xy) == scale(b, yx, f.neg(1)));
}
