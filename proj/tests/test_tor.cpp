#include "doctest.h"
#include "thhcalc/errors.hpp"
#include "thhcalc/models.hpp"
#include "thhcalc/tor.hpp"

using namespace thhcalc;

namespace {
BigradedDims restrict_to(const BigradedDims& d, int smax, int tmax) {
  BigradedDims out;
  for (const auto& [b, n] : d)
    if (n != 0 && b.s <= smax && b.t <= tmax) out[b] = n;
  return out;
}
}  // namespace

TEST_CASE("resolution of E(dv) has one generator per filtration") {
  PrimeField f(3);
  auto e = make_algebra(f, {exterior("dv", 5)});
  auto cx = resolution(e, 20);
  for (const auto& [b, gens] : cx.basis) {
    CHECK(gens.size() == 1);
    CHECK(b.t == 5 * b.s);
  }
  CHECK(cx.basis.size() == 4);  // sigma_0 .. sigma_3 below total degree 20
  BigradedDims exact{{{0, 0}, 1}};
  CHECK(window(resolution_homology(cx), 20) == exact);
}

TEST_CASE("resolution of P(v) is a two-term Koszul complex") {
  PrimeField f(3);
  auto cx = resolution(make_algebra(f, {polynomial("v", 4)}), 30);
  std::map<Bidegree, std::size_t> shape;
  for (const auto& [b, gens] : cx.basis) shape[b] = gens.size();
  std::map<Bidegree, std::size_t> expected{{{0, 0}, 1}, {{1, 4}, 1}};
  CHECK(shape == expected);
  CHECK(window(resolution_homology(cx), 30) == BigradedDims{{{0, 0}, 1}});
}

TEST_CASE("resolution edge cases") {
  PrimeField f(3);
  auto cx = resolution(make_algebra(f, {}), 10);
  for (const auto& [b, gens] : cx.basis) CHECK(b.s == 0);
  CHECK_THROWS_AS(resolution(make_algebra(f, {divided("g", 4)}), 10), Error);
}

TEST_CASE("tor oracle small cases") {
  PrimeField f(3);
  auto empty = make_algebra(f, {});
  CHECK(window(tor_oracle(empty, ground_module(), ground_module(), 20), 20) == BigradedDims{{{0, 0}, 1}});

  auto e = make_algebra(f, {exterior("dv", 5)});
  auto t = restrict_to(tor_oracle(e, ground_module(), ground_module(), 24), 3, 100);
  BigradedDims gamma{{{0, 0}, 1}, {{1, 5}, 1}, {{2, 10}, 1}, {{3, 15}, 1}};
  CHECK(t == gamma);
}

TEST_CASE("tor over P(v) (x) E(dv) reproduces the divided-power E2 term") {
  PrimeField f(3);
  auto a = make_algebra(f, {polynomial("v", 4), exterior("dv", 5)});
  auto left = trivial_module(models::thh_ell(f));
  auto oracle = restrict_to(tor_oracle(a, left, ground_module(), 44), 4, 40);
  auto closed = tensor(models::thh_ell(f), make_algebra(f, {exterior("[v]", 4, 1), divided("[dv]", 5, 1)}));
  auto expected = restrict_to(hilbert_bigraded(closed, 44), 4, 40);
  CHECK(oracle == expected);
  CHECK(restrict_to(tor_closed_form(a, left, ground_module(), 44).dims(), 4, 40) == expected);
}

TEST_CASE("tor closed forms for the log middle terms") {
  PrimeField f(3);
  auto e = make_algebra(f, {exterior("dv", 5)});
  auto left = trivial_module(models::thh_ell(f));
  auto right = trivial_module(make_algebra(f, {exterior("dlogv", 1)}));
  auto page = tor_closed_form(e, left, right, 40);
  auto closed = tensor(models::thh_ell(f),
                       make_algebra(f, {exterior("dlogv", 1), divided("[dv]", 5, 1)}));
  CHECK(page.dims() == window(hilbert_bigraded(closed, 40), 40));
  CHECK(window(tor_oracle(e, left, right, 40), 40) == page.dims());

  auto ground = tor_closed_form(make_algebra(f, {}), ground_module(), ground_module(), 10);
  CHECK(ground.dims() == BigradedDims{{{0, 0}, 1}});
}

TEST_CASE("tor_exterior_module examples") {
  PrimeField f(3);
  auto du = exterior("du", 3);
  auto empty = make_algebra(f, {});

  auto single = tor_exterior_module(du, ground_module(), empty, 20);
  for (const auto& [b, n] : single.dims()) {
    CHECK(n == 1);
    CHECK(b.t == 3 * b.s);
  }
  CHECK(single.dims().size() == 6);  // gamma_k with 4k <= 20
}

TEST_CASE("free modules are Tor-acyclic") {
  PrimeField f(5);
  ModuleSpec m;
  m.summands.push_back({"1", 0, {"du"}, std::nullopt});
  m.summands.push_back({"b", 12, {"du"}, std::nullopt});
  auto page = tor_exterior_module(exterior("du", 3), m, make_algebra(f, {}), 30);
  // Each free summand contributes its generator only: M (x)_{E(du)} F_p.
  BigradedDims expected{{{0, 0}, 1}, {{0, 12}, 1}};
  CHECK(page.dims() == expected);
}

TEST_CASE("ku module E2 matches the stated decomposition") {
  for (std::uint32_t p : {3u, 5u}) {
    PrimeField f(p);
    int cap = static_cast<int>(2 * p * p + 4 * p);
    auto m = models::ku_module(f);
    auto page = tor_exterior_module(exterior("du", 3), m.module, models::ku_coefficients(f), cap);
    auto e = make_algebra(f, {exterior("du", 3)});
    auto oracle = window(tor_oracle(e, m.module, ground_module(), cap), cap);
    auto coeff = hilbert_bigraded(models::ku_coefficients(f), cap);
    BigradedDims expected;
    for (const auto& [a, x] : oracle)
      for (const auto& [b, y] : coeff)
        if (a.total() + b.total() <= cap) expected[{a.s + b.s, a.t + b.t}] += x * y;
    CHECK(page.dims() == window(expected, cap));
  }
}
