#include "doctest.h"
#include "thhcalc/errors.hpp"
#include "thhcalc/fp_linalg.hpp"

#include <algorithm>
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
}  // namespace

TEST_CASE("prime field rejects p = 2 and composites") {
  CHECK(code_of([] { PrimeField f(2); }) == ErrorCode::InvalidPrime);
  CHECK(code_of([] { PrimeField f(9); }) == ErrorCode::InvalidPrime);
  PrimeField f(7);
  CHECK(f.mul(f.inv(3), 3) == 1);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.binomial(8, 1) == 1);  // Lucas: 8 = 11_7
}

TEST_CASE("rank examples") {
  CHECK(rank(FpMatrix::identity(2), PrimeField(3)) == 2);
  CHECK(rank(FpMatrix(3, 4), PrimeField(5)) == 0);
  CHECK(rank(FpMatrix(2, 2, {1, 2, 2, 4}), PrimeField(5)) == 1);
}

TEST_CASE("homology_dim examples") {
  PrimeField f(3);
  CHECK(homology_dim(FpMatrix(4, 0), FpMatrix(0, 4), f) == 4);
  CHECK(homology_dim(FpMatrix::identity(2), FpMatrix(0, 2), f) == 0);
  // Koszul complex of P(x) in internal degree |x|: F{[x]} -> F{x}, [x] -> x.
  FpMatrix koszul(1, 1, {1});
  CHECK(homology_dim(FpMatrix(1, 0), koszul, f) == 0);   // filtration 1
  CHECK(homology_dim(koszul, FpMatrix(0, 1), f) == 0);   // filtration 0
  CHECK(homology_dim(FpMatrix(1, 0), FpMatrix(0, 1), f) == 1);  // the [x] spot before d
}

TEST_CASE("homology_dim errors") {
  PrimeField f(5);
  CHECK(code_of([&] { homology_dim(FpMatrix::identity(2), FpMatrix::identity(2), f); }) ==
        ErrorCode::CompositionNonzero);
  CHECK(code_of([&] { homology_dim(FpMatrix(3, 1), FpMatrix(1, 2), f); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("kernel and subspace agree with rank") {
  PrimeField f(5);
  FpMatrix m(2, 3, {1, 2, 3, 2, 4, 1});
  auto ker = kernel_basis(m, f);
  CHECK(ker.size() == 3 - rank(m, f));
  for (const auto& v : ker) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Coeff acc = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m.at(r, c), v[c]));
      CHECK(acc == 0);
    }
  }
  Subspace s(3, f);
  CHECK(s.insert({1, 1, 0}));
  CHECK_FALSE(s.insert({3, 3, 0}));
  CHECK(s.contains({2, 2, 0}));
  CHECK(s.dim() == 1);
}

TEST_CASE("rank bounded and invariant under row permutation") {
  std::mt19937 rng(20240601);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
      std::vector<Coeff> entries(rows * cols);
      for (auto& e : entries) e = rng() % 3 == 0 ? 0 : rng() % p;
      FpMatrix m(rows, cols, entries);
      auto r = rank(m, f);
      CHECK(r <= std::min(rows, cols));
      std::vector<std::size_t> perm(rows);
      for (std::size_t i = 0; i < rows; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      FpMatrix q(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c) q.at(i, c) = m.at(perm[i], c);
      CHECK(rank(q, f) == r);
    }
  }
}
