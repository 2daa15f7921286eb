#pragma once

#include "thhcalc/presentation.hpp"

#include <cstdint>
#include <vector>

namespace thhcalc {

/// Coordinates of e in the given monomial basis. Throws DegreeMismatch when e
/// has a term outside the basis.
Vec coordinates(const std::vector<Monomial>& basis, const Element& e);

/// Matrix whose columns are the coordinates of `columns` in `target_basis`.
FpMatrix matrix_of(const PrimeField& f, const std::vector<Monomial>& target_basis,
                   const std::vector<Element>& columns);

struct DegreeRank {
  int n = 0;
  std::int64_t source_dim = 0;
  std::int64_t target_dim = 0;
  std::int64_t rank = 0;
  bool iso() const noexcept { return rank == source_dim && rank == target_dim; }
  bool injective() const noexcept { return rank == source_dim; }
  bool surjective() const noexcept { return rank == target_dim; }
};

struct MorphismReport {
  bool relations_ok = true;
  std::vector<RelationCheck> relations;
  std::vector<DegreeRank> degrees;

  bool iso_everywhere() const;
  bool injective_everywhere() const;
  const DegreeRank* at(int n) const;
};

/// Checks that generator images define an algebra map source -> target and
/// records the rank of the induced map in every degree <= cap. Throws
/// DegreeMismatch for an image of the wrong or mixed degree.
MorphismReport check_morphism(const Carrier& source, const Carrier& target, const GeneratorImages& images,
                              int cap);

}  // namespace thhcalc
