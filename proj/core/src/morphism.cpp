#include "thhcalc/morphism.hpp"

#include "thhcalc/errors.hpp"

#include <algorithm>

namespace thhcalc {

Vec coordinates(const std::vector<Monomial>& basis, const Element& e) {
  Vec v(basis.size(), 0);
  for (const auto& [m, c] : e.terms) {
    auto it = std::find(basis.begin(), basis.end(), m);
    if (it == basis.end()) throw Error(ErrorCode::DegreeMismatch, "element leaves the expected basis");
    v[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return v;
}

FpMatrix matrix_of(const PrimeField& f, const std::vector<Monomial>& target_basis,
                   const std::vector<Element>& columns) {
  (void)f;
  FpMatrix m(target_basis.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const Vec v = coordinates(target_basis, columns[c]);
    for (std::size_t r = 0; r < v.size(); ++r) m.at(r, c) = v[r];
  }
  return m;
}

bool MorphismReport::iso_everywhere() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeRank& d) { return d.iso(); });
}

bool MorphismReport::injective_everywhere() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeRank& d) { return d.injective(); });
}

const DegreeRank* MorphismReport::at(int n) const {
  for (const auto& d : degrees)
    if (d.n == n) return &d;
  return nullptr;
}

MorphismReport check_morphism(const Carrier& source, const Carrier& target, const GeneratorImages& images,
                              int cap) {
  const AlgebraSpec& src = ambient(source);
  const AlgebraSpec& tgt = ambient(target);
  for (const auto& g : src.generators()) {
    auto it = images.find(g.name);
    if (it == images.end()) throw Error(ErrorCode::UnknownName, "no image given for '" + g.name + "'");
    if (it->second.spec_id != tgt.id()) throw Error(ErrorCode::MixedSpec, "image of '" + g.name + "'");
    const auto deg = homogeneous_degree(tgt, it->second);
    if (deg && *deg != g.total_degree())
      throw Error(ErrorCode::DegreeMismatch, "image of '" + g.name + "' has degree " + std::to_string(*deg));
  }

  MorphismReport report;
  for (const auto& rel : relations(source)) {
    Element lhs = one(tgt);
    for (const auto& [i, e] : rel.factors)
      for (int k = 0; k < e; ++k) lhs = carrier_multiply(target, lhs, images.at(src.generator(i).name));
    const Element residual = subtract(tgt, lhs, apply_morphism(src, target, images, rel.rhs));
    RelationCheck check{rel.name, residual.is_zero(), format_element(tgt, residual)};
    report.relations_ok = report.relations_ok && check.passed;
    report.relations.push_back(std::move(check));
  }

  const auto& f = src.field();
  for (int n = 0; n <= cap; ++n) {
    const auto src_basis = carrier_basis(source, n);
    const auto tgt_basis = carrier_basis(target, n);
    std::vector<Element> columns;
    columns.reserve(src_basis.size());
    for (const auto& m : src_basis) columns.push_back(apply_morphism(src, target, images, monomial(src, m)));
    const FpMatrix mat = matrix_of(f, tgt_basis, columns);
    report.degrees.push_back({n, static_cast<std::int64_t>(src_basis.size()),
                              static_cast<std::int64_t>(tgt_basis.size()),
                              static_cast<std::int64_t>(rank(mat, f))});
  }
  return report;
}

}  // namespace thhcalc
