#pragma once

#include "thhcalc/graded_algebra.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace thhcalc {

/// lhs -> rhs, both in the ambient free graded-commutative algebra.
struct RewriteRule {
  Monomial lhs;
  Element rhs;
  std::string name;
};

/// Quotient of an ambient monomial algebra by degree-homogeneous rewrite
/// rules. Normal forms are the monomials no rule applies to.
class Presentation {
 public:
  Presentation(AlgebraSpec ambient, std::vector<RewriteRule> rules);

  const AlgebraSpec& ambient() const noexcept { return ambient_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  const PrimeField& field() const noexcept { return ambient_.field(); }

  /// Rewrites to the fixed point. `order`, when given, is a permutation of
  /// rule indices that decides which applicable rule fires first.
  Element normal_form(const Element& e, const std::vector<std::size_t>* order = nullptr) const;
  bool is_normal(const Monomial& m) const;
  std::vector<Monomial> basis(int total_degree) const;
  GradedDims hilbert(int cap) const;
  Element multiply(const Element& a, const Element& b) const;

 private:
  AlgebraSpec ambient_;
  std::vector<RewriteRule> rules_;
};

/// Checks homogeneity of every rule (DegreeMismatch otherwise).
Presentation make_presentation(AlgebraSpec ambient, std::vector<RewriteRule> rules);

/// The algebra Theta over P_{p-1}(u) (x) P(mu2) with generators a_0..a_{p-1},
/// b_1..b_{p-1}. Generator order: u, mu2, a_0.., b_1.. .
Presentation make_theta(const PrimeField& field);

/// prefix (x) pres, with the prefix generators placed first.
Presentation tensor(const AlgebraSpec& prefix, const Presentation& pres);

GradedDims hilbert_pres(const Presentation& pres, int cap);

// ---------------------------------------------------------------------------
// Carriers: either a free monomial algebra or a presented one.

using Carrier = std::variant<AlgebraSpec, Presentation>;

const AlgebraSpec& ambient(const Carrier& c);
Element reduce(const Carrier& c, const Element& e);
Element carrier_multiply(const Carrier& c, const Element& a, const Element& b);
std::vector<Monomial> carrier_basis(const Carrier& c, int total_degree);
GradedDims carrier_hilbert(const Carrier& c, int cap);

/// A defining relation: the product of `factors` (generator index, exponent),
/// taken in order in the ambient algebra without reduction, equals `rhs`.
struct Relation {
  std::string name;
  std::vector<std::pair<std::size_t, int>> factors;
  Element rhs;
};

/// Exterior squares, truncations and rewrite rules of the carrier.
std::vector<Relation> relations(const Carrier& c);

/// Formal product of a relation's factors; zero when it leaves the ambient basis.
Element relation_lhs(const AlgebraSpec& spec, const Relation& r);

// ---------------------------------------------------------------------------
// Derivations and morphisms given on generators.

/// Values of a degree +1 derivation on generators; missing names mean zero.
struct DerivationSpec {
  std::map<std::string, Element> values;
};

struct RelationCheck {
  std::string name;
  bool passed = false;
  std::string residual;
};

struct DerivationReport {
  bool passed = true;
  std::vector<RelationCheck> checks;
};

/// Applies the Leibniz-extended derivation to an ambient element (no reduction).
Element apply_derivation(const AlgebraSpec& spec, const DerivationSpec& d, const Element& e);

/// Verifies every relation of the carrier is respected by d. Throws
/// DegreeMismatch when some d(g) is not of degree |g|+1.
DerivationReport check_derivation(const Carrier& carrier, const DerivationSpec& d);

using GeneratorImages = std::map<std::string, Element>;

/// Image of a source ambient element under the algebra map given on
/// generators, reduced in the target. Throws UnknownName when an image is missing.
Element apply_morphism(const AlgebraSpec& source, const Carrier& target, const GeneratorImages& images,
                       const Element& e);

/// f(d_src(g)) == d_tgt(f(g)) for every source generator g.
DerivationReport check_naturality(const Carrier& source, const Carrier& target,
                                  const GeneratorImages& images, const DerivationSpec& d_source,
                                  const DerivationSpec& d_target);

}  // namespace thhcalc
