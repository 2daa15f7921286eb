#pragma once

#include "thhcalc/graded_algebra.hpp"
#include "thhcalc/presentation.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace thhcalc {

struct DifferentialRule;

/// Extra module summand of a page: a generator in bidegree (s, t) tensored
/// with a factor algebra (empty for a single class, Gamma([y]) for a divided
/// power tower, ...). The page spec acts on every summand.
struct PageSummand {
  std::string label;
  int s = 0;
  int t = 0;
  AlgebraSpec factor;
};

/// Basis element spec-monomial * summand-generator * factor-monomial.
struct PageMono {
  Monomial spec;
  std::size_t summand = 0;
  Monomial factor;
  friend auto operator<=>(const PageMono&, const PageMono&) = default;
};

struct PageElement {
  std::map<PageMono, Coeff> terms;
  bool is_zero() const noexcept { return terms.empty(); }
  friend bool operator==(const PageElement&, const PageElement&) = default;
};

/// A page E^r of a multiplicative spectral sequence, kept as a subquotient
/// Z/B of the root page it was started from. The root basis is enumerated up
/// to total degree cap + reserve so differentials leaving degree cap + 1 are
/// seen; results are reported up to cap only.
class Page {
 public:
  static constexpr int kDefaultReserve = 4;

  Page(AlgebraSpec spec, std::vector<PageSummand> summands, int r, int cap, int reserve = kDefaultReserve);

  const AlgebraSpec& spec() const noexcept { return spec_; }
  const std::vector<PageSummand>& summands() const noexcept { return summands_; }
  const PrimeField& field() const noexcept { return spec_.field(); }
  int r() const noexcept { return r_; }
  int cap() const noexcept { return cap_; }
  int window() const noexcept { return cap_ + reserve_; }

  std::size_t summand_index(std::string_view label) const;

  Bidegree bidegree(const PageMono& m) const;
  int total_degree(const PageMono& m) const { return bidegree(m).total(); }

  /// Root basis grouped by bidegree, total degree <= window().
  const std::map<Bidegree, std::vector<PageMono>>& basis() const noexcept { return basis_; }
  Vec coordinates(Bidegree b, const PageElement& e) const;
  PageElement from_coordinates(Bidegree b, const Vec& v) const;

  const Subspace& cycles(Bidegree b) const;
  const Subspace& boundaries(Bidegree b) const;
  /// dim Z/B; zero outside the enumerated window.
  std::int64_t dim(Bidegree b) const;
  /// Nonzero dims with total degree <= cap.
  BigradedDims dims() const;
  GradedDims total_dims() const;

  PageMono mono(const Monomial& spec_mono, std::string_view label = "1", Monomial factor = {}) const;
  PageElement element(const PageMono& m, Coeff c = 1) const;
  /// spec element times page element.
  PageElement act(const Element& s, const PageElement& e) const;
  PageElement add(const PageElement& a, const PageElement& b) const;
  PageElement scale(const PageElement& a, Coeff c) const;

  std::string format(const PageMono& m) const;
  std::string format(const PageElement& e) const;

 private:
  friend Page run_differential(const Page& page, const std::vector<DifferentialRule>& rules);

  struct Layer {
    Subspace cycles;
    Subspace boundaries;
  };

  AlgebraSpec spec_;
  std::vector<PageSummand> summands_;
  int r_;
  int cap_;
  int reserve_;
  std::map<Bidegree, std::vector<PageMono>> basis_;
  std::map<PageMono, std::size_t> position_;
  std::map<Bidegree, Layer> layers_;
};

/// Builds a page with only the unit summand.
Page spec_page(AlgebraSpec spec, int r, int cap, int reserve = Page::kDefaultReserve);

/// Declared value of d^r on an indecomposable: a spec generator (for divided
/// generators the symbol gamma_{p^i}) or a summand basis element.
struct DifferentialRule {
  int page = 2;
  std::string generator;
  int gamma_index = 1;
  Element spec_target;
  std::string label;
  Monomial factor;
  PageElement summand_target;
  Coeff scalar = 1;

  bool on_summand() const noexcept { return generator.empty(); }

  static DifferentialRule on_generator(int r, std::string name, Element target, int gamma_index = 1);
  static DifferentialRule on_summand_element(int r, std::string label, Monomial factor, PageElement target);
};

/// d^r of the rules, Leibniz-extended, applied to a root element. Throws
/// BidegreeViolation / LeibnizConflict for malformed rules.
PageElement apply_differential(const Page& page, const std::vector<DifferentialRule>& rules,
                               const PageElement& e);

/// Turns the page: E^{r+1} = H(E^r, d^r) where r is the rules' page. With no
/// rules the page index just advances. Throws NotADifferential when d does
/// not square to zero or does not preserve cycles and boundaries.
Page run_differential(const Page& page, const std::vector<DifferentialRule>& rules);

struct FamilyEntry {
  PageMono source;
  PageElement expected;
};

struct FamilyResult {
  std::string source;
  std::string expected;
  std::string actual;
  Coeff scalar = 0;
  bool passed = false;
};

struct FamilyReport {
  bool passed = true;
  std::vector<FamilyResult> entries;
  void require() const;  // throws FamilyViolation
};

/// Checks d(source) = c * expected with c nonzero (or both zero) for each entry.
FamilyReport verify_rule_family(const Page& page, const std::vector<DifferentialRule>& rules,
                                const std::vector<FamilyEntry>& entries);

/// Names a claimed E-infinity class: spec exponents, a summand label and
/// factor exponents, all by generator name.
struct ClaimRef {
  std::vector<std::pair<std::string, int>> spec;
  std::string label = "1";
  std::vector<std::pair<std::string, int>> factor;
};

/// prod factors^e == unit * result in the abutment, with a filtration jump.
struct ExtensionRule {
  std::string name;
  std::vector<std::pair<ClaimRef, int>> factors;
  ClaimRef result;
  Coeff unit = 1;
};

struct AbutmentSpec {
  AlgebraSpec target;
  std::map<std::string, int> filtration_assignment;
  /// Claimed E-infinity page; generator names and labels match the root page.
  Page claimed;
  GeneratorImages generator_images;
  /// Images of (label, claimed factor monomial); missing entries of the unit
  /// summand default to 1.
  std::map<std::pair<std::string, Monomial>, Element> summand_images;
};

struct DegreeRow {
  int n = 0;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
};

struct AbutmentReport {
  bool passed = true;
  std::vector<DegreeRow> degrees;
  std::optional<int> first_mismatch;
  std::vector<RelationCheck> checks;
  /// Bidegree pairs in the window where a later differential could still be nonzero.
  int possible_differentials = 0;
  void require() const;  // throws DimMismatch
};

AbutmentReport compare_abutment(const Page& einfty, const AbutmentSpec& abutment,
                                const std::vector<ExtensionRule>& extensions, int cap);

}  // namespace thhcalc
