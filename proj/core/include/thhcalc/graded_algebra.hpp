#pragma once

#include "thhcalc/fp_linalg.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thhcalc {

enum class GeneratorKind { Exterior, Polynomial, Truncated, Divided };

std::string_view to_string(GeneratorKind kind) noexcept;
GeneratorKind generator_kind_from_string(std::string_view name);

/// One algebra generator. `degree` is the internal degree, `filtration` the
/// homological degree on a spectral sequence page; signs use their sum.
struct GeneratorSpec {
  std::string name;
  int degree = 0;
  int filtration = 0;
  GeneratorKind kind = GeneratorKind::Polynomial;
  int height = 0;  // truncated generators: x^height = 0

  int total_degree() const noexcept { return degree + filtration; }
  bool odd() const noexcept { return (total_degree() & 1) != 0; }

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

GeneratorSpec exterior(std::string name, int degree, int filtration = 0);
GeneratorSpec polynomial(std::string name, int degree, int filtration = 0);
GeneratorSpec truncated(std::string name, int degree, int height, int filtration = 0);
GeneratorSpec divided(std::string name, int degree, int filtration = 0);

/// C_*-style coefficient factor. Both modes contribute a copy of F_p in degree
/// zero; a symbolic factor is also cancelled by change-of-rings.
enum class CoefficientMode { Trivial, Symbolic };

struct CoefficientFactor {
  std::string name;
  CoefficientMode mode = CoefficientMode::Trivial;
  int connectivity = 0;

  friend bool operator==(const CoefficientFactor&, const CoefficientFactor&) = default;
};

/// Exponent vector over the generators of a spec. For divided generators the
/// entry k stands for the basis symbol gamma_k.
using Monomial = std::vector<int>;

struct Bidegree {
  int s = 0;
  int t = 0;
  int total() const noexcept { return s + t; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// F_p-linear combination of normal-form monomials; never stores zeros.
struct Element {
  std::uint64_t spec_id = 0;
  std::map<Monomial, Coeff> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  friend bool operator==(const Element&, const Element&) = default;
};

/// Per-degree dimensions dims[0..cap].
struct GradedDims {
  int cap = 0;
  std::vector<std::int64_t> dims;

  GradedDims() = default;
  explicit GradedDims(int cap_) : cap(cap_), dims(static_cast<std::size_t>(cap_) + 1, 0) {}

  std::int64_t operator[](int n) const { return n < 0 || n > cap ? 0 : dims[static_cast<std::size_t>(n)]; }
  std::int64_t& at(int n) { return dims.at(static_cast<std::size_t>(n)); }

  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

GradedDims convolve(const GradedDims& a, const GradedDims& b);
GradedDims shifted(const GradedDims& a, int shift);
GradedDims operator+(const GradedDims& a, const GradedDims& b);
GradedDims operator-(const GradedDims& a, const GradedDims& b);

using BigradedDims = std::map<Bidegree, std::int64_t>;

/// Monomial-basis graded-commutative algebra over F_p.
class AlgebraSpec {
 public:
  AlgebraSpec(PrimeField field, std::vector<GeneratorSpec> generators,
              std::vector<CoefficientFactor> coefficients = {});

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<GeneratorSpec>& generators() const noexcept { return generators_; }
  const std::vector<CoefficientFactor>& coefficients() const noexcept { return coefficients_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const GeneratorSpec& generator(std::size_t i) const { return generators_.at(i); }
  std::uint64_t id() const noexcept { return id_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws UnknownName

  /// Largest admissible exponent, or nullopt when unbounded.
  std::optional<int> max_exponent(std::size_t i) const;

  int total_degree(const Monomial& m) const;
  Bidegree bidegree(const Monomial& m) const;

  /// Normal-form monomials of the given total degree.
  std::vector<Monomial> basis(int total_degree) const;
  /// Every normal-form monomial with total degree <= cap, grouped by bidegree.
  std::map<Bidegree, std::vector<Monomial>> bigraded_basis(int cap) const;

  Monomial unit() const { return Monomial(generators_.size(), 0); }

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) { return a.id_ == b.id_; }

 private:
  PrimeField field_;
  std::vector<GeneratorSpec> generators_;
  std::vector<CoefficientFactor> coefficients_;
  std::uint64_t id_ = 0;
};

/// Validates parity and naming, throwing ParityViolation / DuplicateName /
/// InvalidGenerator.
AlgebraSpec make_algebra(const PrimeField& field, std::vector<GeneratorSpec> generators,
                         std::vector<CoefficientFactor> coefficients = {});

AlgebraSpec tensor(const AlgebraSpec& a, const AlgebraSpec& b);

// Element construction and arithmetic.
Element zero(const AlgebraSpec& spec);
Element one(const AlgebraSpec& spec);
Element monomial(const AlgebraSpec& spec, Monomial m, Coeff c = 1);
/// Generator by name; `power` is an exponent (a gamma index for divided generators).
Element gen(const AlgebraSpec& spec, std::string_view name, int power = 1);
/// Monomial from name/exponent pairs, multiplied out left to right (signs included).
Element product_of(const AlgebraSpec& spec, const std::vector<std::pair<std::string, int>>& factors);

Element add(const AlgebraSpec& spec, const Element& a, const Element& b);
Element subtract(const AlgebraSpec& spec, const Element& a, const Element& b);
Element scale(const AlgebraSpec& spec, const Element& a, Coeff c);
Element multiply(const AlgebraSpec& spec, const Element& a, const Element& b);
Element power(const AlgebraSpec& spec, const Element& a, int exponent);

/// Product of two normal-form monomials: nullopt when it vanishes, otherwise
/// the normal form with its nonzero coefficient.
std::optional<std::pair<Monomial, Coeff>> multiply_monomials(const AlgebraSpec& spec,
                                                             const Monomial& a, const Monomial& b);

/// All terms share one total degree (zero counts as homogeneous of any degree).
std::optional<int> homogeneous_degree(const AlgebraSpec& spec, const Element& e);

/// Maps an element between specs by generator name, reordering factors with
/// the correct signs.
Element rebase(const AlgebraSpec& from, const AlgebraSpec& to, const Element& e);

GradedDims hilbert(const AlgebraSpec& spec, int cap);
BigradedDims hilbert_bigraded(const AlgebraSpec& spec, int cap);
GradedDims total_dims(const BigradedDims& dims, int cap);

std::string format_monomial(const AlgebraSpec& spec, const Monomial& m);
std::string format_element(const AlgebraSpec& spec, const Element& e);

// Homology algebras of the cyclic and replete bar constructions on a free
// degree-d generator x. `coefficient` is the C_* factor.
AlgebraSpec cyclic_bar_homology(const PrimeField& f, const std::string& x, int degree,
                                CoefficientMode coefficient = CoefficientMode::Trivial);
AlgebraSpec replete_bar_homology(const PrimeField& f, const std::string& x, int degree,
                                 CoefficientMode coefficient = CoefficientMode::Trivial);
AlgebraSpec group_completion_homology(const PrimeField& f, const std::string& x,
                                      CoefficientMode coefficient = CoefficientMode::Trivial);

}  // namespace thhcalc
