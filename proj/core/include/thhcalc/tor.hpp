#pragma once

#include "thhcalc/fp_linalg.hpp"
#include "thhcalc/graded_algebra.hpp"
#include "thhcalc/spectral_sequence.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace thhcalc {

/// One summand F[S] (x) V{shift} of a module over a monomial algebra A.
/// Generators of A named in `free_over` act freely through F[S]; all others
/// act by zero. `space` is a graded vector space with trivial action (F_p
/// when absent). A coefficient-factor name in `free_over` marks that factor
/// as acting freely.
struct ModuleSummand {
  std::string label;
  int shift = 0;
  std::vector<std::string> free_over;
  std::optional<AlgebraSpec> space;
};

struct ModuleSpec {
  std::vector<ModuleSummand> summands;
};

/// The ground field with trivial action.
ModuleSpec ground_module();
/// A vector space with trivial action.
ModuleSpec trivial_module(const AlgebraSpec& space);
/// F[names] (x) space, free over the named generators.
ModuleSpec free_module(std::vector<std::string> names, std::optional<AlgebraSpec> space = std::nullopt);

/// Koszul-type resolution of F_p over A: generators [x] (exterior, bidegree
/// (1,|x|)) per polynomial x and gamma_k[y] (divided, (k, k|y|)) per exterior y.
struct ChainComplexOfFrees {
  AlgebraSpec algebra;
  AlgebraSpec generators;
  int cap = 0;
  /// Free generators per (filtration, internal degree).
  std::map<Bidegree, std::vector<Monomial>> basis;
  /// Dimension of A (x) generators in each (s, t), and d: (s,t) -> (s-1,t)
  /// as F_p matrices.
  std::map<Bidegree, std::size_t> dims;
  std::map<Bidegree, FpMatrix> differential;
};

/// Throws UnsupportedKind unless A has only polynomial and exterior
/// generators in filtration 0. d o d = 0 is checked (CompositionNonzero).
ChainComplexOfFrees resolution(const AlgebraSpec& algebra, int cap);

/// Homology of the resolution itself; F_p in (0,0) when exact.
BigradedDims resolution_homology(const ChainComplexOfFrees& cx);

/// Spec of the resolution generators over A restricted to `names`.
AlgebraSpec koszul_generators(const AlgebraSpec& algebra, const std::vector<std::string>& names);

/// Bigraded dims of Tor^A(left, right) with s + t <= cap, by resolving the
/// right module (or the left one when resolve_left is set).
BigradedDims tor_oracle(const AlgebraSpec& algebra, const ModuleSpec& left, const ModuleSpec& right, int cap,
                        bool resolve_left = false);

/// Closed form via Kunneth and change of rings for single-summand modules.
/// Throws UnsupportedShape otherwise.
Page tor_closed_form(const AlgebraSpec& algebra, const ModuleSpec& left, const ModuleSpec& right, int cap);

/// Tor over E(y) of a module of free and trivial summands, tensored with
/// `coeff`. Free summands sit in filtration 0; each trivial summand carries a
/// Gamma([y]) tower.
Page tor_exterior_module(const GeneratorSpec& y, const ModuleSpec& module, const AlgebraSpec& coeff, int cap);

/// Restricts bigraded dims to s + t <= cap and drops zeros.
BigradedDims window(const BigradedDims& dims, int cap);

}  // namespace thhcalc
