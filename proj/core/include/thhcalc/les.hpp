#pragma once

#include "thhcalc/morphism.hpp"
#include "thhcalc/presentation.hpp"

#include <functional>
#include <string>
#include <vector>

namespace thhcalc {

/// Linear map given on basis monomials of the source ambient algebra.
using LinearMap = std::function<Element(const Monomial&)>;

/// ... -> A_n -rho-> B_n -del-> C_{n-1} -tau-> A_{n-1} -> ...
/// C is stored unshifted; del lowers degree by one.
struct LongExactSpec {
  Carrier A;
  Carrier B;
  Carrier C;
  GeneratorImages rho;
  LinearMap del;
  LinearMap tau;
  /// How A acts on C (through its image in B on the B side).
  GeneratorImages action;
};

struct JointCheck {
  int n = 0;
  std::string joint;  // "A", "B" or "C"
  std::int64_t dim = 0;
  std::int64_t rank_in = 0;
  std::int64_t rank_out = 0;
  bool composition_zero = true;
  bool exact() const noexcept { return composition_zero && rank_in + rank_out == dim; }
};

struct ExactnessReport {
  bool passed = true;
  MorphismReport rho;
  std::vector<JointCheck> joints;
  std::vector<RelationCheck> module_checks;
  const JointCheck* first_failure() const;
  void require() const;  // throws InexactAt
};

/// Checks rho is an algebra map, del and tau are module maps on all basis
/// pairs in range, and the three joints are exact in every degree <= cap.
ExactnessReport check_les(const LongExactSpec& spec, int cap);

/// The sequence for the Adams summand: A = E(l1,l2) (x) P(mu2),
/// B = E(l1, dlogv) (x) P(k1), C = E(e1, l1) (x) P(mu1). `c` is the
/// undetermined coefficient of l1 mu1^{k-1} in del(k1^k).
LongExactSpec ell_sequence(const PrimeField& f, Coeff c = 0);

/// The sequence for ku: A = E(l1) (x) Theta, B = P_{p-1}(u) (x)
/// E(l1, dlogu) (x) P(k1), C as above.
LongExactSpec ku_sequence(const PrimeField& f, Coeff c = 0);

}  // namespace thhcalc
