#pragma once

#include "thhcalc/les.hpp"
#include "thhcalc/presentation.hpp"
#include "thhcalc/spectral_sequence.hpp"
#include "thhcalc/tor.hpp"

#include <string>
#include <vector>

namespace thhcalc::models {

// Homotopy and homology algebras with their standard degrees at the prime p.
AlgebraSpec thh_ell(const PrimeField& f);            // E(lambda1, lambda2) (x) P(mu2)
AlgebraSpec thh_z(const PrimeField& f);              // E(epsilon1, lambda1) (x) P(mu1)
AlgebraSpec thh_ell_log(const PrimeField& f);        // E(lambda1, dlogv) (x) P(kappa1)
AlgebraSpec thh_ku_log(const PrimeField& f);         // P_{p-1}(u) (x) E(lambda1, dlogu) (x) P(kappa1)
Presentation thh_ku(const PrimeField& f);            // E(lambda1) (x) Theta
AlgebraSpec cyclic_v(const PrimeField& f);           // P(v) (x) E(dv) (x) C

/// d^p(gamma_{p^i}[dv]) = lambda2 * gamma_{p^i - p}[dv] on every tower generator in the window.
std::vector<DifferentialRule> dv_rules(const Page& page);

/// gamma_k[dv] -> lambda2 gamma_{k-p}[dv] (zero for k < p) for 1 <= k <= kmax.
std::vector<FamilyEntry> dv_family(const Page& page, int kmax);

/// Spec-only page with E(lambda1) (x) P(mu2) (x) extra (x) P_p([dv]) named to
/// match a Tor page, where `extra` lists additional generators.
Page dv_einfty(const PrimeField& f, const std::vector<GeneratorSpec>& extra, int cap);

// The E(du)-module structure on E(lambda1) (x) Theta in low degrees, and the
// spectral sequence it feeds.

/// Canonical label of u^i b_j with b_0 = u.
std::string theta_label(const PrimeField& f, int i, int j);
int theta_degree(const PrimeField& f, int i, int j);

struct KuModule {
  ModuleSpec module;                   // single-class summands, free or trivial over E(du)
  std::vector<std::string> free_labels;
  std::vector<std::string> tower_labels;   // u^{p-3} b_{j-1}, j = 1..p-1
  std::vector<std::string> target_labels;  // a_j, j = 1..p-1
};

/// The module as stated; with `alternative` the hypothetical structure in
/// which du * z = 0.
KuModule ku_module(const PrimeField& f, bool alternative = false);

/// d^2(gamma_k[du] * u^{p-3} b_{j-1}) = gamma_{k-2}[du] * a_j, for sources
/// of internal degree below `limit` (no limit when negative).
std::vector<DifferentialRule> du_rules(const Page& page, const KuModule& m, int limit = -1);

/// Expected d^2 on s * gamma_k[du] * u^{p-3} b_{j-1} for s in {1, lambda1,
/// dlogu, lambda1 dlogu, mu2}, total degree <= maxdeg.
std::vector<FamilyEntry> du_family(const Page& page, const KuModule& m, int maxdeg);

AlgebraSpec ku_coefficients(const PrimeField& f);  // E(lambda1, dlogu) (x) P(mu2)

/// Claimed E^3 = E^infinity page and abutment data for the ku spectral sequence.
AbutmentSpec ku_abutment(const PrimeField& f, const KuModule& m, int cap);
std::vector<ExtensionRule> ku_extensions(const PrimeField& f);

}  // namespace thhcalc::models
