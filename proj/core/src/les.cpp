#include "thhcalc/les.hpp"

#include "thhcalc/errors.hpp"

namespace thhcalc {

const JointCheck* ExactnessReport::first_failure() const {
  for (const auto& j : joints)
    if (!j.exact()) return &j;
  return nullptr;
}

void ExactnessReport::require() const {
  if (const auto* j = first_failure())
    throw Error(ErrorCode::InexactAt, "joint " + j->joint + " in degree " + std::to_string(j->n) + ": dim " +
                                          std::to_string(j->dim) + ", rank in " + std::to_string(j->rank_in) +
                                          ", rank out " + std::to_string(j->rank_out) +
                                          (j->composition_zero ? "" : ", composite nonzero"));
  if (!rho.relations_ok) throw Error(ErrorCode::InexactAt, "rho is not an algebra map");
  for (const auto& m : module_checks)
    if (!m.passed) throw Error(ErrorCode::InexactAt, m.name + " fails: " + m.residual);
}

namespace {

Element apply_linear(const Carrier& source, const Carrier& target, const LinearMap& map, const Element& e) {
  const AlgebraSpec& tgt = ambient(target);
  Element out = zero(tgt);
  for (const auto& [m, c] : e.terms) out = add(tgt, out, scale(tgt, map(m), c));
  (void)source;
  return reduce(target, out);
}

FpMatrix linear_matrix(const Carrier& source, const Carrier& target, const LinearMap& map, int source_degree,
                       int target_degree) {
  const auto& src = ambient(source);
  std::vector<Element> cols;
  for (const auto& m : carrier_basis(source, source_degree))
    cols.push_back(apply_linear(source, target, map, monomial(src, m)));
  return matrix_of(src.field(), carrier_basis(target, target_degree), cols);
}

JointCheck joint(int n, std::string name, const FpMatrix& in, const FpMatrix& out, std::int64_t dim,
                 const PrimeField& f) {
  JointCheck j;
  j.n = n;
  j.joint = std::move(name);
  j.dim = dim;
  j.rank_in = static_cast<std::int64_t>(rank(in, f));
  j.rank_out = static_cast<std::int64_t>(rank(out, f));
  j.composition_zero = in.cols() == 0 || out.rows() == 0 || multiply(out, in, f).is_zero();
  return j;
}

}  // namespace

ExactnessReport check_les(const LongExactSpec& spec, int cap) {
  ExactnessReport report;
  const AlgebraSpec& a_spec = ambient(spec.A);
  const auto& f = a_spec.field();
  report.rho = check_morphism(spec.A, spec.B, spec.rho, cap);
  report.passed = report.rho.relations_ok;

  const LinearMap rho_map = [&](const Monomial& m) {
    return apply_morphism(a_spec, spec.B, spec.rho, monomial(a_spec, m));
  };
  std::vector<FpMatrix> rho_n, del_n, tau_n;
  for (int n = 0; n <= cap; ++n) {
    rho_n.push_back(linear_matrix(spec.A, spec.B, rho_map, n, n));
    del_n.push_back(linear_matrix(spec.B, spec.C, spec.del, n, n - 1));
    tau_n.push_back(linear_matrix(spec.C, spec.A, spec.tau, n, n));
  }
  for (int n = 0; n <= cap; ++n) {
    const auto dim = [&](const Carrier& c, int d) {
      return static_cast<std::int64_t>(carrier_basis(c, d).size());
    };
    report.joints.push_back(joint(n, "A", tau_n[n], rho_n[n], dim(spec.A, n), f));
    report.joints.push_back(joint(n, "B", rho_n[n], del_n[n], dim(spec.B, n), f));
    if (n >= 1) report.joints.push_back(joint(n - 1, "C", del_n[n], tau_n[n - 1], dim(spec.C, n - 1), f));
  }
  for (const auto& j : report.joints) report.passed = report.passed && j.exact();

  if (!spec.action.empty()) {
    const AlgebraSpec& b_spec = ambient(spec.B);
    const AlgebraSpec& c_spec = ambient(spec.C);
    for (const auto& g : a_spec.generators()) {
      const int dg = g.total_degree();
      const Element ga = gen(a_spec, g.name);
      const Element rho_g = apply_morphism(a_spec, spec.B, spec.rho, ga);
      const Element phi_g = apply_morphism(a_spec, spec.C, spec.action, ga);
      RelationCheck del_check{"del(" + g.name + " * y)", true, ""};
      RelationCheck tau_check{"tau(" + g.name + " * z)", true, ""};
      for (int n = 0; n + dg <= cap; ++n) {
        for (const auto& m : carrier_basis(spec.B, n)) {
          const Element lhs = apply_linear(spec.B, spec.C, spec.del, carrier_multiply(spec.B, rho_g, monomial(b_spec, m)));
          const Element rhs = carrier_multiply(spec.C, phi_g, apply_linear(spec.B, spec.C, spec.del, monomial(b_spec, m)));
          if (!(lhs == rhs) && del_check.passed) {
            del_check.passed = false;
            del_check.residual = "y = " + format_monomial(b_spec, m) + ": " + format_element(c_spec, lhs) + " vs " +
                                 format_element(c_spec, rhs);
          }
        }
        for (const auto& m : carrier_basis(spec.C, n)) {
          const Element lhs = apply_linear(spec.C, spec.A, spec.tau, carrier_multiply(spec.C, phi_g, monomial(c_spec, m)));
          const Element rhs = carrier_multiply(spec.A, ga, apply_linear(spec.C, spec.A, spec.tau, monomial(c_spec, m)));
          if (!(lhs == rhs) && tau_check.passed) {
            tau_check.passed = false;
            tau_check.residual = "z = " + format_monomial(c_spec, m) + ": " + format_element(a_spec, lhs) + " vs " +
                                 format_element(a_spec, rhs);
          }
        }
      }
      report.passed = report.passed && del_check.passed && tau_check.passed;
      report.module_checks.push_back(std::move(del_check));
      report.module_checks.push_back(std::move(tau_check));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

AlgebraSpec thh_z(const PrimeField& f) {
  const int p = static_cast<int>(f.p());
  return make_algebra(f, {exterior("epsilon1", 2 * p - 1), exterior("lambda1", 2 * p - 1), polynomial("mu1", 2 * p)});
}

/// del on E(dlog) (x) P(k1), extended over lambda1 from the left.
Element ell_del(const AlgebraSpec& b, const AlgebraSpec& c, const Monomial& m, const std::string& dlog, Coeff sign_dlog,
                Coeff coeff) {
  const int p = static_cast<int>(c.field().p());
  const int f = m[b.index_of("lambda1")];
  const int e = m[b.index_of(dlog)];
  const int k = m[b.index_of("kappa1")];
  Element y = zero(c);
  if (e == 1) {
    y = scale(c, gen(c, "mu1", k), sign_dlog);
  } else if (k >= 1 && k % p != 0) {
    y = add(c, multiply(c, gen(c, "epsilon1"), gen(c, "mu1", k - 1)),
            scale(c, multiply(c, gen(c, "lambda1"), gen(c, "mu1", k - 1)), coeff));
  }
  return multiply(c, gen(c, "lambda1", f), y);
}

/// tau(e1 l1^f mu1^{p-1+pm}) = (-1)^f l1^f * kernel_class * mu2^m, zero elsewhere.
Element ell_tau(const AlgebraSpec& c, const AlgebraSpec& a, const Monomial& m, const Element& kernel_class) {
  const int p = static_cast<int>(c.field().p());
  const int e = m[c.index_of("epsilon1")];
  const int f = m[c.index_of("lambda1")];
  const int k = m[c.index_of("mu1")];
  if (e != 1 || k < p - 1 || (k - (p - 1)) % p != 0) return zero(a);
  const int mm = (k - (p - 1)) / p;
  Element out = multiply(a, multiply(a, gen(a, "lambda1", f), kernel_class), gen(a, "mu2", mm));
  return f % 2 ? scale(a, out, a.field().neg(1)) : out;
}

}  // namespace

LongExactSpec ell_sequence(const PrimeField& f, Coeff c) {
  const int p = static_cast<int>(f.p());
  const AlgebraSpec a = make_algebra(
      f, {exterior("lambda1", 2 * p - 1), exterior("lambda2", 2 * p * p - 1), polynomial("mu2", 2 * p * p)});
  const AlgebraSpec b = make_algebra(f, {exterior("lambda1", 2 * p - 1), exterior("dlogv", 1), polynomial("kappa1", 2 * p)});
  const AlgebraSpec cc = thh_z(f);
  LongExactSpec spec{a, b, cc, {}, {}, {}, {}};
  spec.rho = {{"lambda1", gen(b, "lambda1")}, {"lambda2", zero(b)}, {"mu2", gen(b, "kappa1", p)}};
  spec.action = {{"lambda1", gen(cc, "lambda1")}, {"lambda2", zero(cc)}, {"mu2", gen(cc, "mu1", p)}};
  spec.del = [b, cc, c](const Monomial& m) { return ell_del(b, cc, m, "dlogv", 1, c); };
  const Element lambda2 = gen(a, "lambda2");
  spec.tau = [a, cc, lambda2](const Monomial& m) { return ell_tau(cc, a, m, lambda2); };
  return spec;
}

LongExactSpec ku_sequence(const PrimeField& f, Coeff c) {
  const int p = static_cast<int>(f.p());
  const Presentation a = tensor(make_algebra(f, {exterior("lambda1", 2 * p - 1)}), make_theta(f));
  const AlgebraSpec& amb = a.ambient();
  const AlgebraSpec b = make_algebra(f, {truncated("u", 2, p - 1), exterior("lambda1", 2 * p - 1), exterior("dlogu", 1),
                                         polynomial("kappa1", 2 * p)});
  const AlgebraSpec cc = thh_z(f);
  LongExactSpec spec{a, b, cc, {}, {}, {}, {}};
  const Element u = gen(b, "u");
  const Element dlogu = gen(b, "dlogu");
  spec.rho = {{"lambda1", gen(b, "lambda1")}, {"u", u}, {"mu2", gen(b, "kappa1", p)}};
  spec.action = {{"lambda1", gen(cc, "lambda1")}, {"u", zero(cc)}, {"mu2", gen(cc, "mu1", p)}};
  for (int i = 0; i <= p - 1; ++i) {
    spec.rho["a" + std::to_string(i)] = multiply(b, multiply(b, u, dlogu), gen(b, "kappa1", i));
    spec.action["a" + std::to_string(i)] = zero(cc);
  }
  for (int j = 1; j <= p - 1; ++j) {
    spec.rho["b" + std::to_string(j)] = multiply(b, u, gen(b, "kappa1", j));
    spec.action["b" + std::to_string(j)] = zero(cc);
  }
  // dlogu corresponds to -dlogv, and u-multiples are killed.
  spec.del = [b, cc, c](const Monomial& m) {
    if (m[b.index_of("u")] > 0) return zero(cc);
    return ell_del(b, cc, m, "dlogu", cc.field().neg(1), c);
  };
  const Element kernel_class = multiply(amb, gen(amb, "u", p - 2), gen(amb, "a" + std::to_string(p - 1)));
  spec.tau = [amb, cc, kernel_class](const Monomial& m) { return ell_tau(cc, amb, m, kernel_class); };
  return spec;
}

}  // namespace thhcalc
