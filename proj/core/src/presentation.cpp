#include "thhcalc/presentation.hpp"

#include "thhcalc/errors.hpp"

#include <numeric>

namespace thhcalc {

namespace {

constexpr std::size_t kRewriteStepLimit = 5'000'000;

void accumulate(const PrimeField& f, std::map<Monomial, Coeff>& terms, const Monomial& m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (it->second == 0) terms.erase(it);
  }
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

Presentation::Presentation(AlgebraSpec ambient, std::vector<RewriteRule> rules)
    : ambient_(std::move(ambient)), rules_(std::move(rules)) {}

Element Presentation::normal_form(const Element& e, const std::vector<std::size_t>* order) const {
  if (e.spec_id != ambient_.id()) throw Error(ErrorCode::MixedSpec, "element is not over this presentation");
  std::vector<std::size_t> identity(rules_.size());
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  const auto& sequence = order ? *order : identity;
  const auto& f = field();

  std::map<Monomial, Coeff> pending = e.terms;
  Element result = zero(ambient_);
  std::size_t steps = 0;
  while (!pending.empty()) {
    if (++steps > kRewriteStepLimit)
      throw Error(ErrorCode::NonTermination, "rewriting did not terminate; check the rule order");
    auto node = pending.extract(pending.begin());
    const Monomial& m = node.key();
    const Coeff c = node.mapped();
    const RewriteRule* rule = nullptr;
    for (std::size_t idx : sequence)
      if (divides(rules_[idx].lhs, m)) {
        rule = &rules_[idx];
        break;
      }
    if (!rule) {
      accumulate(f, result.terms, m, c);
      continue;
    }
    Monomial rest = m;
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= rule->lhs[i];
    // lhs * rest = s * m, hence m = s^{-1} * rhs * rest in the quotient.
    const auto split = multiply_monomials(ambient_, rule->lhs, rest);
    if (!split) throw Error(ErrorCode::NonTermination, "rule '" + rule->name + "' splits a monomial to zero");
    const Coeff factor = f.mul(c, f.inv(split->second));
    const Element replaced = thhcalc::multiply(ambient_, rule->rhs, monomial(ambient_, rest));
    for (const auto& [mm, cc] : replaced.terms) accumulate(f, pending, mm, f.mul(cc, factor));
  }
  return result;
}

bool Presentation::is_normal(const Monomial& m) const {
  for (const auto& r : rules_)
    if (divides(r.lhs, m)) return false;
  return true;
}

std::vector<Monomial> Presentation::basis(int total_degree) const {
  std::vector<Monomial> out;
  for (auto& m : ambient_.basis(total_degree))
    if (is_normal(m)) out.push_back(std::move(m));
  return out;
}

GradedDims Presentation::hilbert(int cap) const {
  GradedDims dims(cap);
  for (int n = 0; n <= cap; ++n) dims.at(n) = static_cast<std::int64_t>(basis(n).size());
  return dims;
}

Element Presentation::multiply(const Element& a, const Element& b) const {
  return normal_form(thhcalc::multiply(ambient_, a, b));
}

Presentation make_presentation(AlgebraSpec ambient, std::vector<RewriteRule> rules) {
  for (const auto& r : rules) {
    if (r.lhs.size() != ambient.size())
      throw Error(ErrorCode::MixedSpec, "rule '" + r.name + "' has a malformed left side");
    if (r.rhs.spec_id != ambient.id())
      throw Error(ErrorCode::MixedSpec, "rule '" + r.name + "' has a foreign right side");
    const auto deg = homogeneous_degree(ambient, r.rhs);
    if (deg && *deg != ambient.total_degree(r.lhs))
      throw Error(ErrorCode::DegreeMismatch, "rule '" + r.name + "' is not homogeneous");
  }
  return Presentation(std::move(ambient), std::move(rules));
}

Presentation make_theta(const PrimeField& field) {
  const int p = static_cast<int>(field.p());
  std::vector<GeneratorSpec> gens{truncated("u", 2, p - 1), polynomial("mu2", 2 * p * p)};
  for (int i = 0; i <= p - 1; ++i) gens.push_back(exterior("a" + std::to_string(i), 2 * p * i + 3));
  for (int j = 1; j <= p - 1; ++j) gens.push_back(polynomial("b" + std::to_string(j), 2 * p * j + 2));
  AlgebraSpec amb = make_algebra(field, std::move(gens));

  const auto a = [&](int i) { return "a" + std::to_string(i); };
  const auto b = [&](int j) { return "b" + std::to_string(j); };
  // b_0 is u by convention.
  const auto b_elem = [&](int j) { return j == 0 ? gen(amb, "u") : gen(amb, b(j)); };
  const auto lhs = [&](const std::vector<std::pair<std::string, int>>& factors) {
    Monomial m = amb.unit();
    for (const auto& [name, e] : factors) m[amb.index_of(name)] += e;
    return m;
  };
  const Element u = gen(amb, "u");
  const Element mu2 = gen(amb, "mu2");

  std::vector<RewriteRule> rules;
  for (int i = 1; i <= p - 1; ++i)
    for (int j = i; j <= p - 1; ++j) {
      Element rhs = i + j <= p - 1 ? multiply(amb, u, b_elem(i + j))
                                   : multiply(amb, multiply(amb, u, b_elem(i + j - p)), mu2);
      rules.push_back({lhs({{b(i), 1}, {b(j), 1}}), std::move(rhs), b(i) + "*" + b(j)});
    }
  for (int i = 0; i <= p - 1; ++i)
    for (int j = 1; j <= p - 1; ++j) {
      Element rhs = i + j <= p - 1 ? multiply(amb, u, gen(amb, a(i + j)))
                                   : multiply(amb, multiply(amb, u, gen(amb, a(i + j - p))), mu2);
      rules.push_back({lhs({{a(i), 1}, {b(j), 1}}), std::move(rhs), a(i) + "*" + b(j)});
    }
  for (int i = 0; i <= p - 1; ++i)
    for (int j = i + 1; j <= p - 1; ++j)
      rules.push_back({lhs({{a(i), 1}, {a(j), 1}}), zero(amb), a(i) + "*" + a(j)});
  for (int i = 0; i <= p - 2; ++i)
    rules.push_back({lhs({{"u", p - 2}, {a(i), 1}}), zero(amb), "u^" + std::to_string(p - 2) + "*" + a(i)});
  for (int j = 1; j <= p - 1; ++j)
    rules.push_back({lhs({{"u", p - 2}, {b(j), 1}}), zero(amb), "u^" + std::to_string(p - 2) + "*" + b(j)});
  return make_presentation(std::move(amb), std::move(rules));
}

Presentation tensor(const AlgebraSpec& prefix, const Presentation& pres) {
  AlgebraSpec amb = tensor(prefix, pres.ambient());
  std::vector<RewriteRule> rules;
  for (const auto& r : pres.rules()) {
    Monomial m(prefix.size(), 0);
    m.insert(m.end(), r.lhs.begin(), r.lhs.end());
    rules.push_back({std::move(m), rebase(pres.ambient(), amb, r.rhs), r.name});
  }
  return make_presentation(std::move(amb), std::move(rules));
}

GradedDims hilbert_pres(const Presentation& pres, int cap) { return pres.hilbert(cap); }

// ---------------------------------------------------------------------------

const AlgebraSpec& ambient(const Carrier& c) {
  if (const auto* s = std::get_if<AlgebraSpec>(&c)) return *s;
  return std::get<Presentation>(c).ambient();
}

Element reduce(const Carrier& c, const Element& e) {
  if (const auto* p = std::get_if<Presentation>(&c)) return p->normal_form(e);
  if (e.spec_id != ambient(c).id()) throw Error(ErrorCode::MixedSpec, "element is not over this carrier");
  return e;
}

Element carrier_multiply(const Carrier& c, const Element& a, const Element& b) {
  return reduce(c, multiply(ambient(c), a, b));
}

std::vector<Monomial> carrier_basis(const Carrier& c, int total_degree) {
  if (const auto* p = std::get_if<Presentation>(&c)) return p->basis(total_degree);
  return std::get<AlgebraSpec>(c).basis(total_degree);
}

GradedDims carrier_hilbert(const Carrier& c, int cap) {
  if (const auto* p = std::get_if<Presentation>(&c)) return p->hilbert(cap);
  return hilbert(std::get<AlgebraSpec>(c), cap);
}

std::vector<Relation> relations(const Carrier& c) {
  const AlgebraSpec& spec = ambient(c);
  std::vector<Relation> out;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto& g = spec.generator(i);
    if (g.kind == GeneratorKind::Exterior)
      out.push_back({g.name + "^2", {{i, 1}, {i, 1}}, zero(spec)});
    else if (g.kind == GeneratorKind::Truncated)
      out.push_back({g.name + "^" + std::to_string(g.height), {{i, g.height}}, zero(spec)});
  }
  if (const auto* p = std::get_if<Presentation>(&c)) {
    for (const auto& r : p->rules()) {
      Relation rel{r.name, {}, r.rhs};
      for (std::size_t i = 0; i < r.lhs.size(); ++i)
        if (r.lhs[i] > 0) rel.factors.emplace_back(i, r.lhs[i]);
      out.push_back(std::move(rel));
    }
  }
  return out;
}

Element relation_lhs(const AlgebraSpec& spec, const Relation& r) {
  Element acc = one(spec);
  for (const auto& [i, e] : r.factors) acc = multiply(spec, acc, gen(spec, spec.generator(i).name, e));
  return acc;
}

namespace {

Element sigma_value(const AlgebraSpec& spec, const DerivationSpec& d, std::size_t i) {
  auto it = d.values.find(spec.generator(i).name);
  return it == d.values.end() ? zero(spec) : it->second;
}

// d(x^e) for a single generator power.
Element derive_power(const AlgebraSpec& spec, const DerivationSpec& d, std::size_t i, int e) {
  const auto& g = spec.generator(i);
  const Element s = sigma_value(spec, d, i);
  if (s.is_zero()) return s;
  const auto& f = spec.field();
  switch (g.kind) {
    case GeneratorKind::Exterior:
      return e == 1 ? s : zero(spec);
    case GeneratorKind::Divided:
      return multiply(spec, gen(spec, g.name, e - 1), s);
    default:
      return scale(spec, multiply(spec, gen(spec, g.name, e - 1), s), f.reduce(e));
  }
}

Element derive_factors(const AlgebraSpec& spec, const DerivationSpec& d,
                       const std::vector<std::pair<std::size_t, int>>& factors) {
  const auto& f = spec.field();
  Element total = zero(spec);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    Element prefix = one(spec);
    int prefix_degree = 0;
    for (std::size_t l = 0; l < k; ++l) {
      const auto& [i, e] = factors[l];
      prefix = multiply(spec, prefix, gen(spec, spec.generator(i).name, e));
      prefix_degree += e * spec.generator(i).total_degree();
    }
    Element term = multiply(spec, prefix, derive_power(spec, d, factors[k].first, factors[k].second));
    for (std::size_t l = k + 1; l < factors.size(); ++l) {
      const auto& [i, e] = factors[l];
      term = multiply(spec, term, gen(spec, spec.generator(i).name, e));
    }
    if (prefix_degree % 2 != 0) term = scale(spec, term, f.neg(1));
    total = add(spec, total, term);
  }
  return total;
}

void validate_derivation(const AlgebraSpec& spec, const DerivationSpec& d) {
  for (const auto& [name, value] : d.values) {
    const auto& g = spec.generator(spec.index_of(name));
    if (value.spec_id != spec.id()) throw Error(ErrorCode::MixedSpec, "derivation value of '" + name + "'");
    const auto deg = homogeneous_degree(spec, value);
    if (deg && *deg != g.total_degree() + 1)
      throw Error(ErrorCode::DegreeMismatch, "derivation value of '" + name + "' has degree " +
                                                 std::to_string(*deg) + ", expected " +
                                                 std::to_string(g.total_degree() + 1));
  }
}

}  // namespace

Element apply_derivation(const AlgebraSpec& spec, const DerivationSpec& d, const Element& e) {
  Element out = zero(spec);
  for (const auto& [m, c] : e.terms) {
    std::vector<std::pair<std::size_t, int>> factors;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) factors.emplace_back(i, m[i]);
    out = add(spec, out, scale(spec, derive_factors(spec, d, factors), c));
  }
  return out;
}

DerivationReport check_derivation(const Carrier& carrier, const DerivationSpec& d) {
  const AlgebraSpec& spec = ambient(carrier);
  validate_derivation(spec, d);
  DerivationReport report;
  for (const auto& rel : relations(carrier)) {
    const Element residual =
        reduce(carrier, subtract(spec, derive_factors(spec, d, rel.factors), apply_derivation(spec, d, rel.rhs)));
    RelationCheck check{rel.name, residual.is_zero(), format_element(spec, residual)};
    report.passed = report.passed && check.passed;
    report.checks.push_back(std::move(check));
  }
  return report;
}

Element apply_morphism(const AlgebraSpec& source, const Carrier& target, const GeneratorImages& images,
                       const Element& e) {
  if (e.spec_id != source.id()) throw Error(ErrorCode::MixedSpec, "element is not over the morphism source");
  const AlgebraSpec& tgt = ambient(target);
  Element out = zero(tgt);
  for (const auto& [m, c] : e.terms) {
    Element term = monomial(tgt, tgt.unit(), c);
    for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i) {
      if (m[i] == 0) continue;
      const auto& g = source.generator(i);
      auto it = images.find(g.name);
      if (it == images.end()) throw Error(ErrorCode::UnknownName, "no image given for '" + g.name + "'");
      if (g.kind == GeneratorKind::Divided && m[i] > 1)
        throw Error(ErrorCode::UnsupportedKind, "morphisms out of divided powers are not supported");
      for (int k = 0; k < m[i]; ++k) term = carrier_multiply(target, term, it->second);
    }
    out = add(tgt, out, term);
  }
  return reduce(target, out);
}

DerivationReport check_naturality(const Carrier& source, const Carrier& target, const GeneratorImages& images,
                                  const DerivationSpec& d_source, const DerivationSpec& d_target) {
  const AlgebraSpec& src = ambient(source);
  const AlgebraSpec& tgt = ambient(target);
  validate_derivation(src, d_source);
  validate_derivation(tgt, d_target);
  DerivationReport report;
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto& name = src.generator(i).name;
    auto it = images.find(name);
    if (it == images.end()) throw Error(ErrorCode::UnknownName, "no image given for '" + name + "'");
    const Element lhs = apply_morphism(src, target, images, sigma_value(src, d_source, i));
    const Element rhs = reduce(target, apply_derivation(tgt, d_target, it->second));
    const Element residual = subtract(tgt, lhs, rhs);
    RelationCheck check{"natural(" + name + ")", residual.is_zero(), format_element(tgt, residual)};
    report.passed = report.passed && check.passed;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace thhcalc
