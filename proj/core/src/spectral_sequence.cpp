#include "thhcalc/spectral_sequence.hpp"

#include "thhcalc/errors.hpp"
#include "thhcalc/morphism.hpp"

#include <algorithm>

namespace thhcalc {

namespace {

void accumulate(const PrimeField& f, std::map<PageMono, Coeff>& terms, const PageMono& m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (it->second == 0) terms.erase(it);
  }
}

Bidegree operator+(Bidegree a, Bidegree b) { return {a.s + b.s, a.t + b.t}; }

std::string bidegree_text(Bidegree b) { return "(" + std::to_string(b.s) + "," + std::to_string(b.t) + ")"; }

}  // namespace

Page::Page(AlgebraSpec spec, std::vector<PageSummand> summands, int r, int cap, int reserve)
    : spec_(std::move(spec)), summands_(std::move(summands)), r_(r), cap_(cap), reserve_(std::max(reserve, 1)) {
  if (summands_.empty()) summands_.push_back({"1", 0, 0, make_algebra(spec_.field(), {})});
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    const auto& sm = summands_[i];
    if (sm.s < 0 || sm.t < 0) throw Error(ErrorCode::BidegreeViolation, "summand '" + sm.label + "' below zero");
    if (!(sm.factor.field() == spec_.field())) throw Error(ErrorCode::MixedSpec, "summand over another prime");
    for (std::size_t j = 0; j < i; ++j)
      if (summands_[j].label == sm.label) throw Error(ErrorCode::DuplicateName, "summand label '" + sm.label + "'");
  }
  const int w = window();
  const auto spec_basis = spec_.bigraded_basis(w);
  for (std::size_t k = 0; k < summands_.size(); ++k) {
    const auto& sm = summands_[k];
    const int room = w - sm.s - sm.t;
    if (room < 0) continue;
    for (const auto& [fb, fmonos] : sm.factor.bigraded_basis(room))
      for (const auto& [sb, smonos] : spec_basis) {
        const Bidegree b = Bidegree{sm.s, sm.t} + fb + sb;
        if (b.total() > w) continue;
        for (const auto& fm : fmonos)
          for (const auto& smono : smonos) basis_[b].push_back(PageMono{smono, k, fm});
      }
  }
  for (auto& [b, monos] : basis_) {
    std::sort(monos.begin(), monos.end());
    for (std::size_t i = 0; i < monos.size(); ++i) position_[monos[i]] = i;
    layers_.emplace(b, Layer{Subspace::whole(monos.size(), field()), Subspace(monos.size(), field())});
  }
}

Page spec_page(AlgebraSpec spec, int r, int cap, int reserve) { return Page(std::move(spec), {}, r, cap, reserve); }

std::size_t Page::summand_index(std::string_view label) const {
  for (std::size_t i = 0; i < summands_.size(); ++i)
    if (summands_[i].label == label) return i;
  throw Error(ErrorCode::UnknownName, "no summand labelled '" + std::string(label) + "'");
}

Bidegree Page::bidegree(const PageMono& m) const {
  const auto& sm = summands_.at(m.summand);
  return Bidegree{sm.s, sm.t} + spec_.bidegree(m.spec) + sm.factor.bidegree(m.factor);
}

Vec Page::coordinates(Bidegree b, const PageElement& e) const {
  auto it = basis_.find(b);
  const std::size_t n = it == basis_.end() ? 0 : it->second.size();
  Vec v(n, 0);
  for (const auto& [m, c] : e.terms) {
    if (bidegree(m) != b)
      throw Error(ErrorCode::BidegreeViolation, format(m) + " is not in bidegree " + bidegree_text(b));
    auto pos = position_.find(m);
    if (pos == position_.end())
      throw Error(ErrorCode::BidegreeViolation, format(m) + " lies outside the page window");
    v[pos->second] = c;
  }
  return v;
}

PageElement Page::from_coordinates(Bidegree b, const Vec& v) const {
  PageElement e;
  const auto& monos = basis_.at(b);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) e.terms.emplace(monos[i], v[i]);
  return e;
}

namespace {
const Subspace& empty_subspace(const PrimeField& f) {
  static thread_local std::map<std::uint32_t, Subspace> cache;
  return cache.try_emplace(f.p(), Subspace(0, f)).first->second;
}
}  // namespace

const Subspace& Page::cycles(Bidegree b) const {
  auto it = layers_.find(b);
  return it == layers_.end() ? empty_subspace(field()) : it->second.cycles;
}

const Subspace& Page::boundaries(Bidegree b) const {
  auto it = layers_.find(b);
  return it == layers_.end() ? empty_subspace(field()) : it->second.boundaries;
}

std::int64_t Page::dim(Bidegree b) const {
  auto it = layers_.find(b);
  if (it == layers_.end()) return 0;
  return static_cast<std::int64_t>(it->second.cycles.dim()) - static_cast<std::int64_t>(it->second.boundaries.dim());
}

BigradedDims Page::dims() const {
  BigradedDims out;
  for (const auto& [b, layer] : layers_)
    if (b.total() <= cap_)
      if (const auto d = dim(b); d != 0) out[b] = d;
  return out;
}

GradedDims Page::total_dims() const { return thhcalc::total_dims(dims(), cap_); }

PageMono Page::mono(const Monomial& spec_mono, std::string_view label, Monomial factor) const {
  const std::size_t k = summand_index(label);
  if (factor.empty()) factor = summands_[k].factor.unit();
  if (spec_mono.size() != spec_.size() || factor.size() != summands_[k].factor.size())
    throw Error(ErrorCode::MixedSpec, "page monomial of the wrong shape");
  return PageMono{spec_mono, k, std::move(factor)};
}

PageElement Page::element(const PageMono& m, Coeff c) const {
  PageElement e;
  c %= field().p();
  const auto& factor = summands_.at(m.summand).factor;
  for (std::size_t i = 0; i < factor.size(); ++i)
    if (auto bound = factor.max_exponent(i); bound && m.factor[i] > *bound) return e;
  for (std::size_t i = 0; i < spec_.size(); ++i)
    if (auto bound = spec_.max_exponent(i); bound && m.spec[i] > *bound) return e;
  if (c != 0) e.terms.emplace(m, c);
  return e;
}

PageElement Page::act(const Element& s, const PageElement& e) const {
  if (s.spec_id != spec_.id()) throw Error(ErrorCode::MixedSpec, "acting element is not over the page spec");
  PageElement out;
  for (const auto& [sm, sc] : s.terms)
    for (const auto& [pm, pc] : e.terms)
      if (auto prod = multiply_monomials(spec_, sm, pm.spec))
        accumulate(field(), out.terms, PageMono{prod->first, pm.summand, pm.factor},
                   field().mul(prod->second, field().mul(sc, pc)));
  return out;
}

PageElement Page::add(const PageElement& a, const PageElement& b) const {
  PageElement out = a;
  for (const auto& [m, c] : b.terms) accumulate(field(), out.terms, m, c);
  return out;
}

PageElement Page::scale(const PageElement& a, Coeff c) const {
  PageElement out;
  c %= field().p();
  if (c == 0) return out;
  for (const auto& [m, x] : a.terms) out.terms.emplace(m, field().mul(x, c));
  return out;
}

std::string Page::format(const PageMono& m) const {
  const auto& sm = summands_.at(m.summand);
  std::string out;
  const std::string f = format_monomial(sm.factor, m.factor);
  if (f != "1") out = f;
  if (sm.label != "1") out += (out.empty() ? "" : "*") + ("{" + sm.label + "}");
  const std::string s = format_monomial(spec_, m.spec);
  if (s != "1" || out.empty()) out = out.empty() ? s : s + "*" + out;
  return out;
}

std::string Page::format(const PageElement& e) const {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : e.terms) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += format(m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Differentials

DifferentialRule DifferentialRule::on_generator(int r, std::string name, Element target, int gamma_index) {
  DifferentialRule rule;
  rule.page = r;
  rule.generator = std::move(name);
  rule.gamma_index = gamma_index;
  rule.spec_target = std::move(target);
  return rule;
}

DifferentialRule DifferentialRule::on_summand_element(int r, std::string label, Monomial factor,
                                                      PageElement target) {
  DifferentialRule rule;
  rule.page = r;
  rule.label = std::move(label);
  rule.factor = std::move(factor);
  rule.summand_target = std::move(target);
  return rule;
}

namespace {

bool is_power_of(std::int64_t n, std::int64_t p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

/// d^r on a root page, extended from declared values by the Leibniz rule.
class Differential {
 public:
  Differential(const Page& page, const std::vector<DifferentialRule>& rules) : page_(page) {
    r_ = rules.empty() ? page.r() : rules.front().page;
    const auto& spec = page.spec();
    const auto& f = page.field();
    for (const auto& rule : rules) {
      if (rule.page != r_) throw Error(ErrorCode::BidegreeViolation, "rules declared on different pages");
      if (rule.page < 2 || rule.page < page.r())
        throw Error(ErrorCode::BidegreeViolation, "rule on page " + std::to_string(rule.page) +
                                                      " applied to E^" + std::to_string(page.r()));
      const Coeff scalar = rule.scalar % f.p();
      if (scalar == 0) throw Error(ErrorCode::BidegreeViolation, "rule scalar must be nonzero");
      if (!rule.on_summand()) {
        const std::size_t i = spec.index_of(rule.generator);
        const auto& g = spec.generator(i);
        const bool ok = g.kind == GeneratorKind::Divided ? is_power_of(rule.gamma_index, f.p())
                                                         : rule.gamma_index == 1;
        if (!ok)
          throw Error(ErrorCode::LeibnizConflict, "d is declared on the decomposable gamma_" +
                                                      std::to_string(rule.gamma_index) + "(" + g.name + ")");
        if (rule.spec_target.spec_id != spec.id())
          throw Error(ErrorCode::MixedSpec, "target of d(" + g.name + ") is not over the page spec");
        Monomial src = spec.unit();
        src[i] = rule.gamma_index;
        const Bidegree want = shifted(spec.bidegree(src));
        for (const auto& [m, c] : rule.spec_target.terms)
          if (spec.bidegree(m) != want)
            throw Error(ErrorCode::BidegreeViolation, "d^" + std::to_string(r_) + "(" + format_monomial(spec, src) +
                                                          ") has a term in the wrong bidegree");
        Element target = thhcalc::scale(spec, rule.spec_target, scalar);
        auto [it, inserted] = generator_rules_.try_emplace({i, rule.gamma_index}, target);
        if (!inserted && !(it->second == target))
          throw Error(ErrorCode::LeibnizConflict, "two values declared for d(" + format_monomial(spec, src) + ")");
      } else {
        const PageMono src = page.mono(spec.unit(), rule.label, rule.factor);
        const Bidegree want = shifted(page.bidegree(src));
        for (const auto& [m, c] : rule.summand_target.terms)
          if (page.bidegree(m) != want)
            throw Error(ErrorCode::BidegreeViolation,
                        "d^" + std::to_string(r_) + "(" + page.format(src) + ") has a term in the wrong bidegree");
        PageElement target = page.scale(rule.summand_target, scalar);
        auto [it, inserted] = summand_rules_.try_emplace(std::make_pair(src.summand, src.factor), target);
        if (!inserted && !(it->second == target))
          throw Error(ErrorCode::LeibnizConflict, "two values declared for d(" + page.format(src) + ")");
      }
    }
  }

  int r() const noexcept { return r_; }
  bool has_generator_rules() const noexcept { return !generator_rules_.empty(); }
  Bidegree shifted(Bidegree b) const { return {b.s - r_, b.t + r_ - 1}; }

  /// Indecomposable factors of a spec monomial and the scalar c with
  /// m = c * (product of the factors).
  std::pair<std::vector<std::pair<std::size_t, int>>, Coeff> atoms(const Monomial& m) const {
    const auto& spec = page_.spec();
    const auto& f = page_.field();
    std::vector<std::pair<std::size_t, int>> out;
    Coeff scalar = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (spec.generator(i).kind != GeneratorKind::Divided) {
        for (int k = 0; k < m[i]; ++k) out.emplace_back(i, 1);
        continue;
      }
      // gamma_k = prod_j gamma_{p^j}^{k_j} / k_j! over the base-p digits k_j.
      int rest = m[i];
      int place = 1;
      while (rest > 0) {
        const int digit = rest % static_cast<int>(f.p());
        for (int k = 0; k < digit; ++k) out.emplace_back(i, place);
        for (int k = 2; k <= digit; ++k) scalar = f.mul(scalar, f.inv(static_cast<Coeff>(k)));
        rest /= static_cast<int>(f.p());
        place *= static_cast<int>(f.p());
      }
    }
    return {out, scalar};
  }

  Element atom_value(std::size_t i, int gamma) const {
    auto it = generator_rules_.find({i, gamma});
    return it == generator_rules_.end() ? zero(page_.spec()) : it->second;
  }

  Element atom_element(std::size_t i, int gamma) const { return gen(page_.spec(), page_.spec().generator(i).name, gamma); }

  /// d on the spec part.
  const Element& spec_d(const Monomial& m) const {
    if (auto it = cache_.find(m); it != cache_.end()) return it->second;
    const auto& spec = page_.spec();
    const auto& f = page_.field();
    Element total = zero(spec);
    if (has_generator_rules()) {
      const auto [list, scalar] = atoms(m);
      for (std::size_t k = 0; k < list.size(); ++k) {
        const Element dv = atom_value(list[k].first, list[k].second);
        if (dv.is_zero()) continue;
        Element prefix = one(spec);
        for (std::size_t l = 0; l < k; ++l) prefix = multiply(spec, prefix, atom_element(list[l].first, list[l].second));
        const bool odd_prefix = homogeneous_degree(spec, prefix).value_or(0) % 2 != 0;
        Element term = multiply(spec, prefix, dv);
        for (std::size_t l = k + 1; l < list.size(); ++l)
          term = multiply(spec, term, atom_element(list[l].first, list[l].second));
        total = add(spec, total, odd_prefix ? thhcalc::scale(spec, term, f.neg(1)) : term);
      }
      total = thhcalc::scale(spec, total, scalar);
    }
    return cache_.emplace(m, std::move(total)).first->second;
  }

  PageElement apply(const PageMono& pm) const {
    const auto& spec = page_.spec();
    const auto& f = page_.field();
    PageMono unit_part{spec.unit(), pm.summand, pm.factor};
    PageElement out = page_.act(spec_d(pm.spec), page_.element(unit_part));
    auto it = summand_rules_.find({pm.summand, pm.factor});
    if (it != summand_rules_.end()) {
      PageElement tail = page_.act(monomial(spec, pm.spec), it->second);
      if (spec.total_degree(pm.spec) % 2 != 0) tail = page_.scale(tail, f.neg(1));
      out = page_.add(out, tail);
    }
    return out;
  }

  PageElement apply(const PageElement& e) const {
    PageElement out;
    for (const auto& [m, c] : e.terms) out = page_.add(out, page_.scale(apply(m), c));
    return out;
  }

  /// d(a * m) == d(a) m + (-1)^{|a|} a d(m) for every indecomposable a and spec monomial m.
  void check_leibniz() const {
    if (!has_generator_rules()) return;
    const auto& spec = page_.spec();
    const auto& f = page_.field();
    std::vector<std::pair<std::size_t, int>> atom_list;
    for (std::size_t i = 0; i < spec.size(); ++i) {
      if (spec.generator(i).kind != GeneratorKind::Divided) {
        atom_list.emplace_back(i, 1);
        continue;
      }
      for (std::int64_t q = 1; q * spec.generator(i).total_degree() <= page_.window(); q *= f.p())
        atom_list.emplace_back(i, static_cast<int>(q));
    }
    for (const auto& [i, gamma] : atom_list) {
      Monomial a = spec.unit();
      a[i] = gamma;
      const int deg_a = spec.total_degree(a);
      const Element ea = monomial(spec, a);
      const Element da = atom_value(i, gamma);
      for (int n = 0; n + deg_a <= page_.window(); ++n)
        for (const auto& m : spec.basis(n)) {
          Element rhs = multiply(spec, da, monomial(spec, m));
          Element tail = multiply(spec, ea, spec_d(m));
          if (deg_a % 2 != 0) tail = thhcalc::scale(spec, tail, f.neg(1));
          rhs = add(spec, rhs, tail);
          Element lhs = zero(spec);
          if (auto prod = multiply_monomials(spec, a, m)) lhs = thhcalc::scale(spec, spec_d(prod->first), prod->second);
          if (!(lhs == rhs))
            throw Error(ErrorCode::LeibnizConflict, "d(" + format_monomial(spec, a) + " * " + format_monomial(spec, m) +
                                                        ") is " + format_element(spec, lhs) + " but the Leibniz rule gives " +
                                                        format_element(spec, rhs));
        }
    }
  }

 private:
  const Page& page_;
  int r_ = 2;
  std::map<std::pair<std::size_t, int>, Element> generator_rules_;
  std::map<std::pair<std::size_t, Monomial>, PageElement> summand_rules_;
  mutable std::map<Monomial, Element> cache_;
};

}  // namespace

PageElement apply_differential(const Page& page, const std::vector<DifferentialRule>& rules, const PageElement& e) {
  return Differential(page, rules).apply(e);
}

Page run_differential(const Page& page, const std::vector<DifferentialRule>& rules) {
  Page next = page;
  if (rules.empty()) {
    next.r_ = page.r() + 1;
    return next;
  }
  const Differential d(page, rules);
  d.check_leibniz();
  const auto& f = page.field();

  for (const auto& [b, layer] : page.layers_) {
    const Bidegree tb = d.shifted(b);
    const bool has_target = page.basis_.count(tb) != 0;
    std::vector<Vec> images;
    for (const auto& z : layer.cycles.basis()) {
      const PageElement dz = d.apply(page.from_coordinates(b, z));
      if (!has_target) {
        if (!dz.is_zero()) throw Error(ErrorCode::BidegreeViolation, "differential leaves the first quadrant");
        continue;
      }
      Vec v = page.coordinates(tb, dz);
      if (!page.cycles(tb).contains(v))
        throw Error(ErrorCode::NotADifferential, "d(" + page.format(page.from_coordinates(b, z)) + ") is not a cycle");
      const Bidegree tb2 = d.shifted(tb);
      const PageElement ddz = d.apply(dz);
      if (!ddz.is_zero() && (page.basis_.count(tb2) == 0 || !page.boundaries(tb2).contains(page.coordinates(tb2, ddz))))
        throw Error(ErrorCode::NotADifferential,
                    "d(d(" + page.format(page.from_coordinates(b, z)) + ")) = " + page.format(ddz) + " is nonzero");
      images.push_back(std::move(v));
    }
    if (has_target)
      for (const auto& bnd : layer.boundaries.basis()) {
        const PageElement db = d.apply(page.from_coordinates(b, bnd));
        if (!db.is_zero() && !page.boundaries(tb).contains(page.coordinates(tb, db)))
          throw Error(ErrorCode::NotADifferential, "d does not preserve boundaries in bidegree " + bidegree_text(b));
      }
    if (!has_target || images.empty()) continue;

    // Z' = {z in Z : dz in B}, B' = B + d(Z).
    const Subspace& old_b = page.boundaries(tb);
    const auto& zs = layer.cycles.basis();
    FpMatrix residues(page.basis_.at(tb).size(), zs.size());
    for (std::size_t c = 0; c < zs.size(); ++c) {
      const Vec rem = old_b.reduce(images[c]);
      for (std::size_t r = 0; r < rem.size(); ++r) residues.at(r, c) = rem[r];
    }
    Subspace cycles(zs.empty() ? 0 : zs.front().size(), f);
    for (const auto& k : kernel_basis(residues, f)) {
      Vec z(zs.front().size(), 0);
      for (std::size_t c = 0; c < zs.size(); ++c)
        if (k[c] != 0)
          for (std::size_t i = 0; i < z.size(); ++i) z[i] = f.add(z[i], f.mul(k[c], zs[c][i]));
      cycles.insert(std::move(z));
    }
    for (const auto& bnd : layer.boundaries.basis()) cycles.insert(bnd);
    next.layers_.at(b).cycles = std::move(cycles);
    auto& target_b = next.layers_.at(tb).boundaries;
    for (auto& v : images) target_b.insert(std::move(v));
  }
  next.r_ = d.r() + 1;
  return next;
}

// ---------------------------------------------------------------------------
// Rule families and abutments

void FamilyReport::require() const {
  for (const auto& e : entries)
    if (!e.passed)
      throw Error(ErrorCode::FamilyViolation, "d(" + e.source + ") = " + e.actual + ", expected a nonzero multiple of " +
                                                  e.expected);
}

FamilyReport verify_rule_family(const Page& page, const std::vector<DifferentialRule>& rules,
                                const std::vector<FamilyEntry>& entries) {
  const Differential d(page, rules);
  const auto& f = page.field();
  FamilyReport report;
  for (const auto& entry : entries) {
    const PageElement actual = d.apply(page.element(entry.source));
    FamilyResult res{page.format(entry.source), page.format(entry.expected), page.format(actual), 0, false};
    if (entry.expected.is_zero()) {
      res.passed = actual.is_zero();
    } else {
      const auto& [m, ce] = *entry.expected.terms.begin();
      auto it = actual.terms.find(m);
      const Coeff ca = it == actual.terms.end() ? 0 : it->second;
      res.scalar = f.mul(ca, f.inv(ce));
      res.passed = res.scalar != 0 && actual == page.scale(entry.expected, res.scalar);
    }
    report.passed = report.passed && res.passed;
    report.entries.push_back(std::move(res));
  }
  return report;
}

void AbutmentReport::require() const {
  if (passed) return;
  std::string msg = "E-infinity does not match the abutment";
  if (first_mismatch) msg += " in degree " + std::to_string(*first_mismatch);
  for (const auto& c : checks)
    if (!c.passed) {
      msg += "; " + c.name + ": " + c.residual;
      break;
    }
  throw Error(ErrorCode::DimMismatch, msg);
}

namespace {

Monomial exponents_by_name(const AlgebraSpec& spec, const std::vector<std::pair<std::string, int>>& named) {
  Monomial m = spec.unit();
  for (const auto& [name, e] : named) m[spec.index_of(name)] += e;
  return m;
}

/// Proportionality a == c * b with c nonzero; returns c or 0.
Coeff ratio(const AlgebraSpec& spec, const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const auto& f = spec.field();
  const auto& [m, cb] = *b.terms.begin();
  auto it = a.terms.find(m);
  if (it == a.terms.end()) return 0;
  const Coeff c = f.mul(it->second, f.inv(cb));
  return a == scale(spec, b, c) ? c : 0;
}

class AbutmentMap {
 public:
  AbutmentMap(const Page& root, const AbutmentSpec& ab) : root_(root), ab_(ab), target_(ab.target) {}

  PageMono claimed_mono(const ClaimRef& ref) const {
    const Page& c = ab_.claimed;
    const auto& factor = c.summands().at(c.summand_index(ref.label)).factor;
    return c.mono(exponents_by_name(c.spec(), ref.spec), ref.label, exponents_by_name(factor, ref.factor));
  }

  PageElement to_root(const PageMono& m) const {
    const Page& c = ab_.claimed;
    const auto& csum = c.summands().at(m.summand);
    const std::size_t k = root_.summand_index(csum.label);
    const auto& rfactor = root_.summands().at(k).factor;
    const Element s = rebase(c.spec(), root_.spec(), monomial(c.spec(), m.spec));
    const Element fac = rebase(csum.factor, rfactor, monomial(csum.factor, m.factor));
    const auto& f = root_.field();
    PageElement out;
    for (const auto& [sm, sc] : s.terms)
      for (const auto& [fm, fc] : fac.terms) out.terms[PageMono{sm, k, fm}] = f.mul(sc, fc);
    return out;
  }

  Element image(const PageMono& m) const {
    const Page& c = ab_.claimed;
    const auto& label = c.summands().at(m.summand).label;
    Element s = apply_morphism(c.spec(), target_, ab_.generator_images, monomial(c.spec(), m.spec));
    auto it = ab_.summand_images.find({label, m.factor});
    Element tail;
    if (it != ab_.summand_images.end()) {
      tail = it->second;
    } else if (label == "1" && c.summands().at(m.summand).factor.size() == 0) {
      tail = one(ab_.target);
    } else {
      throw Error(ErrorCode::UnknownName, "no abutment image for " + c.format(m));
    }
    return multiply(ab_.target, s, tail);
  }

 private:
  const Page& root_;
  const AbutmentSpec& ab_;
  Carrier target_;
};

}  // namespace

AbutmentReport compare_abutment(const Page& einfty, const AbutmentSpec& abutment,
                                const std::vector<ExtensionRule>& extensions, int cap) {
  AbutmentReport report;
  cap = std::min({cap, einfty.cap(), abutment.claimed.cap()});
  const AlgebraSpec& target = abutment.target;
  const Page& claimed = abutment.claimed;
  const auto& f = einfty.field();
  const AbutmentMap map(einfty, abutment);
  const auto add_check = [&](std::string name, bool ok, std::string detail) {
    report.passed = report.passed && ok;
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  // Degreewise dimensions.
  const GradedDims actual = total_dims(einfty.dims(), cap);
  const GradedDims expected = hilbert(target, cap);
  for (int n = 0; n <= cap; ++n) {
    report.degrees.push_back({n, expected[n], actual[n]});
    if (expected[n] != actual[n] && !report.first_mismatch) report.first_mismatch = n;
  }
  add_check("dimensions", !report.first_mismatch,
            report.first_mismatch ? "first mismatch in degree " + std::to_string(*report.first_mismatch) : "");

  // The claimed basis represents E-infinity bidegree-wise.
  {
    bool ok = true;
    std::string detail;
    std::map<Bidegree, std::int64_t> counts;
    for (const auto& [b, monos] : claimed.basis()) {
      if (b.total() > cap) continue;
      Subspace span = einfty.boundaries(b);
      for (const auto& m : monos) {
        ++counts[b];
        const PageElement rep = map.to_root(m);
        bool good = true;
        for (const auto& [rm, rc] : rep.terms)
          if (einfty.bidegree(rm) != b) good = false;
        if (good && !rep.is_zero()) {
          const Vec v = einfty.coordinates(b, rep);
          good = einfty.cycles(b).contains(v) && span.insert(v);
        } else {
          good = false;
        }
        if (!good && ok) {
          ok = false;
          detail = claimed.format(m) + " is not an independent permanent cycle in bidegree (" + std::to_string(b.s) +
                   "," + std::to_string(b.t) + ")";
        }
      }
    }
    for (const auto& [b, d] : einfty.dims())
      if (counts[b] != d && ok) {
        ok = false;
        detail = "bidegree (" + std::to_string(b.s) + "," + std::to_string(b.t) + ") has " + std::to_string(d) +
                 " classes but " + std::to_string(counts[b]) + " are claimed";
      }
    add_check("associated-graded", ok, detail);
  }

  // Images of the claimed basis form a basis of the abutment.
  {
    bool ok = true;
    std::string detail;
    std::map<int, std::vector<Element>> columns;
    for (const auto& [b, monos] : claimed.basis())
      if (b.total() <= cap)
        for (const auto& m : monos) columns[b.total()].push_back(map.image(m));
    for (int n = 0; n <= cap && ok; ++n) {
      const auto basis = target.basis(n);
      const auto& cols = columns[n];
      const auto rk = rank(matrix_of(f, basis, cols), f);
      if (rk != basis.size() || cols.size() != basis.size()) {
        ok = false;
        detail = "degree " + std::to_string(n) + ": " + std::to_string(cols.size()) + " images of rank " +
                 std::to_string(rk) + " for dimension " + std::to_string(basis.size());
      }
    }
    add_check("images-basis", ok, detail);
  }

  // Filtrations of classes detected by single abutment generators.
  {
    bool ok = true;
    std::string detail;
    for (const auto& [b, monos] : claimed.basis()) {
      if (b.total() > cap) continue;
      for (const auto& m : monos) {
        const Element img = map.image(m);
        if (img.terms.size() != 1) continue;
        const Monomial& tm = img.terms.begin()->first;
        int count = 0;
        std::size_t which = 0;
        for (std::size_t i = 0; i < tm.size(); ++i) {
          count += tm[i];
          if (tm[i]) which = i;
        }
        if (count != 1) continue;
        auto it = abutment.filtration_assignment.find(target.generator(which).name);
        if (it != abutment.filtration_assignment.end() && it->second != b.s && ok) {
          ok = false;
          detail = claimed.format(m) + " has filtration " + std::to_string(b.s) + " but " + it->first +
                   " is assigned " + std::to_string(it->second);
        }
      }
    }
    add_check("filtration", ok, detail);
  }

  for (const auto& ext : extensions) {
    int degree = 0;
    int filtration = 0;
    Element product = one(target);
    for (const auto& [ref, e] : ext.factors) {
      const PageMono m = map.claimed_mono(ref);
      degree += e * claimed.total_degree(m);
      filtration += e * claimed.bidegree(m).s;
      product = multiply(target, product, power(target, map.image(m), e));
    }
    const PageMono res = map.claimed_mono(ext.result);
    if (claimed.total_degree(res) != degree)
      throw Error(ErrorCode::ExtensionDegreeError, "extension '" + ext.name + "' joins degree " + std::to_string(degree) +
                                                       " to degree " + std::to_string(claimed.total_degree(res)));
    const Element rhs = scale(target, map.image(res), ext.unit);
    const bool jump = claimed.bidegree(res).s <= filtration;
    const Coeff c = ratio(target, product, rhs);
    add_check("extension " + ext.name, c != 0 && jump,
              c == 0 ? format_element(target, product) + " vs " + format_element(target, rhs)
                     : (jump ? "" : "filtration does not drop"));
  }

  for (const auto& [b, d] : einfty.dims())
    for (int r = einfty.r(); b.s - r >= 0; ++r) {
      const Bidegree tb{b.s - r, b.t + r - 1};
      if (einfty.dim(tb) > 0) ++report.possible_differentials;
    }
  return report;
}

}  // namespace thhcalc
