#include "thhcalc/models.hpp"

#include "thhcalc/errors.hpp"

namespace thhcalc::models {

namespace {

int prime(const PrimeField& f) { return static_cast<int>(f.p()); }

ModuleSummand single(std::string label, int shift, bool free) {
  ModuleSummand s;
  s.label = std::move(label);
  s.shift = shift;
  if (free) s.free_over = {"du"};
  return s;
}

}  // namespace

AlgebraSpec thh_ell(const PrimeField& f) {
  const int p = prime(f);
  return make_algebra(f, {exterior("lambda1", 2 * p - 1), exterior("lambda2", 2 * p * p - 1),
                          polynomial("mu2", 2 * p * p)});
}

AlgebraSpec thh_z(const PrimeField& f) {
  const int p = prime(f);
  return make_algebra(f, {exterior("epsilon1", 2 * p - 1), exterior("lambda1", 2 * p - 1), polynomial("mu1", 2 * p)});
}

AlgebraSpec thh_ell_log(const PrimeField& f) {
  const int p = prime(f);
  return make_algebra(f, {exterior("lambda1", 2 * p - 1), exterior("dlogv", 1), polynomial("kappa1", 2 * p)});
}

AlgebraSpec thh_ku_log(const PrimeField& f) {
  const int p = prime(f);
  return make_algebra(f, {truncated("u", 2, p - 1), exterior("lambda1", 2 * p - 1), exterior("dlogu", 1),
                          polynomial("kappa1", 2 * p)});
}

Presentation thh_ku(const PrimeField& f) {
  return tensor(make_algebra(f, {exterior("lambda1", 2 * prime(f) - 1)}), make_theta(f));
}

AlgebraSpec cyclic_v(const PrimeField& f) { return cyclic_bar_homology(f, "v", 2 * prime(f) - 2); }

std::vector<DifferentialRule> dv_rules(const Page& page) {
  const int p = prime(page.field());
  const AlgebraSpec& s = page.spec();
  std::vector<DifferentialRule> rules;
  for (int q = p; q * 2 * p <= page.window(); q *= p)
    rules.push_back(DifferentialRule::on_generator(
        p, "[dv]", multiply(s, gen(s, "lambda2"), gen(s, "[dv]", q - p)), q));
  return rules;
}

std::vector<FamilyEntry> dv_family(const Page& page, int kmax) {
  const int p = prime(page.field());
  const AlgebraSpec& s = page.spec();
  const std::size_t dv = s.index_of("[dv]");
  const std::size_t l2 = s.index_of("lambda2");
  std::vector<FamilyEntry> out;
  for (int k = 1; k <= kmax; ++k) {
    Monomial src = s.unit();
    src[dv] = k;
    FamilyEntry e{page.mono(src), {}};
    if (k >= p) {
      Monomial tgt = s.unit();
      tgt[dv] = k - p;
      tgt[l2] = 1;
      e.expected = page.element(page.mono(tgt));
    }
    out.push_back(std::move(e));
  }
  return out;
}

Page dv_einfty(const PrimeField& f, const std::vector<GeneratorSpec>& extra, int cap) {
  const int p = prime(f);
  std::vector<GeneratorSpec> gens{exterior("lambda1", 2 * p - 1), polynomial("mu2", 2 * p * p)};
  gens.insert(gens.end(), extra.begin(), extra.end());
  gens.push_back(truncated("[dv]", 2 * p - 1, p, 1));
  return spec_page(make_algebra(f, std::move(gens)), p + 1, cap);
}

std::string theta_label(const PrimeField& f, int i, int j) {
  const Presentation theta = make_theta(f);
  const AlgebraSpec& a = theta.ambient();
  Monomial m = a.unit();
  if (j == 0) {
    m[a.index_of("u")] = i + 1;
  } else {
    m[a.index_of("u")] = i;
    m[a.index_of("b" + std::to_string(j))] = 1;
  }
  return format_monomial(a, m);
}

int theta_degree(const PrimeField& f, int i, int j) {
  const int p = prime(f);
  return 2 * i + (j == 0 ? 2 : 2 * p * j + 2);
}

KuModule ku_module(const PrimeField& f, bool alternative) {
  const int p = prime(f);
  KuModule m;
  auto add = [&](std::string label, int shift, bool free) {
    if (free) m.free_labels.push_back(label);
    m.module.summands.push_back(single(std::move(label), shift, free));
  };
  add("1", 0, true);
  for (int i = 0; i <= p - 4; ++i)
    for (int j = 0; j <= p - 1; ++j) add(theta_label(f, i, j), theta_degree(f, i, j), true);
  if (alternative) {
    add("z", theta_degree(f, p - 3, p - 1), false);
    add("lambda2", 2 * p * p - 1, false);
  } else {
    add(theta_label(f, p - 3, p - 1), theta_degree(f, p - 3, p - 1), true);
  }
  for (int j = 1; j <= p - 1; ++j) {
    m.tower_labels.push_back(theta_label(f, p - 3, j - 1));
    add(m.tower_labels.back(), theta_degree(f, p - 3, j - 1), false);
  }
  for (int j = 1; j <= p - 1; ++j) {
    m.target_labels.push_back("a" + std::to_string(j));
    add(m.target_labels.back(), 2 * p * j + 3, false);
  }
  return m;
}

std::vector<DifferentialRule> du_rules(const Page& page, const KuModule& m, int limit) {
  std::vector<DifferentialRule> rules;
  for (std::size_t j = 0; j < m.tower_labels.size(); ++j) {
    const auto& src = page.summands().at(page.summand_index(m.tower_labels[j]));
    const auto& tgt = page.summands().at(page.summand_index(m.target_labels[j]));
    const int unit_total = src.factor.generator(0).total_degree();
    const int unit_internal = src.factor.generator(0).degree;
    for (int k = 2; src.s + src.t + k * unit_total <= page.window(); ++k) {
      if (limit >= 0 && src.t + k * unit_internal >= limit) break;
      const PageMono target = page.mono(page.spec().unit(), tgt.label, Monomial{k - 2});
      rules.push_back(DifferentialRule::on_summand_element(2, src.label, Monomial{k}, page.element(target)));
    }
  }
  return rules;
}

std::vector<FamilyEntry> du_family(const Page& page, const KuModule& m, int maxdeg) {
  const AlgebraSpec& spec = page.spec();
  const auto& f = page.field();
  std::vector<Monomial> multipliers;
  for (const auto& names : std::vector<std::vector<std::string>>{{}, {"lambda1"}, {"dlogu"}, {"lambda1", "dlogu"}, {"mu2"}}) {
    Monomial s = spec.unit();
    for (const auto& n : names) s[spec.index_of(n)] = 1;
    multipliers.push_back(std::move(s));
  }
  std::vector<FamilyEntry> out;
  for (std::size_t j = 0; j < m.tower_labels.size(); ++j)
    for (const Monomial& s : multipliers)
      for (int k = 2;; ++k) {
        const PageMono source = page.mono(s, m.tower_labels[j], Monomial{k});
        if (page.total_degree(source) > maxdeg) break;
        const Coeff sign = (spec.total_degree(s) & 1) ? f.neg(1) : 1;
        out.push_back({source, page.element(page.mono(s, m.target_labels[j], Monomial{k - 2}), sign)});
      }
  return out;
}

AlgebraSpec ku_coefficients(const PrimeField& f) {
  const int p = prime(f);
  return make_algebra(f, {exterior("lambda1", 2 * p - 1), exterior("dlogu", 1), polynomial("mu2", 2 * p * p)});
}

AbutmentSpec ku_abutment(const PrimeField& f, const KuModule& m, int cap) {
  const int p = prime(f);
  const AlgebraSpec target = thh_ku_log(f);
  const AlgebraSpec tower = make_algebra(f, {truncated("[du]", 3, 2, 1)});
  const AlgebraSpec none = make_algebra(f, {});
  std::vector<PageSummand> summands;
  std::map<std::pair<std::string, Monomial>, Element> images;
  const auto rho = [&](int i, int j) { return product_of(target, {{"u", i + 1}, {"kappa1", j}}); };
  for (const auto& label : m.free_labels) summands.push_back({label, 0, 0, none});
  summands.front().t = 0;
  images[{"1", Monomial{}}] = one(target);
  int slot = 1;
  for (int i = 0; i <= p - 4; ++i)
    for (int j = 0; j <= p - 1; ++j, ++slot) {
      summands[slot].t = theta_degree(f, i, j);
      images[{summands[slot].label, Monomial{}}] = rho(i, j);
    }
  summands[slot].t = theta_degree(f, p - 3, p - 1);
  images[{summands[slot].label, Monomial{}}] = rho(p - 3, p - 1);
  for (int j = 1; j <= p - 1; ++j) {
    const std::string& label = m.tower_labels[j - 1];
    summands.push_back({label, 0, theta_degree(f, p - 3, j - 1), tower});
    images[{label, Monomial{0}}] = rho(p - 3, j - 1);
    images[{label, Monomial{1}}] = gen(target, "kappa1", j);
  }
  GeneratorImages gens{{"lambda1", gen(target, "lambda1")},
                       {"dlogu", gen(target, "dlogu")},
                       {"mu2", gen(target, "kappa1", p)}};
  return AbutmentSpec{target,
                      {{"u", 0}, {"lambda1", 0}, {"dlogu", 0}, {"kappa1", 1}},
                      Page(ku_coefficients(f), std::move(summands), 3, cap),
                      std::move(gens),
                      std::move(images)};
}

std::vector<ExtensionRule> ku_extensions(const PrimeField& f) {
  const int p = prime(f);
  const KuModule m = ku_module(f);
  const std::string u_label = theta_label(f, 0, 0);
  std::vector<ExtensionRule> out;
  for (int j = 1; j <= p - 1; ++j) {
    ClaimRef u{{}, u_label, {}};
    ClaimRef tower{{}, m.tower_labels[j - 1], {{"[du]", 1}}};
    ClaimRef result{{}, theta_label(f, 0, j), {}};
    out.push_back({"u*[du]" + m.tower_labels[j - 1], {{u, 1}, {tower, 1}}, result});
  }
  for (int j = 1; j <= p - 1; ++j) {
    const int k = p - j;
    if (k < j) break;
    ClaimRef a{{}, m.tower_labels[j - 1], {{"[du]", 1}}};
    ClaimRef b{{}, m.tower_labels[k - 1], {{"[du]", 1}}};
    std::vector<std::pair<ClaimRef, int>> factors =
        j == k ? std::vector<std::pair<ClaimRef, int>>{{a, 2}} : std::vector<std::pair<ClaimRef, int>>{{a, 1}, {b, 1}};
    out.push_back({"[du]" + m.tower_labels[j - 1] + "*[du]" + m.tower_labels[k - 1], std::move(factors),
                   ClaimRef{{{"mu2", 1}}, "1", {}}});
  }
  return out;
}

}  // namespace thhcalc::models
