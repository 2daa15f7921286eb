#include "json_codec.hpp"
#include "thhcalc/errors.hpp"
#include "thhcalc/scenarios.hpp"
#include "thhcalc/spectral_sequence.hpp"
#include "thhcalc/tor.hpp"

namespace thhcalc {

namespace {

using codec::json;

ModuleSummand decode_summand(const PrimeField& f, const json& j) {
  ModuleSummand s;
  s.label = j.value("label", std::string("1"));
  s.shift = j.value("shift", 0);
  if (j.contains("free_over")) s.free_over = j.at("free_over").get<std::vector<std::string>>();
  if (j.contains("space")) s.space = codec::decode_algebra(f, j.at("space"));
  return s;
}

ModuleSpec decode_module(const PrimeField& f, const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "ground") return ground_module();
    throw Error(ErrorCode::ParseError, "unknown module '" + j.get<std::string>() + "'");
  }
  ModuleSpec m;
  if (j.is_object() && j.contains("summands")) {
    for (const auto& s : j.at("summands")) m.summands.push_back(decode_summand(f, s));
  } else if (j.is_object()) {
    m.summands.push_back(decode_summand(f, j));
  } else {
    throw Error(ErrorCode::ParseError, "a module is \"ground\" or an object");
  }
  return m;
}

ClaimRef decode_claim(const json& j) {
  ClaimRef c;
  const json& spec = j.contains("monomial") ? j.at("monomial") : j;
  for (const auto& [name, e] : spec.items())
    if (name != "label" && name != "factor" && name != "power") c.spec.emplace_back(name, e.get<int>());
  c.label = j.value("label", std::string("1"));
  if (j.contains("factor"))
    for (const auto& [name, e] : j.at("factor").items()) c.factor.emplace_back(name, e.get<int>());
  return c;
}

Page decode_spec_page(const PrimeField& f, const json& j, int cap) {
  return spec_page(codec::decode_algebra(f, j), j.value("r", 2), cap);
}

Report run_document(const json& doc, std::optional<std::uint32_t> prime, std::optional<int> cap) {
  Report r;
  r.scenario = doc.value("name", std::string("user"));
  r.prime = prime.value_or(codec::field(doc, "prime").get<std::uint32_t>());
  r.cap = cap.value_or(doc.value("cap", default_cap(r.prime)));
  const PrimeField f(r.prime);

  const Page page = decode_spec_page(f, codec::field(doc, "page"), r.cap);
  if (doc.contains("tor")) {
    const json& t = doc.at("tor");
    const AlgebraSpec alg = codec::decode_algebra(f, codec::field(t, "algebra"));
    const ModuleSpec left = decode_module(f, codec::field(t, "left"));
    const ModuleSpec right = decode_module(f, codec::field(t, "right"));
    const BigradedDims oracle = window(tor_oracle(alg, left, right, r.cap), r.cap);
    r.add("page equals the resolution", oracle == page.dims());
    r.add("page equals the closed form", tor_closed_form(alg, left, right, r.cap).dims() == page.dims());
  }

  std::vector<DifferentialRule> rules;
  const json diffs = doc.value("differentials", json::array());
  for (const auto& d : diffs)
    rules.push_back(DifferentialRule::on_generator(codec::field(d, "page").get<int>(),
                                                   codec::field(d, "generator").get<std::string>(),
                                                   codec::decode_element(page.spec(), codec::field(d, "target")),
                                                   d.value("gamma", 1)));
  if (doc.contains("family")) {
    std::vector<FamilyEntry> entries;
    for (const auto& e : doc.at("family")) {
      FamilyEntry fe{page.mono(codec::decode_monomial(page.spec(), codec::field(e, "source"))), {}};
      const Element expected = codec::decode_element(page.spec(), e.value("expected", json::array()));
      for (const auto& [m, c] : expected.terms)
        fe.expected = page.add(fe.expected, page.element(page.mono(m), c));
      entries.push_back(std::move(fe));
    }
    const FamilyReport fam = verify_rule_family(page, rules, entries);
    Check& c = r.add("differential family", fam.passed);
    for (const auto& e : fam.entries) c.witnesses.push_back("d(" + e.source + ") = " + e.actual);
  }

  std::optional<Page> einf;
  try {
    einf = run_differential(page, rules);
    r.add("differentials are consistent", true, std::to_string(rules.size()) + " rules");
  } catch (const Error& e) {
    r.add("differentials are consistent", false, e.what());
  }

  if (einf && doc.contains("abutment")) {
    const json& a = doc.at("abutment");
    const AlgebraSpec target = codec::decode_algebra(f, a);
    AbutmentSpec ab{target, {}, decode_spec_page(f, codec::field(doc, "einfty"), r.cap), {}, {}};
    const json filtration = a.value("filtration", json::object());
    for (const auto& [name, s] : filtration.items()) ab.filtration_assignment[name] = s.get<int>();
    for (const auto& [name, e] : codec::field(a, "images").items())
      ab.generator_images[name] = codec::decode_element(target, e);
    std::vector<ExtensionRule> exts;
    const json extensions = doc.value("extensions", json::array());
    for (const auto& e : extensions) {
      ExtensionRule rule;
      rule.name = e.value("name", std::string("extension"));
      for (const auto& fac : codec::field(e, "factors")) rule.factors.emplace_back(decode_claim(fac), fac.value("power", 1));
      rule.result = decode_claim(codec::field(e, "result"));
      exts.push_back(std::move(rule));
    }
    const AbutmentReport rep = compare_abutment(*einf, ab, exts, r.cap);
    Check& c = r.add("E-infinity: dimensions", !rep.first_mismatch);
    for (const auto& d : rep.degrees) c.degrees.push_back({d.n, d.expected, d.actual});
    if (rep.first_mismatch) c.detail = "first mismatch in degree " + std::to_string(*rep.first_mismatch);
    for (const auto& rc : rep.checks)
      if (rc.name != "dimensions") r.add("E-infinity: " + rc.name, rc.passed, rc.residual);
  }
  apply_cap_policy(r);
  return r;
}

}  // namespace

Report run_scenario_file(std::string_view text, std::optional<std::uint32_t> p, std::optional<int> cap) {
  const json doc = codec::parse(text);
  try {
    return run_document(doc, p, cap);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace thhcalc
