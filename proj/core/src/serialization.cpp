#include "thhcalc/serialization.hpp"

#include "json_codec.hpp"
#include "thhcalc/errors.hpp"

namespace thhcalc {

namespace codec {

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

namespace {

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.is_object() && j.contains(key) ? get<T>(j, key) : fallback;
}

}  // namespace

json encode(const GeneratorSpec& g) {
  json j{{"name", g.name}, {"degree", g.degree}, {"filtration", g.filtration}, {"kind", std::string(to_string(g.kind))}};
  if (g.kind == GeneratorKind::Truncated) j["height"] = g.height;
  return j;
}

GeneratorSpec decode_generator(const json& j) {
  GeneratorSpec g;
  g.name = get<std::string>(j, "name");
  g.degree = get<int>(j, "degree");
  g.filtration = get_or<int>(j, "filtration", 0);
  g.kind = generator_kind_from_string(get<std::string>(j, "kind"));
  g.height = get_or<int>(j, "height", 0);
  return g;
}

std::vector<GeneratorSpec> decode_generators(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "generators must be a list");
  std::vector<GeneratorSpec> out;
  for (const auto& g : j) out.push_back(decode_generator(g));
  return out;
}

json encode(const AlgebraSpec& spec) {
  json gens = json::array();
  for (const auto& g : spec.generators()) gens.push_back(encode(g));
  json j{{"generators", std::move(gens)}};
  if (!spec.coefficients().empty()) {
    json coeffs = json::array();
    for (const auto& c : spec.coefficients())
      coeffs.push_back({{"name", c.name},
                        {"mode", c.mode == CoefficientMode::Symbolic ? "symbolic" : "trivial"},
                        {"connectivity", c.connectivity}});
    j["coefficients"] = std::move(coeffs);
  }
  return j;
}

AlgebraSpec decode_algebra(const PrimeField& f, const json& j) {
  std::vector<CoefficientFactor> coeffs;
  if (j.is_object() && j.contains("coefficients")) {
    for (const auto& c : j.at("coefficients")) {
      const auto mode = get_or<std::string>(c, "mode", "trivial");
      if (mode != "trivial" && mode != "symbolic") throw Error(ErrorCode::ParseError, "unknown coefficient mode '" + mode + "'");
      coeffs.push_back({get<std::string>(c, "name"), mode == "symbolic" ? CoefficientMode::Symbolic : CoefficientMode::Trivial,
                        get_or<int>(c, "connectivity", 0)});
    }
  }
  return make_algebra(f, decode_generators(field(j, "generators")), std::move(coeffs));
}

json encode_monomial(const AlgebraSpec& spec, const Monomial& m) {
  json j = json::object();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) j[spec.generator(i).name] = m[i];
  return j;
}

Monomial decode_monomial(const AlgebraSpec& spec, const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "monomial must be an object of exponents");
  Monomial m = spec.unit();
  for (const auto& [name, e] : j.items()) {
    if (!e.is_number_integer() || e.get<int>() < 0) throw Error(ErrorCode::ParseError, "bad exponent for '" + name + "'");
    m[spec.index_of(name)] = e.get<int>();
  }
  return m;
}

json encode(const AlgebraSpec& spec, const Element& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms) terms.push_back({{"coeff", c}, {"monomial", encode_monomial(spec, m)}});
  return terms;
}

Element decode_element(const AlgebraSpec& spec, const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "element must be a list of terms");
  Element acc = zero(spec);
  for (const auto& t : j) {
    const auto c = get_or<std::int64_t>(t, "coeff", 1);
    const Coeff reduced = spec.field().reduce(c);
    acc = add(spec, acc, monomial(spec, decode_monomial(spec, field(t, "monomial")), reduced));
  }
  return acc;
}

json encode(const Presentation& pres) {
  json j = encode(pres.ambient());
  json rules = json::array();
  for (const auto& r : pres.rules())
    rules.push_back({{"name", r.name}, {"lhs", encode_monomial(pres.ambient(), r.lhs)}, {"rhs", encode(pres.ambient(), r.rhs)}});
  j["rules"] = std::move(rules);
  return j;
}

Presentation decode_presentation(const PrimeField& f, const json& j) {
  AlgebraSpec ambient = decode_algebra(f, j);
  std::vector<RewriteRule> rules;
  if (j.contains("rules"))
    for (const auto& r : j.at("rules"))
      rules.push_back({decode_monomial(ambient, field(r, "lhs")),
                       r.contains("rhs") ? decode_element(ambient, r.at("rhs")) : zero(ambient),
                       get_or<std::string>(r, "name", "")});
  return make_presentation(std::move(ambient), std::move(rules));
}

}  // namespace codec

std::string algebra_to_json(const AlgebraSpec& spec) { return codec::encode(spec).dump(2); }
AlgebraSpec algebra_from_json(const PrimeField& field, std::string_view text) {
  return codec::decode_algebra(field, codec::parse(text));
}

std::string element_to_json(const AlgebraSpec& spec, const Element& e) { return codec::encode(spec, e).dump(); }
Element element_from_json(const AlgebraSpec& spec, std::string_view text) {
  return codec::decode_element(spec, codec::parse(text));
}

std::string presentation_to_json(const Presentation& pres) { return codec::encode(pres).dump(2); }
Presentation presentation_from_json(const PrimeField& field, std::string_view text) {
  return codec::decode_presentation(field, codec::parse(text));
}

}  // namespace thhcalc
