#pragma once

// Shared JSON helpers for serialization and scenario files (not installed).

#include "thhcalc/graded_algebra.hpp"
#include "thhcalc/presentation.hpp"

#include <json.hpp>

namespace thhcalc::codec {

using json = nlohmann::ordered_json;

json parse(std::string_view text);
const json& field(const json& j, const char* key);

json encode(const GeneratorSpec& g);
GeneratorSpec decode_generator(const json& j);
std::vector<GeneratorSpec> decode_generators(const json& j);

json encode(const AlgebraSpec& spec);
AlgebraSpec decode_algebra(const PrimeField& f, const json& j);

json encode_monomial(const AlgebraSpec& spec, const Monomial& m);
Monomial decode_monomial(const AlgebraSpec& spec, const json& j);

json encode(const AlgebraSpec& spec, const Element& e);
Element decode_element(const AlgebraSpec& spec, const json& j);

json encode(const Presentation& pres);
Presentation decode_presentation(const PrimeField& f, const json& j);

}  // namespace thhcalc::codec
