#pragma once

#include "thhcalc/graded_algebra.hpp"
#include "thhcalc/presentation.hpp"

#include <string>
#include <string_view>

namespace thhcalc {

// Structured text (JSON) encodings. Generators are records
// {name, degree, filtration, kind, height}; elements are lists of
// {coeff, monomial: {generator: exponent}}. Parse failures throw ParseError.

std::string algebra_to_json(const AlgebraSpec& spec);
AlgebraSpec algebra_from_json(const PrimeField& field, std::string_view text);

std::string element_to_json(const AlgebraSpec& spec, const Element& e);
Element element_from_json(const AlgebraSpec& spec, std::string_view text);

std::string presentation_to_json(const Presentation& pres);
Presentation presentation_from_json(const PrimeField& field, std::string_view text);

}  // namespace thhcalc
