#pragma once

#include <string>

#include "nashforge/polynomial.hpp"

namespace nashforge {

// Parses a polynomial over the ring's variables.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (['*'] factor)*
//   factor := coeff | var ['^' nat] | '(' expr ')'
//   coeff  := int ['/' nat]
//
// Multiplication may be implicit ("3x^2*y" == "3*x^2*y"). Fractional coefficients
// are reduced into the field; a denominator divisible by the characteristic is a
// FieldMismatchError. Unknown identifiers are a ParseError.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace nashforge
