#pragma once

#include <array>
#include <string>
#include <string_view>

#include "ffclass/mumford.hpp"
#include "ffclass/poly.hpp"
#include "ffclass/quadform.hpp"

namespace ffclass {

/// Parse "x^3+x+1", "4x^3+4*x", "0", ... Terms are joined by + or -, each
/// term a decimal coefficient, an optional '*', an optional "x" with an
/// optional "^" exponent; whitespace is ignored, any term order is fine and
/// coefficients reduce mod p. Throws parse_error with the offset.
Poly parse_poly(std::string_view text, const PrimeField& field);

/// Canonical rendering: descending powers, zero terms omitted, unit
/// coefficients omitted except for the constant term; "0" for zero.
std::string to_string(const Poly& poly);

/// Form literal "a,b,c" (three polynomials).
QuadForm parse_form(std::string_view text, const PrimeField& field);
std::array<std::string, 3> form_strings(const QuadForm& q);
std::string to_string(const QuadForm& q); // "(a, b, c)"

/// Ideal literal "u;v".
MumfordIdeal parse_ideal(std::string_view text, const PrimeField& field, const Poly& alpha);
std::string to_string(const MumfordIdeal& ideal); // "u;v"

} // namespace ffclass
