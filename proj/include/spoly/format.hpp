#pragma once

#include <string>

#include "spoly/polynomial.hpp"

namespace spoly {

// Thrown by the text parser with a byte position into the input.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

// Text grammar: terms joined by +/-, factors joined by *, exponent with ^.
// Coefficients are `a`, `a+bi`, or `(a+bi)`; variables are z1, z2, ...
// (`z` alone means z1, `i` alone is the imaginary unit). Parenthesized
// subexpressions are accepted, so products of sums parse too.
//
// nvars_hint: 0 infers the variable count from the largest index seen.
Polynomial parse_polynomial(const std::string& text, int nvars_hint = 0);

// Canonical text form. parse_polynomial(format_polynomial(f)) == f exactly.
std::string format_polynomial(const Polynomial& f);

// {"nvars": n, "terms": [{"alpha": [...], "re": x, "im": y}, ...]} with terms
// in graded-lex order.
std::string polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const std::string& json_text);

// Accepts inline grammar or, with a leading '@', a path to a JSON file.
Polynomial load_polynomial_arg(const std::string& arg, int nvars_hint = 0);

std::string format_complex(Cplx c);   // shortest of the grammar forms
Cplx parse_complex(const std::string& text);

}  // namespace spoly
