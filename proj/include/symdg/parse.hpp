#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "symdg/exterior.hpp"

namespace symdg {

struct ParseError : std::runtime_error {
    size_t position;  // 0-based offset into the input text
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos + 1) + ")"),
          position(pos) {}
};

using ParsedValue = std::variant<Polynomial, DifferentialForm, Polyvector>;

// Grammar (whitespace-insensitive except inside numbers):
//   expr      := ('-')? term (('+'|'-') term)*
//   term      := coeff basis? | basis
//   coeff     := rational ('*'? monom)* | monom+
//   rational  := integer ('/' positive-integer)?
//   monom     := 'x' index ('^' exponent)?
//   formbasis := 'dx' index ('^' 'dx' index)*
//   vecbasis  := '@' index ('^' '@' index)*
// A repeated basis index inside one wedge makes the term vanish; unsorted
// indices are accepted and sign-normalized.
ParsedValue parse_expression(const std::string& text, int dim);

// Same parse with a kind requirement; polynomials promote to 0-forms or
// 0-vectors as needed.
Polynomial parse_polynomial(const std::string& text, int dim);
DifferentialForm parse_form(const std::string& text, int dim);
Polyvector parse_polyvector(const std::string& text, int dim);

}  // namespace symdg
