#pragma once

#include <string>

#include "symdg/exterior.hpp"

namespace symdg {

// Deterministic canonical printing. parse_expression(render_canonical(v))
// round-trips for polynomials, forms and polyvectors. Wedge factors appear
// with strictly increasing indices; within one basis, monomials print in
// descending graded-lexicographic order.
std::string render_canonical(const Polynomial& p);
std::string render_canonical(const DifferentialForm& w);
std::string render_canonical(const Polyvector& v);

// Monomial body without coefficient, e.g. "x1^2x3"; "1" for the unit.
std::string render_monomial(const Monomial& m);

std::string render_index_bits(IndexBits bits, Basis basis);

}  // namespace symdg
