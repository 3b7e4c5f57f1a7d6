#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "p4kit/matrix.hpp"

namespace p4kit {

// Polynomial syntax: sums of terms like `3*x0^2*x4 - x1*x2*x3`, with
// parentheses and integer powers of parenthesized factors allowed. Integer
// coefficients are reduced mod p. Throws ParseError (with the line given and
// a 1-based column) or DegreeError for inhomogeneous input.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text,
                            int line = 1);
std::string to_string(const Polynomial& f);

// Ideal files: one generator per line, blank lines and `#` comments ignored.
std::vector<Polynomial> parse_ideal(const RingPtr& ring, std::string_view text);
std::string format_ideal(const std::vector<Polynomial>& gens);

// Matrix files: a header `rows <twists> cols <twists>` followed by one line
// per row with comma-separated entries.
GradedMatrix parse_matrix(const RingPtr& ring, std::string_view text);
std::string format_matrix(const GradedMatrix& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace p4kit
