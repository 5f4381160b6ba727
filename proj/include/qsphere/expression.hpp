#pragma once

// Text syntax for algebra elements:
//   generators  a  a*  b  w  w*      ('*' directly after a or w is the star)
//   scalars     3  1/2  q  q^-4
//   operators   +  -  '*' (spaced) or juxtaposition for products, ^n powers
//   grouping    ( ... )
// Example: "(1/2) (1 + b)",  "q^4 a a* + b^2 - q^4",  "a*a".

#include "qsphere/ncpoly.hpp"

#include <stdexcept>
#include <string_view>

namespace qsphere {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

NCPoly parse_expression(std::string_view text, Alphabet alphabet);

/// Sphere if the text mentions a or b, disk0 if it mentions w, sphere otherwise.
Alphabet detect_alphabet(std::string_view text);

}  // namespace qsphere
