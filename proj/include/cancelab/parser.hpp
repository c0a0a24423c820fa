#ifndef CANCELAB_PARSER_HPP
#define CANCELAB_PARSER_HPP

#include <string>
#include <vector>

#include "cancelab/polynomial.hpp"

namespace cancelab {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grammar (whitespace-insensitive):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := coeff | var | '(' expr ')'
//   coeff  := int ('/' posint)? | generator-name
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

// "x; y*z; z*t-1" -> list of polynomials
std::vector<Polynomial> parse_polynomial_list(const std::string& text,
                                              const RingPtr& ring,
                                              char sep = ';');

}  // namespace cancelab

#endif
