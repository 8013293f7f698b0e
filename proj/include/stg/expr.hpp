#pragma once

#include <string>

#include "stg/graph.hpp"
#include "stg/lpa.hpp"

namespace stg {

// Path algebra expression grammar:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor+                      (juxtaposition multiplies)
//   factor := INT | name ['*'] | '(' expr ')'
// Names are vertices or edges of the graph; the star suffix takes the ghost
// edge. Throws ValidationError with a character position on bad input.
LpaElement<long long> parse_lpa_expression(const Graph& g, const std::string& text);

std::string show_element(const LpaElement<long long>& e);

}  // namespace stg
