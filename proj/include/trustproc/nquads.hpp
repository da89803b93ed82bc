#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "trustproc/quad.hpp"

namespace trustproc {

struct LocatedQuad {
  Quad quad;
  std::size_t line;
};

// Parses the N-Quads subset: one quad per line, terms restricted to IRIs,
// blank nodes, and literals with optional datatype or language tag; the
// graph IRI is mandatory; "#" starts a full-line comment.
// Throws SyntaxError with 1-based line/column.
std::vector<LocatedQuad> parse_nquads(std::string_view text);

}  // namespace trustproc
