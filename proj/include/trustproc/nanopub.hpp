#pragma once

#include <span>
#include <string>
#include <vector>

#include "trustproc/quad.hpp"

namespace trustproc {

// One claim packaged as three named graphs.
struct Nanopublication {
  Iri id;
  Iri assertion;
  Iri provenance;
  Iri pubinfo;

  bool operator==(const Nanopublication&) const = default;
};

// A failed structural invariant. Violations are data, not errors.
struct Violation {
  std::string code;     // e.g. "graph-names-not-distinct", "empty-assertion"
  Iri nanopub;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

// Checks the Nanopublication invariants against a quad set: the three graph
// names pairwise distinct and distinct from the id, and a non-empty
// assertion graph. Returns one violation per failed invariant.
std::vector<Violation> validate_nanopub(std::span<const Quad> quads,
                                        const Nanopublication& np);

}  // namespace trustproc
