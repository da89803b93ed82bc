#pragma once

#include <compare>
#include <optional>
#include <string>

#include "trustproc/term.hpp"

namespace trustproc {

// One statement placed in a named graph. Predicates and graph names are
// always IRIs; the subject is an IRI or a blank node.
struct Quad {
  Quad(Term subject, Iri predicate, Term object, Iri graph);

  Term subject;
  Iri predicate;
  Term object;
  Iri graph;

  std::string to_nquads() const;  // "<s> <p> <o> <g> ."

  auto operator<=>(const Quad&) const = default;
  bool operator==(const Quad&) const = default;
};

// Query pattern; absent positions are wildcards.
struct Pattern {
  std::optional<Term> subject;
  std::optional<Iri> predicate;
  std::optional<Term> object;
  std::optional<Iri> graph;

  bool matches(const Quad& q) const;
  bool operator==(const Pattern&) const = default;
};

}  // namespace trustproc
