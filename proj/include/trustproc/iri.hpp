#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "trustproc/errors.hpp"

namespace trustproc {

// Absolute IRI, stored in canonical form: surrounding whitespace trimmed,
// scheme and host lowercased, path/query/fragment bytes preserved.
// Equality is byte-exact on the canonical form.
class Iri {
 public:
  explicit Iri(std::string_view raw);  // throws InvalidIri

  const std::string& str() const { return value_; }

  auto operator<=>(const Iri&) const = default;
  bool operator==(const Iri&) const = default;

 private:
  std::string value_;
};

// Canonicalization as a standalone operation; Iri(raw) is equivalent.
Iri canonicalize_iri(std::string_view raw);

}  // namespace trustproc
