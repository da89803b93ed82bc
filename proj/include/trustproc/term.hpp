#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>

#include "trustproc/iri.hpp"

namespace trustproc {

// Blank node label; scoped to the document it was read from.
struct BlankNode {
  std::string label;
  auto operator<=>(const BlankNode&) const = default;
};

// Literal with at most one of datatype / language tag (enforced by the Term
// factories; lang-tagged literals carry no datatype).
struct Literal {
  std::string lexical;
  std::optional<Iri> datatype;
  std::optional<std::string> lang;
  auto operator<=>(const Literal&) const = default;
};

class Term {
 public:
  static Term iri(Iri value);
  static Term blank(std::string label);
  static Term literal(std::string lexical);
  static Term typed_literal(std::string lexical, Iri datatype);
  static Term lang_literal(std::string lexical, std::string lang);

  bool is_iri() const { return std::holds_alternative<Iri>(v_); }
  bool is_blank() const { return std::holds_alternative<BlankNode>(v_); }
  bool is_literal() const { return std::holds_alternative<Literal>(v_); }

  const Iri& as_iri() const { return std::get<Iri>(v_); }
  const BlankNode& as_blank() const { return std::get<BlankNode>(v_); }
  const Literal& as_literal() const { return std::get<Literal>(v_); }

  // Canonical N-Quads token: <iri>, _:label, or "escaped"(@lang|^^<dt>).
  std::string to_nquads() const;

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;

 private:
  explicit Term(std::variant<Iri, BlankNode, Literal> v) : v_(std::move(v)) {}
  std::variant<Iri, BlankNode, Literal> v_;
};

// Escapes a literal's lexical form for N-Quads output.
std::string escape_literal(std::string_view lexical);

}  // namespace trustproc
