#include "trustproc/term.hpp"

#include <cstdio>

namespace trustproc {

Term Term::iri(Iri value) { return Term(std::variant<Iri, BlankNode, Literal>(std::move(value))); }

Term Term::blank(std::string label) {
  return Term(std::variant<Iri, BlankNode, Literal>(BlankNode{std::move(label)}));
}

Term Term::literal(std::string lexical) {
  return Term(std::variant<Iri, BlankNode, Literal>(
      Literal{std::move(lexical), std::nullopt, std::nullopt}));
}

Term Term::typed_literal(std::string lexical, Iri datatype) {
  return Term(std::variant<Iri, BlankNode, Literal>(
      Literal{std::move(lexical), std::move(datatype), std::nullopt}));
}

Term Term::lang_literal(std::string lexical, std::string lang) {
  return Term(std::variant<Iri, BlankNode, Literal>(
      Literal{std::move(lexical), std::nullopt, std::move(lang)}));
}

std::string escape_literal(std::string_view lexical) {
  std::string out;
  out.reserve(lexical.size() + 2);
  for (char ch : lexical) {
    unsigned char c = static_cast<unsigned char>(ch);
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04X", c);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string Term::to_nquads() const {
  if (is_iri()) return "<" + as_iri().str() + ">";
  if (is_blank()) return "_:" + as_blank().label;
  const Literal& lit = as_literal();
  std::string out = "\"" + escape_literal(lit.lexical) + "\"";
  if (lit.lang) {
    out += "@" + *lit.lang;
  } else if (lit.datatype) {
    out += "^^<" + lit.datatype->str() + ">";
  }
  return out;
}

}  // namespace trustproc
