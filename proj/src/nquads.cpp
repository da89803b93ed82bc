#include "trustproc/nquads.hpp"

#include <cctype>

#include "trustproc/errors.hpp"

namespace trustproc {
namespace {

bool blank_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
}

bool lang_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '-';
}

// Appends a Unicode code point as UTF-8.
void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp <= 0x7F) {
    out += static_cast<char>(cp);
  } else if (cp <= 0x7FF) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp <= 0xFFFF) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  // Returns false for blank/comment lines, true with a quad otherwise.
  bool parse(std::vector<LocatedQuad>& out) {
    skip_ws();
    if (done() || peek() == '#') return false;

    Term subject = parse_subject();
    require_ws("predicate");
    Iri predicate = parse_iriref("predicate");
    require_ws("object");
    Term object = parse_object();
    require_ws("graph");
    Iri graph = parse_iriref("graph");
    skip_ws();
    if (done() || peek() != '.') fail("expected '.' terminating the quad");
    ++pos_;
    skip_ws();
    if (!done()) fail("unexpected trailing content after '.'");

    out.push_back({Quad(std::move(subject), std::move(predicate), std::move(object),
                        std::move(graph)),
                   line_no_});
    return true;
  }

 private:
  bool done() const { return pos_ >= line_.size(); }
  char peek() const { return line_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, line_no_, pos_ + 1);
  }

  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  void require_ws(const char* what) {
    if (done() || (peek() != ' ' && peek() != '\t'))
      fail(std::string("expected whitespace before ") + what);
    skip_ws();
  }

  Term parse_subject() {
    if (done()) fail("expected subject");
    if (peek() == '<') return Term::iri(parse_iriref("subject"));
    if (peek() == '_') return parse_blank();
    fail("expected IRI or blank node subject");
  }

  Term parse_object() {
    if (done()) fail("expected object");
    if (peek() == '<') return Term::iri(parse_iriref("object"));
    if (peek() == '_') return parse_blank();
    if (peek() == '"') return parse_literal();
    fail("expected IRI, blank node, or literal object");
  }

  Iri parse_iriref(const char* what) {
    if (done() || peek() != '<') fail(std::string("expected '<' starting ") + what);
    std::size_t start = pos_;
    ++pos_;
    std::string raw;
    while (!done() && peek() != '>') {
      char c = peek();
      if (c == '<' || c == '"' || c == ' ' || c == '\t') fail("invalid character in IRI");
      raw += c;
      ++pos_;
    }
    if (done()) fail("unterminated IRI reference");
    ++pos_;
    try {
      return Iri(raw);
    } catch (const InvalidIri& e) {
      throw SyntaxError(std::string("invalid IRI: ") + e.what(), line_no_, start + 1);
    }
  }

  Term parse_blank() {
    if (pos_ + 1 >= line_.size() || line_[pos_ + 1] != ':')
      fail("expected '_:' starting blank node");
    pos_ += 2;
    std::string label;
    while (!done() && blank_label_char(peek())) {
      label += peek();
      ++pos_;
    }
    if (label.empty()) fail("empty blank node label");
    return Term::blank(std::move(label));
  }

  Term parse_literal() {
    ++pos_;  // opening quote
    std::string lexical;
    while (true) {
      if (done()) fail("unterminated literal");
      char c = peek();
      if (c == '"') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        ++pos_;
        lexical += parse_escape();
        continue;
      }
      lexical += c;
      ++pos_;
    }
    if (!done() && peek() == '@') {
      ++pos_;
      std::string lang;
      while (!done() && lang_char(peek())) {
        lang += peek();
        ++pos_;
      }
      if (lang.empty()) fail("empty language tag");
      return Term::lang_literal(std::move(lexical), std::move(lang));
    }
    if (!done() && peek() == '^') {
      if (pos_ + 1 >= line_.size() || line_[pos_ + 1] != '^')
        fail("expected \"^^\" before datatype IRI");
      pos_ += 2;
      return Term::typed_literal(std::move(lexical), parse_iriref("datatype"));
    }
    return Term::literal(std::move(lexical));
  }

  std::string parse_escape() {
    if (done()) fail("unterminated escape sequence");
    char c = peek();
    ++pos_;
    switch (c) {
      case 't': return "\t";
      case 'b': return "\b";
      case 'n': return "\n";
      case 'r': return "\r";
      case 'f': return "\f";
      case '"': return "\"";
      case '\'': return "'";
      case '\\': return "\\";
      case 'u': return unicode_escape(4);
      case 'U': return unicode_escape(8);
      default: fail("unknown escape sequence");
    }
  }

  std::string unicode_escape(int width) {
    std::uint32_t cp = 0;
    for (int i = 0; i < width; ++i) {
      if (done()) fail("truncated unicode escape");
      char c = peek();
      int v;
      if (c >= '0' && c <= '9') v = c - '0';
      else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
      else fail("invalid hex digit in unicode escape");
      cp = cp * 16 + static_cast<std::uint32_t>(v);
      ++pos_;
    }
    if (cp > 0x10FFFF) fail("unicode escape out of range");
    std::string out;
    append_utf8(out, cp);
    return out;
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<LocatedQuad> parse_nquads(std::string_view text) {
  std::vector<LocatedQuad> quads;
  std::size_t line_no = 1;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    std::string_view line = (end == std::string_view::npos)
                                ? text.substr(begin)
                                : text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    LineParser(line, line_no).parse(quads);
    if (end == std::string_view::npos) break;
    begin = end + 1;
    ++line_no;
  }
  return quads;
}

}  // namespace trustproc
