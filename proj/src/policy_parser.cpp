#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>

#include "trustproc/errors.hpp"
#include "trustproc/policy_dsl.hpp"

namespace trustproc {
namespace {

enum class Tok { ident, integer, string, iriref, lbrace, rbrace, lparen, rparen, comma, equals, end };

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::integer: return "integer";
    case Tok::string: return "string";
    case Tok::iriref: return "IRI reference";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::equals: return "'='";
    case Tok::end: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::end;
  std::string text;     // ident (original case), string value, or raw IRI
  std::string lowered;  // ident lowered for keyword matching
  std::int64_t number = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

const std::array<const char*, 29> kReserved = {
    "policy", "for",   "default", "set",     "rule",    "accept",  "reject", "when",
    "and",    "or",    "not",     "is",      "in",      "has",     "source", "evidence",
    "published", "after", "before", "chain", "anchored", "depth",  "any",    "all",
    "context", "defined", "assertion", "matches", "pred"};

bool is_reserved(const std::string& lowered) {
  return lowered == "obj" ||
         std::find_if(kReserved.begin(), kReserved.end(), [&](const char* k) {
           return lowered == k;
         }) != kReserved.end();
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '.' || c == '-';
}

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

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws_and_comments();
    Token t;
    t.line = line_;
    t.column = column_;
    if (done()) {
      t.kind = Tok::end;
      return t;
    }
    char c = peek();
    if (ident_start(c)) return lex_ident(t);
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_int(t);
    switch (c) {
      case '"': return lex_string(t);
      case '<': return lex_iriref(t);
      case '{': advance(); t.kind = Tok::lbrace; return t;
      case '}': advance(); t.kind = Tok::rbrace; return t;
      case '(': advance(); t.kind = Tok::lparen; return t;
      case ')': advance(); t.kind = Tok::rparen; return t;
      case ',': advance(); t.kind = Tok::comma; return t;
      case '=': advance(); t.kind = Tok::equals; return t;
      default:
        throw ParseError("unexpected character", line_, column_);
    }
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_ws_and_comments() {
    while (!done()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!done() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token& lex_ident(Token& t) {
    t.kind = Tok::ident;
    while (!done() && ident_char(peek())) {
      t.text += peek();
      advance();
    }
    t.lowered = t.text;
    std::transform(t.lowered.begin(), t.lowered.end(), t.lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return t;
  }

  Token& lex_int(Token& t) {
    t.kind = Tok::integer;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      t.text += peek();
      advance();
    }
    if (t.text.size() > 9) throw ParseError("number too large", t.line, t.column);
    t.number = std::stoll(t.text);
    return t;
  }

  Token& lex_string(Token& t) {
    t.kind = Tok::string;
    advance();  // opening quote
    while (true) {
      if (done()) throw ParseError("unterminated string", t.line, t.column);
      char c = peek();
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\n') throw ParseError("newline in string", line_, column_);
      if (c == '\\') {
        advance();
        lex_escape(t.text);
        continue;
      }
      t.text += c;
      advance();
    }
    return t;
  }

  void lex_escape(std::string& out) {
    if (done()) throw ParseError("unterminated escape", line_, column_);
    char c = peek();
    advance();
    switch (c) {
      case 't': out += '\t'; return;
      case 'b': out += '\b'; return;
      case 'n': out += '\n'; return;
      case 'r': out += '\r'; return;
      case 'f': out += '\f'; return;
      case '"': out += '"'; return;
      case '\'': out += '\''; return;
      case '\\': out += '\\'; return;
      case 'u': lex_unicode(out, 4); return;
      case 'U': lex_unicode(out, 8); return;
      default: throw ParseError("unknown escape sequence", line_, column_);
    }
  }

  void lex_unicode(std::string& out, int width) {
    std::uint32_t cp = 0;
    for (int i = 0; i < width; ++i) {
      if (done()) throw ParseError("truncated unicode escape", line_, column_);
      char c = peek();
      int v;
      if (c >= '0' && c <= '9') v = c - '0';
      else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
      else throw ParseError("invalid hex digit in unicode escape", line_, column_);
      cp = cp * 16 + static_cast<std::uint32_t>(v);
      advance();
    }
    if (cp > 0x10FFFF) throw ParseError("unicode escape out of range", line_, column_);
    append_utf8(out, cp);
  }

  Token& lex_iriref(Token& t) {
    t.kind = Tok::iriref;
    advance();  // '<'
    while (true) {
      if (done()) throw ParseError("unterminated IRI reference", t.line, t.column);
      char c = peek();
      if (c == '>') {
        advance();
        break;
      }
      if (c == '\n') throw ParseError("newline in IRI reference", line_, column_);
      t.text += c;
      advance();
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  AgentSetMap parse_sets_document() {
    AgentSetMap sets;
    while (at_keyword("set")) parse_set(sets);
    if (cur_.kind != Tok::end) fail("expected 'set' or end of input", {"set", "end of input"});
    return sets;
  }

  PolicyDoc parse_document() {
    expect_keyword("policy");
    std::string name = expect_name("policy name");
    expect_keyword("for");
    Iri owner = expect_iriref();
    expect_keyword("default");
    Verdict default_verdict = expect_effect();
    PolicyDoc doc{Policy{std::move(name), std::move(owner), default_verdict, {}}, {}};
    while (at_keyword("set")) parse_set(doc.sets);
    while (at_keyword("rule")) parse_rule(doc);
    if (cur_.kind != Tok::end)
      fail("expected 'set', 'rule', or end of policy", {"set", "rule", "end of input"});
    return doc;
  }

 private:
  void shift() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) {
    std::string got = cur_.kind == Tok::ident ? "'" + cur_.text + "'" : tok_name(cur_.kind);
    throw ParseError(msg + ", got " + got, cur_.line, cur_.column, std::move(expected));
  }

  bool at_keyword(const char* kw) const {
    return cur_.kind == Tok::ident && cur_.lowered == kw;
  }

  void expect_keyword(const char* kw) {
    if (!at_keyword(kw)) fail(std::string("expected '") + kw + "'", {kw});
    shift();
  }

  std::string expect_name(const char* what) {
    if (cur_.kind != Tok::ident) fail(std::string("expected ") + what, {"identifier"});
    if (is_reserved(cur_.lowered))
      fail(std::string("reserved word cannot be used as ") + what, {"identifier"});
    std::string name = cur_.text;
    shift();
    return name;
  }

  Iri expect_iriref() {
    if (cur_.kind != Tok::iriref) fail("expected IRI reference", {"IRI reference"});
    try {
      Iri iri(cur_.text);
      shift();
      return iri;
    } catch (const InvalidIri& e) {
      throw ParseError(std::string("invalid IRI: ") + e.what(), cur_.line, cur_.column);
    }
  }

  std::string expect_string() {
    if (cur_.kind != Tok::string) fail("expected string", {"string"});
    std::string s = cur_.text;
    shift();
    return s;
  }

  Verdict expect_effect() {
    if (at_keyword("accept")) {
      shift();
      return Verdict::accept;
    }
    if (at_keyword("reject")) {
      shift();
      return Verdict::reject;
    }
    fail("expected 'accept' or 'reject'", {"accept", "reject"});
  }

  void parse_set(AgentSetMap& sets) {
    Token set_tok = cur_;
    shift();  // "set"
    AgentSet s;
    s.name = expect_name("set name");
    if (sets.contains(s.name))
      throw ParseError("duplicate set '" + s.name + "'", set_tok.line, set_tok.column);
    if (cur_.kind != Tok::lbrace) fail("expected '{'", {"{"});
    shift();
    s.members.insert(expect_iriref());
    while (cur_.kind == Tok::comma) {
      shift();
      s.members.insert(expect_iriref());
    }
    if (cur_.kind != Tok::rbrace) fail("expected ',' or '}'", {",", "}"});
    shift();
    sets.emplace(s.name, std::move(s));
  }

  void parse_rule(PolicyDoc& doc) {
    shift();  // "rule"
    Rule r;
    r.name = expect_name("rule name");
    r.effect = expect_effect();
    expect_keyword("when");
    r.condition = parse_condition();
    doc.policy.rules.push_back(std::move(r));
  }

  Condition parse_condition() {
    Condition first = parse_conjunction();
    if (!at_keyword("or")) return first;
    OrCond node;
    node.operands.push_back(std::move(first));
    while (at_keyword("or")) {
      shift();
      node.operands.push_back(parse_conjunction());
    }
    return Condition{std::move(node)};
  }

  Condition parse_conjunction() {
    Condition first = parse_unary();
    if (!at_keyword("and")) return first;
    AndCond node;
    node.operands.push_back(std::move(first));
    while (at_keyword("and")) {
      shift();
      node.operands.push_back(parse_unary());
    }
    return Condition{std::move(node)};
  }

  Condition parse_unary() {
    if (at_keyword("not")) {
      shift();
      return make_not(parse_unary());
    }
    if (cur_.kind == Tok::lparen) {
      shift();
      Condition inner = parse_condition();
      if (cur_.kind != Tok::rparen) fail("expected ')'", {")"});
      shift();
      return inner;
    }
    return parse_atom();
  }

  Condition parse_atom() {
    if (at_keyword("source")) {
      shift();
      if (at_keyword("is")) {
        shift();
        return Condition{SourceIs{expect_iriref()}};
      }
      if (at_keyword("in")) {
        shift();
        return Condition{SourceIn{expect_name("set name")}};
      }
      fail("expected 'is' or 'in' after 'source'", {"is", "in"});
    }
    if (at_keyword("has")) {
      shift();
      if (at_keyword("source")) {
        shift();
        return Condition{HasSource{}};
      }
      if (at_keyword("evidence")) {
        shift();
        return Condition{HasEvidence{}};
      }
      fail("expected 'source' or 'evidence' after 'has'", {"source", "evidence"});
    }
    if (at_keyword("published")) {
      shift();
      bool after = at_keyword("after");
      if (!after && !at_keyword("before"))
        fail("expected 'after' or 'before' after 'published'", {"after", "before"});
      shift();
      TimeLiteral at = TimeLiteral::of(expect_string());
      if (after) return Condition{PublishedAfter{std::move(at)}};
      return Condition{PublishedBefore{std::move(at)}};
    }
    if (at_keyword("chain")) {
      shift();
      expect_keyword("anchored");
      expect_keyword("in");
      ChainAnchored c;
      c.roots_set = expect_name("set name");
      expect_keyword("depth");
      if (cur_.kind != Tok::integer) fail("expected depth integer", {"integer"});
      if (cur_.number < 1)
        throw ParseError("chain depth must be at least 1", cur_.line, cur_.column);
      c.max_depth = static_cast<int>(cur_.number);
      shift();
      if (at_keyword("any")) {
        c.mode = ChainMode::any;
      } else if (at_keyword("all")) {
        c.mode = ChainMode::all;
      } else {
        fail("expected 'any' or 'all'", {"any", "all"});
      }
      shift();
      return Condition{std::move(c)};
    }
    if (at_keyword("context")) {
      shift();
      std::string key = expect_name("context key");
      if (at_keyword("defined")) {
        shift();
        return Condition{ContextDefined{std::move(key)}};
      }
      if (cur_.kind != Tok::equals) fail("expected '=' or 'defined'", {"=", "defined"});
      shift();
      if (cur_.kind == Tok::iriref) {
        Iri value = expect_iriref();
        return Condition{ContextEquals{std::move(key), value.str()}};
      }
      return Condition{ContextEquals{std::move(key), expect_string()}};
    }
    if (at_keyword("assertion")) {
      shift();
      expect_keyword("matches");
      AssertionMatches m;
      while (at_keyword("pred") || at_keyword("obj")) {
        bool is_pred = at_keyword("pred");
        Token part_tok = cur_;
        shift();
        if (cur_.kind != Tok::equals) fail("expected '='", {"="});
        shift();
        if (is_pred) {
          if (m.predicate)
            throw ParseError("duplicate 'pred=' part", part_tok.line, part_tok.column);
          m.predicate = expect_iriref();
        } else {
          if (m.object)
            throw ParseError("duplicate 'obj=' part", part_tok.line, part_tok.column);
          if (cur_.kind == Tok::iriref) {
            m.object = Term::iri(expect_iriref());
          } else {
            m.object = Term::literal(expect_string());
          }
        }
      }
      if (!m.predicate && !m.object)
        fail("assertion pattern must bind 'pred=' or 'obj='", {"pred", "obj"});
      return Condition{std::move(m)};
    }
    fail("expected condition",
         {"source", "has", "published", "chain", "context", "assertion", "not", "("});
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace

PolicyDoc parse_policy(std::string_view text) { return Parser(text).parse_document(); }

AgentSetMap parse_agent_sets(std::string_view text) {
  return Parser(text).parse_sets_document();
}

}  // namespace trustproc
