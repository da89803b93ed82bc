#include "trustproc/policy_dsl.hpp"
#include "trustproc/term.hpp"

namespace trustproc {
namespace {

bool is_composite(const Condition& c) {
  return std::holds_alternative<AndCond>(c.node) || std::holds_alternative<OrCond>(c.node);
}

std::string quoted(const std::string& s) { return "\"" + escape_literal(s) + "\""; }

std::string angled(const Iri& iri) { return "<" + iri.str() + ">"; }

struct CondPrinter {
  std::string operator()(const SourceIs& a) const { return "source is " + angled(a.agent); }
  std::string operator()(const SourceIn& a) const { return "source in " + a.set_name; }
  std::string operator()(const HasSource&) const { return "has source"; }
  std::string operator()(const HasEvidence&) const { return "has evidence"; }
  std::string operator()(const PublishedAfter& a) const {
    return "published after " + time_literal(a.at);
  }
  std::string operator()(const PublishedBefore& a) const {
    return "published before " + time_literal(a.at);
  }
  std::string operator()(const ChainAnchored& a) const {
    return "chain anchored in " + a.roots_set + " depth " + std::to_string(a.max_depth) +
           " " + to_string(a.mode);
  }
  std::string operator()(const ContextEquals& a) const {
    return "context " + a.key + " = " + quoted(a.value);
  }
  std::string operator()(const ContextDefined& a) const { return "context " + a.key + " defined"; }
  std::string operator()(const AssertionMatches& a) const {
    std::string out = "assertion matches";
    if (a.predicate) out += " pred=" + angled(*a.predicate);
    if (a.object) {
      out += " obj=";
      out += a.object->is_iri() ? angled(a.object->as_iri()) : quoted(a.object->as_literal().lexical);
    }
    return out;
  }
  std::string operator()(const AndCond& a) const { return join(a.operands, " and "); }
  std::string operator()(const OrCond& a) const { return join(a.operands, " or "); }
  std::string operator()(const NotCond& a) const {
    if (!a.operand) return "not ()";
    return "not " + wrap(*a.operand);
  }

  static std::string time_literal(const TimeLiteral& t) {
    return quoted(t.parsed ? t.parsed->to_string() : t.raw);
  }

  // Operands of a boolean connective are parenthesized whenever they are
  // themselves connectives; atoms and "not" stay bare.
  static std::string wrap(const Condition& c) {
    std::string inner = print_condition(c);
    if (is_composite(c)) return "(" + inner + ")";
    return inner;
  }

  static std::string join(const std::vector<Condition>& operands, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < operands.size(); ++i) {
      if (i > 0) out += sep;
      out += wrap(operands[i]);
    }
    return out;
  }
};

}  // namespace

std::string print_condition(const Condition& condition) {
  return std::visit(CondPrinter{}, condition.node);
}

std::string print_policy(const PolicyDoc& doc) {
  std::string out = "policy " + doc.policy.name + " for " + angled(doc.policy.owner) +
                    " default " + to_string(doc.policy.default_verdict) + "\n";
  for (const auto& [name, set] : doc.sets) {
    out += "set " + name + " { ";
    bool first = true;
    for (const Iri& member : set.members) {
      if (!first) out += ", ";
      out += angled(member);
      first = false;
    }
    out += " }\n";
  }
  for (const Rule& rule : doc.policy.rules) {
    out += "rule " + rule.name + " " + to_string(rule.effect) + " when " +
           print_condition(rule.condition) + "\n";
  }
  return out;
}

}  // namespace trustproc
