#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "trustproc/chain_mode.hpp"
#include "trustproc/quad.hpp"
#include "trustproc/timestamp.hpp"

namespace trustproc {

enum class Verdict { accept, reject };

inline const char* to_string(Verdict v) { return v == Verdict::accept ? "accept" : "reject"; }

// Timestamp literal as written in a policy. The raw form is kept so the
// checker can report unparseable timestamps instead of the parser failing.
struct TimeLiteral {
  std::string raw;
  std::optional<Timestamp> parsed;

  static TimeLiteral of(std::string raw) {
    auto parsed = Timestamp::parse(raw);
    return {std::move(raw), parsed};
  }

  friend bool operator==(const TimeLiteral& a, const TimeLiteral& b) {
    if (a.parsed && b.parsed) return *a.parsed == *b.parsed;
    return a.raw == b.raw;
  }
};

struct Condition;

struct SourceIs {
  Iri agent;
  bool operator==(const SourceIs&) const = default;
};
struct SourceIn {
  std::string set_name;
  bool operator==(const SourceIn&) const = default;
};
struct HasSource {
  bool operator==(const HasSource&) const = default;
};
struct HasEvidence {
  bool operator==(const HasEvidence&) const = default;
};
struct PublishedAfter {
  TimeLiteral at;
  bool operator==(const PublishedAfter&) const = default;
};
struct PublishedBefore {
  TimeLiteral at;
  bool operator==(const PublishedBefore&) const = default;
};
struct ChainAnchored {
  std::string roots_set;
  int max_depth = 1;
  ChainMode mode = ChainMode::any;
  bool operator==(const ChainAnchored&) const = default;
};
struct ContextEquals {
  std::string key;
  std::string value;
  bool operator==(const ContextEquals&) const = default;
};
struct ContextDefined {
  std::string key;
  bool operator==(const ContextDefined&) const = default;
};
// Assertion-graph pattern restricted to predicate and/or object.
struct AssertionMatches {
  std::optional<Iri> predicate;
  std::optional<Term> object;
  bool operator==(const AssertionMatches&) const = default;
};
struct AndCond {
  std::vector<Condition> operands;  // parser always produces >= 2
  bool operator==(const AndCond&) const = default;
};
struct OrCond {
  std::vector<Condition> operands;
  bool operator==(const OrCond&) const = default;
};
struct NotCond {
  std::shared_ptr<const Condition> operand;
  friend bool operator==(const NotCond& a, const NotCond& b);
};

struct Condition {
  // HasSource first keeps Condition default-constructible.
  std::variant<HasSource, HasEvidence, SourceIs, SourceIn, PublishedAfter,
               PublishedBefore, ChainAnchored, ContextEquals, ContextDefined,
               AssertionMatches, AndCond, OrCond, NotCond>
      node;
  bool operator==(const Condition&) const = default;
};

inline bool operator==(const NotCond& a, const NotCond& b) {
  if (!a.operand || !b.operand) return a.operand == b.operand;
  return *a.operand == *b.operand;
}

inline Condition make_not(Condition c) {
  return Condition{NotCond{std::make_shared<const Condition>(std::move(c))}};
}

struct Rule {
  std::string name;
  Verdict effect = Verdict::reject;
  Condition condition;
  bool operator==(const Rule&) const = default;
};

struct AgentSet {
  std::string name;
  std::set<Iri> members;
  bool operator==(const AgentSet&) const = default;
};

using AgentSetMap = std::map<std::string, AgentSet>;

// Ordered first-match rule list with an explicit default verdict.
struct Policy {
  std::string name;
  Iri owner;
  Verdict default_verdict = Verdict::reject;
  std::vector<Rule> rules;
  bool operator==(const Policy&) const = default;
};

// One parsed ".tpol" document: the policy plus its inline agent sets.
struct PolicyDoc {
  Policy policy;
  AgentSetMap sets;
  bool operator==(const PolicyDoc&) const = default;
};

// Semantic problem found by check_policy; rule is empty for policy-level
// diagnostics.
struct Diagnostic {
  std::string rule;
  std::string reason;
  bool operator==(const Diagnostic&) const = default;
};

class PolicyInvalid : public Error {
 public:
  explicit PolicyInvalid(std::vector<Diagnostic> diagnostics);
  std::vector<Diagnostic> diagnostics;
};

}  // namespace trustproc
