#include <set>

#include "trustproc/policy_dsl.hpp"

namespace trustproc {
namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::string msg = "policy invalid:";
  for (const Diagnostic& d : diagnostics) {
    msg += " [";
    if (!d.rule.empty()) msg += d.rule + ": ";
    msg += d.reason + "]";
  }
  return msg;
}

struct CondChecker {
  const AgentSetMap& sets;
  const std::string& rule;
  std::vector<Diagnostic>& out;

  void check(const Condition& c) { std::visit(*this, c.node); }

  void require_set(const std::string& name) {
    if (!sets.contains(name))
      out.push_back({rule, "references undefined set '" + name + "'"});
  }

  void operator()(const SourceIs&) {}
  void operator()(const SourceIn& a) { require_set(a.set_name); }
  void operator()(const HasSource&) {}
  void operator()(const HasEvidence&) {}
  void operator()(const PublishedAfter& a) { check_time(a.at); }
  void operator()(const PublishedBefore& a) { check_time(a.at); }
  void operator()(const ChainAnchored& a) {
    require_set(a.roots_set);
    if (a.max_depth < 1) out.push_back({rule, "chain depth must be at least 1"});
  }
  void operator()(const ContextEquals& a) {
    if (a.key.empty()) out.push_back({rule, "empty context key"});
  }
  void operator()(const ContextDefined& a) {
    if (a.key.empty()) out.push_back({rule, "empty context key"});
  }
  void operator()(const AssertionMatches& a) {
    if (!a.predicate && !a.object)
      out.push_back({rule, "assertion pattern binds neither predicate nor object"});
    if (a.object && a.object->is_blank())
      out.push_back({rule, "assertion pattern object cannot be a blank node"});
  }
  void operator()(const AndCond& a) {
    if (a.operands.empty()) out.push_back({rule, "empty conjunction"});
    for (const Condition& c : a.operands) check(c);
  }
  void operator()(const OrCond& a) {
    if (a.operands.empty()) out.push_back({rule, "empty disjunction"});
    for (const Condition& c : a.operands) check(c);
  }
  void operator()(const NotCond& a) {
    if (!a.operand) {
      out.push_back({rule, "negation without operand"});
      return;
    }
    check(*a.operand);
  }

  void check_time(const TimeLiteral& t) {
    if (!t.parsed)
      out.push_back({rule, "timestamp does not parse: '" + t.raw + "'"});
  }
};

}  // namespace

PolicyInvalid::PolicyInvalid(std::vector<Diagnostic> d)
    : Error(join_diagnostics(d)), diagnostics(std::move(d)) {}

std::vector<Diagnostic> check_policy(const Policy& policy, const AgentSetMap& sets) {
  std::vector<Diagnostic> out;
  std::set<std::string> names;
  for (const Rule& rule : policy.rules) {
    if (!names.insert(rule.name).second)
      out.push_back({rule.name, "duplicate rule name"});
    CondChecker checker{sets, rule.name, out};
    checker.check(rule.condition);
  }
  return out;
}

}  // namespace trustproc
