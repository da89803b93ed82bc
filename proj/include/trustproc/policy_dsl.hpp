#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trustproc/policy.hpp"

namespace trustproc {

// Parses a ".tpol" policy document (grammar in docs/policy_language.md).
// Keywords are case-insensitive; "#" starts a comment. Total over arbitrary
// bytes: either returns a PolicyDoc or throws ParseError.
PolicyDoc parse_policy(std::string_view text);

// Parses a standalone agent-set file: zero or more "set NAME { ... }"
// declarations in the same grammar.
AgentSetMap parse_agent_sets(std::string_view text);

// Semantic checks: referenced agent sets resolve, rule names unique,
// timestamps parse, depths >= 1, assertion patterns bind something.
// Empty result means the policy is evaluable.
std::vector<Diagnostic> check_policy(const Policy& policy, const AgentSetMap& sets);

// Canonical pretty-printer; parse_policy(print_policy(doc)) == doc.
std::string print_policy(const PolicyDoc& doc);

// Canonical rendering of one condition (also used in decision traces).
std::string print_condition(const Condition& condition);

}  // namespace trustproc
