#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trustproc/evidence_graph.hpp"
#include "trustproc/policy.hpp"

namespace trustproc {

// Situation the trusting agent is acting in; policies read it through the
// context atoms. Treated as ground truth supplied by the agent.
struct Context {
  std::map<std::string, std::string> entries;
  std::optional<std::string> action_id;

  // "key=value" lines, "#" comments; "action.id" also fills action_id.
  static Context from_text(std::string_view text);

  bool operator==(const Context&) const = default;
};

struct EngineConfig {
  Vocabulary vocab;
  bool operator==(const EngineConfig&) const = default;
};

// One evaluated condition atom, in evaluation order. Chain atoms carry the
// ChainResult that was consulted.
struct AtomTrace {
  std::string rule;
  std::string atom;
  bool result = false;
  std::optional<ChainResult> chain;
  bool operator==(const AtomTrace&) const = default;
};

// Binary verdict with its explanation trace; matched_rule is absent exactly
// when the policy default applied.
struct Decision {
  Iri claim;
  Verdict verdict = Verdict::reject;
  std::optional<std::string> matched_rule;
  std::vector<AtomTrace> trace;

  // Chain results keyed by the index of the trace entry that used them.
  std::map<std::size_t, ChainResult> chain_results() const;

  bool operator==(const Decision&) const = default;
};

// The binary partition for one agent over one snapshot: every registered
// claim gets exactly one decision; accepted claims are those decided accept.
struct TrustedData {
  Iri agent;
  std::string snapshot_digest;
  std::set<Iri> accepted;
  std::map<Iri, Decision> decisions;
  bool operator==(const TrustedData&) const = default;
};

// Evaluates one claim: rules in order, first matching condition decides,
// otherwise the policy default. Atoms over absent metadata evaluate false.
// Throws UnknownClaim / PolicyInvalid.
Decision evaluate_claim(const Snapshot& snap, const Policy& policy, const AgentSetMap& sets,
                        const Context& ctx, const Iri& claim, const EngineConfig& config = {});

// Filters every registered claim; pointwise equal to evaluate_claim. Claims
// are evaluated in parallel when OpenMP is enabled; filter_serial is the
// reference loop and both produce identical TrustedData.
TrustedData filter(const Snapshot& snap, const Policy& policy, const AgentSetMap& sets,
                   const Context& ctx, const EngineConfig& config = {});
TrustedData filter_serial(const Snapshot& snap, const Policy& policy, const AgentSetMap& sets,
                          const Context& ctx, const EngineConfig& config = {});

// Publisher-side filter: same machinery with the publisher as policy owner;
// the requester identity and action id are injected into the context under
// the reserved keys "requester.iri" and "action.id" before evaluation.
// Throws MissingRequester when no requester is given or carried by ctx.
TrustedData publish_filter(const Snapshot& snap, const Policy& publisher_policy,
                           const AgentSetMap& sets, const std::optional<Iri>& requester,
                           const Context& ctx, const EngineConfig& config = {});

// Deterministic human-readable rendering of a decision trace.
std::string explain(const Decision& decision);

// Deterministic JSON report: sorted keys, claims sorted lexicographically,
// snapshot digest included. Identical inputs yield byte-identical text.
std::string trusted_data_report(const TrustedData& data);

}  // namespace trustproc
