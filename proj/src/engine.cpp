#include "trustproc/engine.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>

#include "trustproc/policy_dsl.hpp"

namespace trustproc {
namespace {

// Shared state for one filter call: the evidence graph and chain results
// are built lazily on first use and memoized per (roots, depth, mode).
class EvalSession {
 public:
  EvalSession(const Snapshot& snap, const Policy& policy, const AgentSetMap& sets,
              const Context& ctx, const EngineConfig& config)
      : snap_(snap), policy_(policy), sets_(sets), ctx_(ctx), config_(config) {}

  Decision evaluate(const Iri& claim) {
    const Nanopublication* np = snap_.find_nanopub(claim);
    if (!np) throw UnknownClaim(claim.str());

    Decision decision{claim};
    ClaimFacts facts = gather_facts(*np);
    for (const Rule& rule : policy_.rules) {
      if (eval_condition(rule.condition, rule.name, facts, decision)) {
        decision.verdict = rule.effect;
        decision.matched_rule = rule.name;
        return decision;
      }
    }
    decision.verdict = policy_.default_verdict;
    return decision;
  }

 private:
  struct ClaimFacts {
    const Nanopublication* np = nullptr;
    std::optional<Iri> source;  // absent when missing or ambiguous
    std::optional<Timestamp> published_at;
    std::vector<Iri> evidence;
  };

  ClaimFacts gather_facts(const Nanopublication& np) {
    std::vector<Quad> relevant =
        snap_.query({.predicate = config_.vocab.attribution, .graph = np.provenance});
    std::vector<Quad> derived =
        snap_.query({.predicate = config_.vocab.derivation, .graph = np.provenance});
    std::vector<Quad> published =
        snap_.query({.predicate = config_.vocab.published, .graph = np.pubinfo});
    relevant.insert(relevant.end(), derived.begin(), derived.end());
    relevant.insert(relevant.end(), published.begin(), published.end());
    MetaExtraction ext = extract_meta_lenient(relevant, np, config_.vocab);

    ClaimFacts facts;
    facts.np = &np;
    if (!ext.ambiguous_source()) facts.source = ext.meta.source;
    facts.published_at = ext.meta.published_at;
    facts.evidence = ext.meta.evidence;
    return facts;
  }

  // Chain results are computed lazily per (roots, depth, mode) and shared
  // by every claim in this filter call. Within one call the set name
  // resolves to a fixed member set, so the name can stand in for it.
  const std::map<Iri, ChainResult>& chains_for(const ChainAnchored& atom) {
    ChainKey key{atom.roots_set, atom.max_depth, atom.mode};
    {
      std::shared_lock lock(mutex_);
      auto it = chain_cache_.find(key);
      if (it != chain_cache_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = chain_cache_.find(key);
    if (it == chain_cache_.end()) {
      if (!graph_)
        graph_ = std::make_unique<EvidenceGraph>(EvidenceGraph::build(snap_, config_.vocab));
      // check_policy guarantees the set resolves.
      const std::set<Iri>& roots = sets_.find(atom.roots_set)->second.members;
      it = chain_cache_
               .emplace(std::move(key),
                        resolve_all_serial(*graph_, roots, atom.max_depth, atom.mode))
               .first;
    }
    return it->second;
  }

  bool eval_condition(const Condition& cond, const std::string& rule, const ClaimFacts& facts,
                      Decision& decision) {
    return std::visit(
        [&](const auto& node) { return eval_node(node, rule, facts, decision); }, cond.node);
  }

  bool record(const auto& atom, const std::string& rule, Decision& decision, bool result,
              std::optional<ChainResult> chain = std::nullopt) {
    decision.trace.push_back(
        {rule, print_condition(Condition{atom}), result, std::move(chain)});
    return result;
  }

  bool eval_node(const SourceIs& a, const std::string& rule, const ClaimFacts& facts,
                 Decision& d) {
    return record(a, rule, d, facts.source && *facts.source == a.agent);
  }
  bool eval_node(const SourceIn& a, const std::string& rule, const ClaimFacts& facts,
                 Decision& d) {
    bool result = false;
    if (facts.source) {
      auto it = sets_.find(a.set_name);
      result = it != sets_.end() && it->second.members.contains(*facts.source);
    }
    return record(a, rule, d, result);
  }
  bool eval_node(const HasSource& a, const std::string& rule, const ClaimFacts& facts,
                 Decision& d) {
    return record(a, rule, d, facts.source.has_value());
  }
  bool eval_node(const HasEvidence& a, const std::string& rule, const ClaimFacts& facts,
                 Decision& d) {
    return record(a, rule, d, !facts.evidence.empty());
  }
  bool eval_node(const PublishedAfter& a, const std::string& rule, const ClaimFacts& facts,
                 Decision& d) {
    bool result = facts.published_at && a.at.parsed && *facts.published_at > *a.at.parsed;
    return record(a, rule, d, result);
  }
  bool eval_node(const PublishedBefore& a, const std::string& rule, const ClaimFacts& facts,
                 Decision& d) {
    bool result = facts.published_at && a.at.parsed && *facts.published_at < *a.at.parsed;
    return record(a, rule, d, result);
  }
  bool eval_node(const ChainAnchored& a, const std::string& rule, const ClaimFacts& facts,
                 Decision& d) {
    const auto& chains = chains_for(a);
    auto it = chains.find(facts.np->id);
    ChainResult chain = it == chains.end() ? ChainResult{} : it->second;
    bool result = chain.anchored;
    return record(a, rule, d, result, std::move(chain));
  }
  bool eval_node(const ContextEquals& a, const std::string& rule, const ClaimFacts&,
                 Decision& d) {
    auto it = ctx_.entries.find(a.key);
    return record(a, rule, d, it != ctx_.entries.end() && it->second == a.value);
  }
  bool eval_node(const ContextDefined& a, const std::string& rule, const ClaimFacts&,
                 Decision& d) {
    return record(a, rule, d, ctx_.entries.contains(a.key));
  }
  bool eval_node(const AssertionMatches& a, const std::string& rule, const ClaimFacts& facts,
                 Decision& d) {
    Pattern p;
    p.predicate = a.predicate;
    p.object = a.object;
    p.graph = facts.np->assertion;
    return record(a, rule, d, !snap_.query(p).empty());
  }
  bool eval_node(const AndCond& a, const std::string& rule, const ClaimFacts& facts,
                 Decision& d) {
    for (const Condition& c : a.operands)
      if (!eval_condition(c, rule, facts, d)) return false;  // short-circuit
    return true;
  }
  bool eval_node(const OrCond& a, const std::string& rule, const ClaimFacts& facts,
                 Decision& d) {
    for (const Condition& c : a.operands)
      if (eval_condition(c, rule, facts, d)) return true;
    return false;
  }
  bool eval_node(const NotCond& a, const std::string& rule, const ClaimFacts& facts,
                 Decision& d) {
    if (!a.operand) return false;
    return !eval_condition(*a.operand, rule, facts, d);
  }

  struct ChainKey {
    std::string roots_set;
    int depth;
    ChainMode mode;
    auto operator<=>(const ChainKey&) const = default;
  };

  const Snapshot& snap_;
  const Policy& policy_;
  const AgentSetMap& sets_;
  const Context& ctx_;
  const EngineConfig& config_;

  std::shared_mutex mutex_;
  std::unique_ptr<EvidenceGraph> graph_;
  std::map<ChainKey, std::map<Iri, ChainResult>> chain_cache_;
};

TrustedData run_filter(const Snapshot& snap, const Policy& policy, const AgentSetMap& sets,
                       const Context& ctx, const EngineConfig& config, bool parallel) {
  auto diagnostics = check_policy(policy, sets);
  if (!diagnostics.empty()) throw PolicyInvalid(std::move(diagnostics));

  EvalSession session(snap, policy, sets, ctx, config);
  std::vector<Iri> claims = snap.claims();
  std::vector<std::optional<Decision>> decisions(claims.size());

  if (parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < claims.size(); ++i) {
      try {
        decisions[i] = session.evaluate(claims[i]);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::size_t i = 0; i < claims.size(); ++i) decisions[i] = session.evaluate(claims[i]);
  }

  TrustedData out{policy.owner, snap.digest(), {}, {}};
  for (std::size_t i = 0; i < claims.size(); ++i) {
    if (decisions[i]->verdict == Verdict::accept) out.accepted.insert(claims[i]);
    out.decisions.emplace(claims[i], std::move(*decisions[i]));
  }
  return out;
}

}  // namespace

Context Context::from_text(std::string_view text) {
  Context ctx;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    std::string_view line = (end == std::string_view::npos)
                                ? text.substr(begin)
                                : text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      std::size_t eq = line.find('=');
      if (eq != std::string_view::npos) {
        std::string key(line.substr(first, eq - first));
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        std::string_view value = line.substr(eq + 1);
        std::size_t vb = value.find_first_not_of(" \t");
        value = vb == std::string_view::npos ? std::string_view{} : value.substr(vb);
        while (!value.empty() && (value.back() == ' ' || value.back() == '\t'))
          value.remove_suffix(1);
        if (!key.empty()) ctx.entries[key] = std::string(value);
      }
    }
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  auto it = ctx.entries.find("action.id");
  if (it != ctx.entries.end()) ctx.action_id = it->second;
  return ctx;
}

std::map<std::size_t, ChainResult> Decision::chain_results() const {
  std::map<std::size_t, ChainResult> out;
  for (std::size_t i = 0; i < trace.size(); ++i)
    if (trace[i].chain) out.emplace(i, *trace[i].chain);
  return out;
}

Decision evaluate_claim(const Snapshot& snap, const Policy& policy, const AgentSetMap& sets,
                        const Context& ctx, const Iri& claim, const EngineConfig& config) {
  auto diagnostics = check_policy(policy, sets);
  if (!diagnostics.empty()) throw PolicyInvalid(std::move(diagnostics));
  return EvalSession(snap, policy, sets, ctx, config).evaluate(claim);
}

TrustedData filter(const Snapshot& snap, const Policy& policy, const AgentSetMap& sets,
                   const Context& ctx, const EngineConfig& config) {
  return run_filter(snap, policy, sets, ctx, config, true);
}

TrustedData filter_serial(const Snapshot& snap, const Policy& policy, const AgentSetMap& sets,
                          const Context& ctx, const EngineConfig& config) {
  return run_filter(snap, policy, sets, ctx, config, false);
}

TrustedData publish_filter(const Snapshot& snap, const Policy& publisher_policy,
                           const AgentSetMap& sets, const std::optional<Iri>& requester,
                           const Context& ctx, const EngineConfig& config) {
  Context augmented = ctx;
  if (requester) {
    augmented.entries["requester.iri"] = requester->str();
  } else if (!augmented.entries.contains("requester.iri")) {
    throw MissingRequester();
  }
  if (augmented.action_id) augmented.entries.emplace("action.id", *augmented.action_id);
  return filter(snap, publisher_policy, sets, augmented, config);
}

}  // namespace trustproc
