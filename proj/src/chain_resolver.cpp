#include "trustproc/evidence_graph.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trustproc {
namespace {

// Path-local exploration. Cycle handling depends on what is on the current
// path, so results are not memoized across contexts; the depth bound keeps
// the search small.
class Resolver {
 public:
  Resolver(const EvidenceGraph& g, const std::set<Iri>& roots, int max_depth, ChainMode mode)
      : g_(g), roots_(roots), max_depth_(max_depth), mode_(mode) {}

  ChainResult run(const EvidenceNode& start) {
    ChainResult result;
    auto path = explore(start, 0);
    if (path) {
      result.anchored = true;
      result.anchor_agent = g_.find(path->back())->source;
      result.depth = static_cast<int>(path->size()) - 1;
      result.path = std::move(*path);
    } else {
      result.blockers = std::move(blockers_);
    }
    return result;
  }

 private:
  void block(const Iri& claim, BlockReason reason) {
    Blocker b{claim, reason};
    if (seen_.insert(b).second) blockers_.push_back(b);
  }

  bool source_anchors(const EvidenceNode& node) const {
    return !node.ambiguous_source && node.source && roots_.contains(*node.source);
  }

  // Best anchoring path from node at depth d, or nullopt. Children are
  // visited in lexicographic order and only strictly shorter candidates
  // replace the current best, which yields the shortest path with
  // lexicographic tie-breaking at each branch.
  std::optional<std::vector<Iri>> explore(const EvidenceNode& node, int d) {
    if (source_anchors(node)) return std::vector<Iri>{node.claim};

    const bool source_failed = node.ambiguous_source || node.source.has_value();

    std::vector<const EvidenceNode*> children;
    for (const EvidenceEdge& e : node.edges) {
      if (e.dangling) {
        block(e.target, BlockReason::dangling);
        continue;
      }
      children.push_back(g_.find(e.target));
    }

    std::optional<std::vector<Iri>> best;
    if (children.empty()) {
      block(node.claim, BlockReason::no_evidence);
    } else if (d == max_depth_) {
      block(node.claim, BlockReason::depth_exceeded);
    } else {
      on_path_.insert(node.claim);
      bool all_anchored = true;
      for (const EvidenceNode* child : children) {
        if (on_path_.contains(child->claim)) {
          block(child->claim, BlockReason::cycle);
          all_anchored = false;
          continue;
        }
        auto sub = explore(*child, d + 1);
        if (!sub) {
          all_anchored = false;
          continue;
        }
        if (!best || sub->size() + 1 < best->size()) {
          sub->insert(sub->begin(), node.claim);
          best = std::move(*sub);
        }
      }
      on_path_.erase(node.claim);
      if (mode_ == ChainMode::all && !all_anchored) best.reset();
    }

    if (!best && source_failed) block(node.claim, BlockReason::untrusted_source);
    return best;
  }

  const EvidenceGraph& g_;
  const std::set<Iri>& roots_;
  int max_depth_;
  ChainMode mode_;
  std::set<Iri> on_path_;
  std::vector<Blocker> blockers_;
  std::set<Blocker> seen_;
};

}  // namespace

ChainResult resolve_chain(const EvidenceGraph& g, const Iri& claim,
                          const std::set<Iri>& roots, int max_depth, ChainMode mode) {
  const EvidenceNode* node = g.find(claim);
  if (!node) throw UnknownClaim(claim.str());
  return Resolver(g, roots, max_depth, mode).run(*node);
}

std::map<Iri, ChainResult> resolve_all_serial(const EvidenceGraph& g,
                                              const std::set<Iri>& roots, int max_depth,
                                              ChainMode mode) {
  std::map<Iri, ChainResult> out;
  for (const auto& [claim, node] : g.nodes())
    out.emplace(claim, resolve_chain(g, claim, roots, max_depth, mode));
  return out;
}

std::map<Iri, ChainResult> resolve_all(const EvidenceGraph& g, const std::set<Iri>& roots,
                                       int max_depth, ChainMode mode) {
  std::vector<const Iri*> claims;
  claims.reserve(g.nodes().size());
  for (const auto& [claim, node] : g.nodes()) claims.push_back(&claim);

  std::vector<ChainResult> results(claims.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < claims.size(); ++i) {
    try {
      results[i] = resolve_chain(g, *claims[i], roots, max_depth, mode);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::map<Iri, ChainResult> out;
  for (std::size_t i = 0; i < claims.size(); ++i)
    out.emplace(*claims[i], std::move(results[i]));
  return out;
}

}  // namespace trustproc
