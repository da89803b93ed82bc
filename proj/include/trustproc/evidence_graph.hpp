#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "trustproc/chain_mode.hpp"
#include "trustproc/claim_meta.hpp"
#include "trustproc/store.hpp"

namespace trustproc {

// Evidence edge; dangling means the cited claim is not in the store.
struct EvidenceEdge {
  Iri target;
  bool dangling = false;
  bool operator==(const EvidenceEdge&) const = default;
};

struct EvidenceNode {
  Iri claim;
  std::optional<Iri> source;
  bool ambiguous_source = false;  // resolves as untrusted-source
  std::vector<EvidenceEdge> edges;  // sorted by target IRI
  bool operator==(const EvidenceNode&) const = default;
};

// The claim-citation graph of a snapshot: one node per registered nanopub,
// edges from evidence lists. Immutable after build.
class EvidenceGraph {
 public:
  EvidenceGraph() = default;
  explicit EvidenceGraph(std::map<Iri, EvidenceNode> nodes);

  static EvidenceGraph build(const Snapshot& snap, const Vocabulary& vocab);

  const EvidenceNode* find(const Iri& claim) const;
  const std::map<Iri, EvidenceNode>& nodes() const { return nodes_; }

 private:
  std::map<Iri, EvidenceNode> nodes_;
};

enum class BlockReason { cycle, dangling, depth_exceeded, untrusted_source, no_evidence };

const char* to_string(BlockReason r);

struct Blocker {
  Iri claim;
  BlockReason reason;
  auto operator<=>(const Blocker&) const = default;
};

// Outcome of resolving one claim against a root agent set. When anchored,
// path runs from the queried claim to the anchored claim, depth is
// path length - 1, and blockers is empty.
struct ChainResult {
  bool anchored = false;
  std::optional<Iri> anchor_agent;
  std::optional<int> depth;
  std::optional<std::vector<Iri>> path;
  std::vector<Blocker> blockers;
  bool operator==(const ChainResult&) const = default;
};

// Depth-bounded anchoring: a claim anchors at depth d when its source is a
// root, or (d < max_depth) its evidence claims anchor at d+1 — any one of
// them, or all of them, per mode. Claims already on the current path never
// anchor (cycles cannot bootstrap trust). Dangling evidence is skipped for
// anchoring but reported. The reported path is the shortest, ties broken
// by lexicographic claim order at each branch. Throws UnknownClaim.
ChainResult resolve_chain(const EvidenceGraph& g, const Iri& claim,
                          const std::set<Iri>& roots, int max_depth, ChainMode mode);

// Batch form: pointwise equal to resolve_chain per registered claim.
// Claims are independent, so the batch is evaluated in parallel when
// OpenMP is enabled; resolve_all_serial is the reference loop.
std::map<Iri, ChainResult> resolve_all(const EvidenceGraph& g, const std::set<Iri>& roots,
                                       int max_depth, ChainMode mode);
std::map<Iri, ChainResult> resolve_all_serial(const EvidenceGraph& g,
                                              const std::set<Iri>& roots, int max_depth,
                                              ChainMode mode);

}  // namespace trustproc
