#include "trustproc/evidence_graph.hpp"

#include <algorithm>

namespace trustproc {

EvidenceGraph::EvidenceGraph(std::map<Iri, EvidenceNode> nodes) : nodes_(std::move(nodes)) {
  for (auto& [id, node] : nodes_) {
    std::sort(node.edges.begin(), node.edges.end(),
              [](const EvidenceEdge& a, const EvidenceEdge& b) { return a.target < b.target; });
    for (EvidenceEdge& e : node.edges)
      if (!nodes_.contains(e.target)) e.dangling = true;
  }
}

EvidenceGraph EvidenceGraph::build(const Snapshot& snap, const Vocabulary& vocab) {
  std::map<Iri, EvidenceNode> nodes;
  for (const auto& [id, np] : snap.nanopubs()) {
    // Metadata lives in the provenance and pubinfo graphs only.
    std::vector<Quad> relevant = snap.query({.predicate = vocab.attribution,
                                             .graph = np.provenance});
    std::vector<Quad> derived = snap.query({.predicate = vocab.derivation,
                                            .graph = np.provenance});
    relevant.insert(relevant.end(), derived.begin(), derived.end());
    MetaExtraction ext = extract_meta_lenient(relevant, np, vocab);

    EvidenceNode node{id, ext.meta.source, ext.ambiguous_source(), {}};
    for (const Iri& target : ext.meta.evidence) node.edges.push_back({target, false});
    nodes.emplace(id, std::move(node));
  }
  return EvidenceGraph(std::move(nodes));
}

const EvidenceNode* EvidenceGraph::find(const Iri& claim) const {
  auto it = nodes_.find(claim);
  return it == nodes_.end() ? nullptr : &it->second;
}

const char* to_string(BlockReason r) {
  switch (r) {
    case BlockReason::cycle: return "cycle";
    case BlockReason::dangling: return "dangling";
    case BlockReason::depth_exceeded: return "depth-exceeded";
    case BlockReason::untrusted_source: return "untrusted-source";
    case BlockReason::no_evidence: return "no-evidence";
  }
  return "?";
}

}  // namespace trustproc
