#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trustproc/nanopub.hpp"
#include "trustproc/timestamp.hpp"

namespace trustproc {

// The predicates the extractor looks for. Defaults follow the W3C PROV
// vocabulary; overridable through engine configuration.
struct Vocabulary {
  Iri attribution{"http://www.w3.org/ns/prov#wasAttributedTo"};
  Iri derivation{"http://www.w3.org/ns/prov#wasDerivedFrom"};
  Iri published{"http://www.w3.org/ns/prov#generatedAtTime"};

  bool operator==(const Vocabulary&) const = default;
};

// Trust-relevant metadata of one claim, read from its provenance and
// publication-info graphs only.
struct ClaimMeta {
  Iri claim;
  std::optional<Iri> source;
  std::optional<Timestamp> published_at;
  std::vector<Iri> evidence;          // sorted, deduplicated, no self-references
  std::vector<std::string> warnings;  // dropped self-references, non-IRI terms

  bool operator==(const ClaimMeta&) const = default;
};

enum class MetaIssueKind { ambiguous_source, malformed_timestamp };

struct MetaIssue {
  MetaIssueKind kind;
  std::string detail;

  bool operator==(const MetaIssue&) const = default;
};

// Lenient extraction result: issues are recorded instead of thrown, so the
// trust process stays total over claims with broken metadata.
struct MetaExtraction {
  ClaimMeta meta;
  std::vector<MetaIssue> issues;

  bool ambiguous_source() const;
};

// Strict form; throws AmbiguousSource / MalformedTimestamp.
ClaimMeta extract_meta(std::span<const Quad> quads, const Nanopublication& np,
                       const Vocabulary& vocab);

MetaExtraction extract_meta_lenient(std::span<const Quad> quads,
                                    const Nanopublication& np,
                                    const Vocabulary& vocab);

}  // namespace trustproc
