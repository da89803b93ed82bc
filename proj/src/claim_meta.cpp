#include "trustproc/claim_meta.hpp"

#include <algorithm>

#include "trustproc/errors.hpp"

namespace trustproc {

bool MetaExtraction::ambiguous_source() const {
  return std::any_of(issues.begin(), issues.end(), [](const MetaIssue& i) {
    return i.kind == MetaIssueKind::ambiguous_source;
  });
}

MetaExtraction extract_meta_lenient(std::span<const Quad> quads,
                                    const Nanopublication& np,
                                    const Vocabulary& vocab) {
  MetaExtraction out{ClaimMeta{np.id, std::nullopt, std::nullopt, {}, {}}, {}};
  ClaimMeta& meta = out.meta;
  const Term subject = Term::iri(np.id);

  std::vector<const Term*> sources;
  std::vector<const Term*> times;
  std::vector<const Quad*> evidence;
  for (const Quad& q : quads) {
    if (q.subject != subject) continue;
    if (q.graph == np.provenance) {
      if (q.predicate == vocab.attribution) sources.push_back(&q.object);
      if (q.predicate == vocab.derivation) evidence.push_back(&q);
    }
    if (q.graph == np.pubinfo && q.predicate == vocab.published) times.push_back(&q.object);
  }

  if (sources.size() > 1) {
    out.issues.push_back({MetaIssueKind::ambiguous_source,
                          std::to_string(sources.size()) + " attribution quads"});
  } else if (sources.size() == 1) {
    if (sources[0]->is_iri()) {
      meta.source = sources[0]->as_iri();
    } else {
      meta.warnings.push_back("attribution object is not an IRI; source ignored");
    }
  }

  if (times.size() > 1) {
    out.issues.push_back({MetaIssueKind::malformed_timestamp,
                          "multiple publication-time quads"});
  } else if (times.size() == 1) {
    if (!times[0]->is_literal()) {
      out.issues.push_back({MetaIssueKind::malformed_timestamp,
                            "publication-time object is not a literal"});
    } else if (auto ts = Timestamp::parse(times[0]->as_literal().lexical)) {
      meta.published_at = *ts;
    } else {
      out.issues.push_back({MetaIssueKind::malformed_timestamp,
                            "cannot parse '" + times[0]->as_literal().lexical + "'"});
    }
  }

  for (const Quad* q : evidence) {
    if (!q->object.is_iri()) {
      meta.warnings.push_back("evidence object is not an IRI; dropped");
      continue;
    }
    const Iri& target = q->object.as_iri();
    if (target == np.id) {
      meta.warnings.push_back("self-referential evidence <" + target.str() + "> dropped");
      continue;
    }
    meta.evidence.push_back(target);
  }
  std::sort(meta.evidence.begin(), meta.evidence.end());
  meta.evidence.erase(std::unique(meta.evidence.begin(), meta.evidence.end()),
                      meta.evidence.end());

  return out;
}

ClaimMeta extract_meta(std::span<const Quad> quads, const Nanopublication& np,
                       const Vocabulary& vocab) {
  MetaExtraction ext = extract_meta_lenient(quads, np, vocab);
  for (const MetaIssue& issue : ext.issues) {
    if (issue.kind == MetaIssueKind::ambiguous_source) throw AmbiguousSource(np.id.str());
    if (issue.kind == MetaIssueKind::malformed_timestamp)
      throw MalformedTimestamp("claim <" + np.id.str() + ">: " + issue.detail);
  }
  return ext.meta;
}

}  // namespace trustproc
