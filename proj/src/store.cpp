#include "trustproc/store.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

namespace trustproc {

namespace detail {
struct StoreData {
  std::vector<Quad> quads;  // sorted, unique
  std::map<Iri, Nanopublication> nanopubs;
  std::map<Iri, std::vector<std::size_t>> by_graph;
  std::map<std::pair<Iri, Iri>, std::vector<std::size_t>> by_predicate_graph;

  void rebuild_indexes() {
    by_graph.clear();
    by_predicate_graph.clear();
    for (std::size_t i = 0; i < quads.size(); ++i) {
      by_graph[quads[i].graph].push_back(i);
      by_predicate_graph[{quads[i].predicate, quads[i].graph}].push_back(i);
    }
  }
};
}  // namespace detail

using detail::StoreData;

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string msg = "document rejected:";
  for (const Violation& v : violations)
    msg += " [" + v.code + " <" + v.nanopub.str() + ">: " + v.detail + "]";
  return msg;
}

const Iri& rdf_type_iri() {
  static const Iri iri{reserved::rdf_type};
  return iri;
}
const Iri& np_class_iri() {
  static const Iri iri{reserved::nanopublication};
  return iri;
}
const Iri& has_assertion_iri() {
  static const Iri iri{reserved::has_assertion};
  return iri;
}
const Iri& has_provenance_iri() {
  static const Iri iri{reserved::has_provenance};
  return iri;
}
const Iri& has_pubinfo_iri() {
  static const Iri iri{reserved::has_pubinfo};
  return iri;
}

// A quad is part of a head declaration when it lives in its own subject's
// graph and uses one of the reserved predicates.
bool is_head_quad(const Quad& q) {
  if (!q.subject.is_iri() || q.subject.as_iri() != q.graph) return false;
  if (q.predicate == rdf_type_iri()) return q.object.is_iri() && q.object.as_iri() == np_class_iri();
  return q.predicate == has_assertion_iri() || q.predicate == has_provenance_iri() ||
         q.predicate == has_pubinfo_iri();
}

std::vector<Quad> synthesize_head_quads(const Nanopublication& np) {
  Term subject = Term::iri(np.id);
  return {
      Quad(subject, rdf_type_iri(), Term::iri(np_class_iri()), np.id),
      Quad(subject, has_assertion_iri(), Term::iri(np.assertion), np.id),
      Quad(subject, has_provenance_iri(), Term::iri(np.provenance), np.id),
      Quad(subject, has_pubinfo_iri(), Term::iri(np.pubinfo), np.id),
  };
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string utc_now_iso8601() {
  using namespace std::chrono;
  const auto secs = duration_cast<seconds>(system_clock::now().time_since_epoch()).count();
  std::time_t t = static_cast<std::time_t>(secs);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[24];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

ValidationFailed::ValidationFailed(std::vector<Violation> v)
    : Error(join_violations(v)), violations(std::move(v)) {}

// ── Snapshot ────────────────────────────────────────────────────────────────

std::vector<Quad> Snapshot::query(const Pattern& p) const {
  std::vector<Quad> out;
  auto scan = [&](const std::vector<std::size_t>& indexes) {
    for (std::size_t i : indexes)
      if (p.matches(data_->quads[i])) out.push_back(data_->quads[i]);
  };
  if (p.graph && p.predicate) {
    auto it = data_->by_predicate_graph.find({*p.predicate, *p.graph});
    if (it != data_->by_predicate_graph.end()) scan(it->second);
  } else if (p.graph) {
    auto it = data_->by_graph.find(*p.graph);
    if (it != data_->by_graph.end()) scan(it->second);
  } else {
    for (const Quad& q : data_->quads)
      if (p.matches(q)) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::map<Iri, Nanopublication>& Snapshot::nanopubs() const { return data_->nanopubs; }

const Nanopublication* Snapshot::find_nanopub(const Iri& id) const {
  auto it = data_->nanopubs.find(id);
  return it == data_->nanopubs.end() ? nullptr : &it->second;
}

std::vector<Iri> Snapshot::claims() const {
  std::vector<Iri> out;
  out.reserve(data_->nanopubs.size());
  for (const auto& [id, np] : data_->nanopubs) out.push_back(id);
  return out;
}

std::size_t Snapshot::size() const { return data_->quads.size(); }

std::string Snapshot::canonical_nquads() const {
  std::vector<Quad> all = data_->quads;
  for (const auto& [id, np] : data_->nanopubs) {
    auto heads = synthesize_head_quads(np);
    all.insert(all.end(), heads.begin(), heads.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::string out;
  for (const Quad& q : all) {
    out += q.to_nquads();
    out += '\n';
  }
  return out;
}

std::string Snapshot::digest() const {
  std::uint64_t h = fnv1a64(canonical_nquads());
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ── Store ───────────────────────────────────────────────────────────────────

Store::Store() : data_(std::make_shared<StoreData>()) {}

void Store::set_quad_log(std::filesystem::path path) { log_path_ = std::move(path); }

Snapshot Store::snapshot() const { return Snapshot(data_); }

IngestReport Store::ingest_document(std::string_view text) {
  const std::vector<LocatedQuad> parsed = parse_nquads(text);  // may throw SyntaxError

  auto candidate = std::make_shared<StoreData>(*data_);
  IngestReport report;
  std::vector<Violation> violations;

  // Split head-declaration quads from content quads.
  struct HeadParts {
    std::optional<Iri> assertion, provenance, pubinfo;
    bool typed = false;
    bool duplicate_part = false;
  };
  std::map<Iri, HeadParts> heads;
  std::vector<const LocatedQuad*> content;
  std::vector<Quad> seen_heads;
  for (const LocatedQuad& lq : parsed) {
    if (!is_head_quad(lq.quad)) {
      content.push_back(&lq);
      continue;
    }
    if (std::find(seen_heads.begin(), seen_heads.end(), lq.quad) != seen_heads.end())
      continue;  // identical repeated head quad; set semantics
    seen_heads.push_back(lq.quad);
    HeadParts& parts = heads[lq.quad.subject.as_iri()];
    auto set_part = [&](std::optional<Iri>& slot) {
      if (slot)
        parts.duplicate_part = true;
      else
        slot = lq.quad.object.as_iri();
    };
    if (lq.quad.predicate == rdf_type_iri()) {
      parts.typed = true;
    } else if (lq.quad.predicate == has_assertion_iri()) {
      set_part(parts.assertion);
    } else if (lq.quad.predicate == has_provenance_iri()) {
      set_part(parts.provenance);
    } else {
      set_part(parts.pubinfo);
    }
  }

  // Content quads enter the candidate state with set semantics.
  for (const LocatedQuad* lq : content) {
    auto it = std::lower_bound(candidate->quads.begin(), candidate->quads.end(), lq->quad);
    if (it != candidate->quads.end() && *it == lq->quad) {
      ++report.duplicates;
    } else {
      candidate->quads.insert(it, lq->quad);
      ++report.quads_added;
    }
  }

  // Register declared heads (map order keeps this deterministic).
  for (const auto& [id, parts] : heads) {
    if (!parts.typed || !parts.assertion || !parts.provenance || !parts.pubinfo ||
        parts.duplicate_part) {
      violations.push_back({"malformed-head", id,
                            parts.duplicate_part
                                ? "conflicting values within one head declaration"
                                : "head declaration is missing reserved quads"});
      continue;
    }
    Nanopublication np{id, *parts.assertion, *parts.provenance, *parts.pubinfo};
    auto existing = candidate->nanopubs.find(id);
    if (existing != candidate->nanopubs.end()) {
      if (existing->second == np) continue;  // idempotent re-declaration
      violations.push_back({"conflicting-head", id,
                            "nanopub already registered with different graph names"});
      continue;
    }
    auto np_violations = validate_nanopub(candidate->quads, np);
    if (!np_violations.empty()) {
      violations.insert(violations.end(), np_violations.begin(), np_violations.end());
      continue;
    }
    candidate->nanopubs.emplace(id, np);
    ++report.nanopubs_registered;
  }

  if (!violations.empty()) throw ValidationFailed(std::move(violations));

  std::ofstream log;
  if (log_path_) {
    log.open(*log_path_, std::ios::app);
    if (!log) throw IoError("cannot open quad log '" + log_path_->string() + "'");
  }

  candidate->rebuild_indexes();
  data_ = std::move(candidate);

  if (log_path_) {
    log << "# batch " << utc_now_iso8601() << "\n";
    for (const LocatedQuad& lq : parsed) log << lq.quad.to_nquads() << "\n";
  }

  return report;
}

}  // namespace trustproc
