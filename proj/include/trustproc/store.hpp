#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trustproc/nanopub.hpp"
#include "trustproc/nquads.hpp"

namespace trustproc {

// Reserved IRIs for nanopublication head declarations. A head is declared by
// four quads in the head's own graph (the graph named by the nanopub id):
//   (np, rdf:type, np:Nanopublication, np)
//   (np, np:hasAssertion, g1, np)
//   (np, np:hasProvenance, g2, np)
//   (np, np:hasPublicationInfo, g3, np)
// See docs/vocabulary.md. Head quads are consumed as registration
// directives; only content quads enter the store.
namespace reserved {
inline const char* rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline const char* nanopublication = "http://www.nanopub.org/nschema#Nanopublication";
inline const char* has_assertion = "http://www.nanopub.org/nschema#hasAssertion";
inline const char* has_provenance = "http://www.nanopub.org/nschema#hasProvenance";
inline const char* has_pubinfo = "http://www.nanopub.org/nschema#hasPublicationInfo";
}  // namespace reserved

struct IngestReport {
  std::size_t quads_added = 0;
  std::size_t duplicates = 0;
  std::size_t nanopubs_registered = 0;
  std::vector<Violation> violations;  // empty on success

  bool operator==(const IngestReport&) const = default;
};

// A rejected document; the store is left exactly as it was.
class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(std::vector<Violation> violations);
  std::vector<Violation> violations;
};

namespace detail {
struct StoreData;
}

// Immutable view of a store at an ingestion boundary. Cheap to copy and
// safe to share across threads; two queries on one snapshot always agree.
class Snapshot {
 public:
  // Quads matching the pattern, in canonical order.
  std::vector<Quad> query(const Pattern& p) const;

  const std::map<Iri, Nanopublication>& nanopubs() const;
  const Nanopublication* find_nanopub(const Iri& id) const;
  std::vector<Iri> claims() const;  // sorted nanopub ids

  std::size_t size() const;  // content quad count

  // Canonical serialization: content quads plus synthesized head quads,
  // sorted; the digest is an FNV-1a 64 hash over it, so it is independent
  // of ingestion order.
  std::string canonical_nquads() const;
  std::string digest() const;

 private:
  friend class Store;
  explicit Snapshot(std::shared_ptr<const detail::StoreData> data)
      : data_(std::move(data)) {}
  std::shared_ptr<const detail::StoreData> data_;
};

// In-memory named-graph quad store. Single writer, any number of concurrent
// readers through snapshots. Ingestion is all-or-nothing per document.
class Store {
 public:
  Store();

  // Optional write-through: every accepted batch is appended to the log in
  // N-Quads syntax under a "# batch" comment header.
  void set_quad_log(std::filesystem::path path);

  // Throws SyntaxError (line/column) or ValidationFailed; the store is
  // unchanged on either. Duplicate quads are deduplicated, not errors.
  IngestReport ingest_document(std::string_view text);

  Snapshot snapshot() const;

 private:
  std::shared_ptr<const detail::StoreData> data_;
  std::optional<std::filesystem::path> log_path_;
};

}  // namespace trustproc
