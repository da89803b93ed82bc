// Compares the serial reference against the OpenMP-parallel kernels on a
// synthetic store, and verifies both produce identical results.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "trustproc/engine.hpp"
#include "trustproc/policy_dsl.hpp"
#include "trustproc/store.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace trustproc;

std::string claim_iri(std::size_t i) { return "http://ex.org/np/" + std::to_string(i); }

// Layered citation graph: claim i cites claims with larger indexes, so the
// evidence chains are acyclic with bounded fan-out.
std::string make_document(std::size_t claims, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pct(0, 99);
  std::string doc;
  for (std::size_t i = 0; i < claims; ++i) {
    std::string np = claim_iri(i);
    std::string a = np + "/assertion";
    std::string p = np + "/prov";
    std::string pi = np + "/pubinfo";
    doc += "<" + np + "> <" + reserved::rdf_type + "> <" + reserved::nanopublication +
           "> <" + np + "> .\n";
    doc += "<" + np + "> <" + reserved::has_assertion + "> <" + a + "> <" + np + "> .\n";
    doc += "<" + np + "> <" + reserved::has_provenance + "> <" + p + "> <" + np + "> .\n";
    doc += "<" + np + "> <" + reserved::has_pubinfo + "> <" + pi + "> <" + np + "> .\n";
    doc += "<http://ex.org/fact/" + std::to_string(i) +
           "> <http://ex.org/p/says> \"v" + std::to_string(rng() % 1000) + "\" <" + a + "> .\n";
    if (pct(rng) < 20) {
      doc += "<" + np + "> <http://www.w3.org/ns/prov#wasAttributedTo> <http://ex.org/agent/root"
             + std::to_string(rng() % 4) + "> <" + p + "> .\n";
    } else if (pct(rng) < 70) {
      doc += "<" + np + "> <http://www.w3.org/ns/prov#wasAttributedTo> <http://ex.org/agent/other"
             + std::to_string(rng() % 16) + "> <" + p + "> .\n";
    }
    std::size_t cites = rng() % 3;
    for (std::size_t k = 0; k < cites && i + 1 < claims; ++k) {
      std::size_t target = i + 1 + rng() % (claims - i - 1 > 40 ? 40 : claims - i - 1);
      doc += "<" + np + "> <http://www.w3.org/ns/prov#wasDerivedFrom> <" + claim_iri(target) +
             "> <" + p + "> .\n";
    }
  }
  return doc;
}

const char* kPolicy = R"(
policy bench for <http://ex.org/agent/consumer> default reject
set roots { <http://ex.org/agent/root0>, <http://ex.org/agent/root1>,
            <http://ex.org/agent/root2>, <http://ex.org/agent/root3> }
rule viaChain accept when chain anchored in roots depth 5 any
rule fresh accept when has source and published after "2020-01-01T00:00:00Z"
)";

double seconds(auto fn) {
  auto begin = std::chrono::steady_clock::now();
  fn();
  auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(end - begin).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t claims = argc > 1 ? std::stoul(argv[1]) : 4000;
  unsigned seed = argc > 2 ? static_cast<unsigned>(std::stoul(argv[2])) : 7;

  Store store;
  store.ingest_document(make_document(claims, seed));
  Snapshot snap = store.snapshot();
  PolicyDoc doc = parse_policy(kPolicy);
  Context ctx;

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("claims=%zu threads=%d\n", claims, threads);

  TrustedData serial_data{Iri("urn:x"), "", {}, {}};
  TrustedData parallel_data = serial_data;
  double t_serial = seconds([&] { serial_data = filter_serial(snap, doc.policy, doc.sets, ctx); });
  double t_parallel = seconds([&] { parallel_data = filter(snap, doc.policy, doc.sets, ctx); });
  bool same = serial_data == parallel_data;
  std::printf("filter       serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   %s\n",
              t_serial * 1e3, t_parallel * 1e3, t_serial / t_parallel,
              same ? "identical" : "MISMATCH");

  EvidenceGraph graph = EvidenceGraph::build(snap, Vocabulary{});
  std::set<Iri> roots = doc.sets.at("roots").members;
  std::map<Iri, ChainResult> serial_chains, parallel_chains;
  double c_serial =
      seconds([&] { serial_chains = resolve_all_serial(graph, roots, 5, ChainMode::any); });
  double c_parallel =
      seconds([&] { parallel_chains = resolve_all(graph, roots, 5, ChainMode::any); });
  bool chains_same = serial_chains == parallel_chains;
  std::printf("resolve_all  serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   %s\n",
              c_serial * 1e3, c_parallel * 1e3, c_serial / c_parallel,
              chains_same ? "identical" : "MISMATCH");

  return same && chains_same ? 0 : 1;
}
