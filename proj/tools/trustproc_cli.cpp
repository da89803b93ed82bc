// Command-line surface: ingest, filter, explain, policy-check.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trustproc/engine.hpp"
#include "trustproc/policy_dsl.hpp"
#include "trustproc/store.hpp"

namespace {

using namespace trustproc;

// Exit codes: 0 ok, 1 data error, 2 policy error, 3 I/O error.
constexpr int kOk = 0;
constexpr int kDataError = 1;
constexpr int kPolicyError = 2;
constexpr int kIoError = 3;

struct Options {
  std::vector<std::string> ingest;
  std::string policy_path;
  std::string sets_path;
  std::string context_path;
  std::string roots_set;
  std::string out_path;
  std::string quad_log;
  std::string explain_claim;
  std::string vocab_attribution;
  std::string vocab_derivation;
  std::string vocab_published;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("error while writing '" + path + "'");
}

EngineConfig engine_config(const Options& opt) {
  EngineConfig config;
  if (!opt.vocab_attribution.empty()) config.vocab.attribution = Iri(opt.vocab_attribution);
  if (!opt.vocab_derivation.empty()) config.vocab.derivation = Iri(opt.vocab_derivation);
  if (!opt.vocab_published.empty()) config.vocab.published = Iri(opt.vocab_published);
  return config;
}

// Ingests every file; prints one report line per accepted document.
// Returns false if any document was rejected.
bool ingest_all(Store& store, const Options& opt) {
  bool ok = true;
  for (const std::string& path : opt.ingest) {
    try {
      IngestReport report = store.ingest_document(read_file(path));
      std::cout << path << ": added " << report.quads_added << " quads, "
                << report.duplicates << " duplicates, " << report.nanopubs_registered
                << " nanopubs" << std::endl;
    } catch (const SyntaxError& e) {
      std::cerr << path << ":" << e.what() << std::endl;
      ok = false;
    } catch (const ValidationFailed& e) {
      std::cerr << path << ": " << e.what() << std::endl;
      ok = false;
    }
  }
  return ok;
}

// Loads the policy document plus an optional standalone sets file.
PolicyDoc load_policy(const Options& opt) {
  PolicyDoc doc = parse_policy(read_file(opt.policy_path));
  if (!opt.sets_path.empty()) {
    AgentSetMap extra = parse_agent_sets(read_file(opt.sets_path));
    for (auto& [name, set] : extra) {
      if (doc.sets.contains(name))
        throw PolicyInvalid({{"", "set '" + name + "' defined in both policy and sets file"}});
      doc.sets.emplace(name, std::move(set));
    }
  }
  auto diagnostics = check_policy(doc.policy, doc.sets);
  if (!diagnostics.empty()) throw PolicyInvalid(std::move(diagnostics));
  if (!opt.roots_set.empty() && !doc.sets.contains(opt.roots_set))
    throw PolicyInvalid({{"", "roots set '" + opt.roots_set + "' is not declared"}});
  return doc;
}

Context load_context(const Options& opt) {
  if (opt.context_path.empty()) return {};
  return Context::from_text(read_file(opt.context_path));
}

int cmd_ingest(const Options& opt) {
  Store store;
  if (!opt.quad_log.empty()) store.set_quad_log(opt.quad_log);
  return ingest_all(store, opt) ? kOk : kDataError;
}

int cmd_filter(const Options& opt) {
  Store store;
  if (!opt.quad_log.empty()) store.set_quad_log(opt.quad_log);
  if (!ingest_all(store, opt)) return kDataError;
  PolicyDoc doc = load_policy(opt);
  Context ctx = load_context(opt);

  TrustedData data = filter(store.snapshot(), doc.policy, doc.sets, ctx, engine_config(opt));
  std::string report = trusted_data_report(data);
  if (!opt.out_path.empty())
    write_file(opt.out_path, report);
  else
    std::cout << report;

  if (!opt.roots_set.empty())
    std::cout << "roots set: " << opt.roots_set << " ("
              << doc.sets.at(opt.roots_set).members.size() << " members)" << std::endl;
  std::cout << "accepted " << data.accepted.size() << " / rejected "
            << (data.decisions.size() - data.accepted.size()) << " of "
            << data.decisions.size() << std::endl;
  return kOk;
}

int cmd_explain(const Options& opt) {
  Store store;
  if (!ingest_all(store, opt)) return kDataError;
  PolicyDoc doc = load_policy(opt);
  Context ctx = load_context(opt);
  Decision decision = evaluate_claim(store.snapshot(), doc.policy, doc.sets, ctx,
                                     Iri(opt.explain_claim), engine_config(opt));
  std::cout << explain(decision);
  return kOk;
}

int cmd_policy_check(const Options& opt) {
  PolicyDoc doc = load_policy(opt);
  std::cout << "policy " << doc.policy.name << " ok (" << doc.policy.rules.size()
            << " rules, " << doc.sets.size() << " sets)" << std::endl;
  return kOk;
}

void add_vocab_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--vocab-attribution", opt.vocab_attribution,
                  "Attribution predicate IRI (default: prov:wasAttributedTo)");
  cmd->add_option("--vocab-derivation", opt.vocab_derivation,
                  "Derivation predicate IRI (default: prov:wasDerivedFrom)");
  cmd->add_option("--vocab-published", opt.vocab_published,
                  "Publication-time predicate IRI (default: prov:generatedAtTime)");
}

void add_data_flags(CLI::App* cmd, Options& opt, bool required) {
  auto* o = cmd->add_option("--ingest", opt.ingest, "Quad documents to ingest (N-Quads subset)");
  if (required) o->required();
}

void add_policy_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--policy", opt.policy_path, "Policy file (.tpol)")->required();
  cmd->add_option("--sets", opt.sets_path, "Standalone agent-set declarations");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Provenance-aware trust-process engine"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* ingest = app.add_subcommand("ingest", "Parse and validate quad documents");
  add_data_flags(ingest, opt, true);
  ingest->add_option("--quad-log", opt.quad_log, "Append accepted batches to this log file");
  ingest->set_config("--config");

  CLI::App* filter_cmd = app.add_subcommand("filter", "Produce the trusted-data partition");
  add_data_flags(filter_cmd, opt, true);
  add_policy_flags(filter_cmd, opt);
  filter_cmd->add_option("--context", opt.context_path, "Context file (key=value lines)");
  filter_cmd->add_option("--roots-set", opt.roots_set,
                         "Named set that must be declared; echoed in the summary");
  filter_cmd->add_option("--out", opt.out_path, "Report output path (stdout when absent)");
  filter_cmd->add_option("--quad-log", opt.quad_log, "Append accepted batches to this log file");
  add_vocab_flags(filter_cmd, opt);
  filter_cmd->set_config("--config");

  CLI::App* explain_cmd = app.add_subcommand("explain", "Explain the decision for one claim");
  add_data_flags(explain_cmd, opt, true);
  add_policy_flags(explain_cmd, opt);
  explain_cmd->add_option("--context", opt.context_path, "Context file (key=value lines)");
  explain_cmd->add_option("--explain", opt.explain_claim, "Claim IRI to explain")->required();
  add_vocab_flags(explain_cmd, opt);
  explain_cmd->set_config("--config");

  CLI::App* check = app.add_subcommand("policy-check", "Parse and check a policy");
  add_policy_flags(check, opt);
  check->set_config("--config");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) return cmd_ingest(opt);
    if (filter_cmd->parsed()) return cmd_filter(opt);
    if (explain_cmd->parsed()) return cmd_explain(opt);
    return cmd_policy_check(opt);
  } catch (const ParseError& e) {
    std::cerr << "policy error: " << e.what() << std::endl;
    return kPolicyError;
  } catch (const PolicyInvalid& e) {
    std::cerr << "policy error: " << e.what() << std::endl;
    return kPolicyError;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << std::endl;
    return kIoError;
  } catch (const Error& e) {
    // SyntaxError, ValidationFailed, UnknownClaim, InvalidIri, ...
    std::cerr << "data error: " << e.what() << std::endl;
    return kDataError;
  }
}
