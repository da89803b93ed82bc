#include <json.hpp>

#include "trustproc/engine.hpp"

namespace trustproc {
namespace {

using nlohmann::json;

json chain_to_json(const ChainResult& c) {
  json j;
  j["anchored"] = c.anchored;
  j["anchor"] = c.anchor_agent ? json(c.anchor_agent->str()) : json(nullptr);
  j["depth"] = c.depth ? json(*c.depth) : json(nullptr);
  if (c.path) {
    json path = json::array();
    for (const Iri& claim : *c.path) path.push_back(claim.str());
    j["path"] = path;
  } else {
    j["path"] = nullptr;
  }
  json blockers = json::array();
  for (const Blocker& b : c.blockers)
    blockers.push_back({{"claim", b.claim.str()}, {"reason", to_string(b.reason)}});
  j["blockers"] = blockers;
  return j;
}

json decision_to_json(const Decision& d) {
  json j;
  j["verdict"] = to_string(d.verdict);
  j["rule"] = d.matched_rule ? json(*d.matched_rule) : json(nullptr);
  json trace = json::array();
  for (const AtomTrace& t : d.trace) {
    json entry;
    entry["rule"] = t.rule;
    entry["atom"] = t.atom;
    entry["result"] = t.result;
    if (t.chain) entry["chain"] = chain_to_json(*t.chain);
    trace.push_back(entry);
  }
  j["trace"] = trace;
  return j;
}

}  // namespace

std::string trusted_data_report(const TrustedData& data) {
  json report;
  report["agent"] = data.agent.str();
  report["snapshot"] = data.snapshot_digest;
  report["counts"] = {{"accepted", data.accepted.size()},
                      {"rejected", data.decisions.size() - data.accepted.size()},
                      {"total", data.decisions.size()}};
  json accepted = json::array();
  for (const Iri& claim : data.accepted) accepted.push_back(claim.str());
  report["accepted"] = accepted;
  json decisions = json::object();
  for (const auto& [claim, decision] : data.decisions)
    decisions[claim.str()] = decision_to_json(decision);
  report["decisions"] = decisions;
  return report.dump(2) + "\n";
}

std::string explain(const Decision& decision) {
  std::string out = "claim: <" + decision.claim.str() + ">\n";
  out += "verdict: ";
  out += to_string(decision.verdict);
  if (decision.matched_rule) {
    out += " (rule " + *decision.matched_rule + ")\n";
  } else {
    out += " (default; no rule matched)\n";
  }
  out += "trace:\n";
  if (decision.trace.empty()) {
    out += "  (no conditions evaluated)\n";
    return out;
  }
  for (const AtomTrace& t : decision.trace) {
    out += "  " + t.rule + ": " + t.atom + " -> " + (t.result ? "true" : "false") + "\n";
    if (!t.chain) continue;
    const ChainResult& c = *t.chain;
    if (c.anchored) {
      out += "      anchored at <" + c.anchor_agent->str() + ">, depth " +
             std::to_string(*c.depth) + "\n";
      out += "      path:";
      for (std::size_t i = 0; i < c.path->size(); ++i) {
        out += i == 0 ? " " : " -> ";
        out += "<" + (*c.path)[i].str() + ">";
      }
      out += "\n";
    } else {
      out += "      not anchored";
      if (!c.blockers.empty()) {
        out += "; blockers:";
        for (std::size_t i = 0; i < c.blockers.size(); ++i) {
          out += i == 0 ? " " : "; ";
          out += std::string(to_string(c.blockers[i].reason)) + " at <" +
                 c.blockers[i].claim.str() + ">";
        }
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace trustproc
