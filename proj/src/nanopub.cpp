#include "trustproc/nanopub.hpp"

#include <algorithm>

namespace trustproc {

std::vector<Violation> validate_nanopub(std::span<const Quad> quads,
                                        const Nanopublication& np) {
  std::vector<Violation> violations;

  const Iri* names[4] = {&np.id, &np.assertion, &np.provenance, &np.pubinfo};
  const char* roles[4] = {"id", "assertion", "provenance", "pubinfo"};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (*names[i] == *names[j]) {
        violations.push_back({"graph-names-not-distinct", np.id,
                              std::string(roles[i]) + " and " + roles[j] +
                                  " share <" + names[i]->str() + ">"});
      }
    }
  }

  bool assertion_nonempty =
      std::any_of(quads.begin(), quads.end(),
                  [&](const Quad& q) { return q.graph == np.assertion; });
  if (!assertion_nonempty) {
    violations.push_back({"empty-assertion", np.id,
                          "assertion graph <" + np.assertion.str() + "> has no quads"});
  }

  return violations;
}

}  // namespace trustproc
