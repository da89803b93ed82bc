#pragma once

namespace trustproc {

// How a claim's evidence list anchors: through at least one evidence claim,
// or only when every (non-dangling) evidence claim anchors.
enum class ChainMode { any, all };

inline const char* to_string(ChainMode m) { return m == ChainMode::any ? "any" : "all"; }

}  // namespace trustproc
