#pragma once

// Text and JSON renderings of counterexamples and run reports. Output is a
// pure function of its input, so repeated runs print identical bytes.

#include <string>

#include <json.hpp>

#include "tqbc/harness.hpp"
#include "tqbc/postulates.hpp"

namespace tqbc {

/// {"postulate", "atoms", "state", "sentences", "worlds", "narrative"}.
nlohmann::ordered_json to_json(const Counterexample& cx, const Vocabulary& v);

/// Multi-line text: the state, each sentence as a formula with its models, and the narrative.
std::string render_text(const Counterexample& cx, const Vocabulary& v);

/// Wall time is included only when `timing` is set.
nlohmann::ordered_json to_json(const RunReport& r, bool timing = false);
std::string render_text(const RunReport& r, bool timing = false);

}  // namespace tqbc
