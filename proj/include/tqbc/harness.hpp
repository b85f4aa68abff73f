#pragma once

// Exhaustive verification runs. Each theorem id names a fixed quantification
// (tpo pairs and candidate outputs at a given |W|, or belief states, operators
// and sentences at a given atom count) and every instance in it is checked.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqbc/change.hpp"
#include "tqbc/postulates.hpp"

namespace tqbc {

enum class TheoremId {
  Prop1, Prop2, Prop3, Prop4, Prop5, Prop6, Prop7, Prop8, Prop9, Prop10,
  LexRecovery, PriorityDistinct, Agm,
};

const std::vector<TheoremId>& all_theorems();

/// "prop1" ... "prop10", "lex-recovery", "priority-distinct", "agm".
std::string token(TheoremId t);
/// Also accepts "thm1" (= prop4) and "thm2" (= prop9).
TheoremId parse_theorem_id(std::string_view text);

/// Whether `size` counts worlds or atoms for this theorem.
enum class SizeUnit { Worlds, Atoms };
SizeUnit size_unit(TheoremId t);
std::size_t default_size(TheoremId t);
std::string title(TheoremId t);

/// Largest world count a run may touch: TQBC_MAX_WORLDS when set (at most
/// kMaxEnumerationWorlds), else 4.
std::size_t world_cap();

/// One failed check. Postulate failures carry their counterexample.
struct Violation {
  std::string summary;
  std::optional<Counterexample> counterexample;
};

struct RunReport {
  TheoremId theorem;
  std::size_t size = 0;
  std::string domain;
  std::size_t instances = 0;
  /// Total failures; only the first few are kept in `violations`.
  std::size_t violation_count = 0;
  std::vector<Violation> violations;
  /// Counterexamples the theorem predicts (the negative results).
  std::vector<Counterexample> exhibits;
  std::vector<std::string> notes;
  double wall_seconds = 0.0;
  /// Vocabulary for rendering sentences, for atom-sized runs.
  std::optional<Vocabulary> vocabulary;

  bool pass() const { return violation_count == 0; }
};

/// Throws CapExceededError when the run would exceed world_cap().
RunReport run_theorem(TheoremId t, std::optional<std::size_t> size = std::nullopt);

/// The combinators every "for each TeamQueue combinator" check ranges over:
/// stq, right-biased, tq:12,1, twenty seeded random schedules and one
/// schedule that depends on the input pair.
const std::vector<Combinator>& test_family();

/// Default atom names for a run of the given size: p, q, r, s, t.
Vocabulary default_vocabulary(std::size_t atoms);

}  // namespace tqbc
