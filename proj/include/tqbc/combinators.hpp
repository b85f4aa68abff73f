#pragma once

// TeamQueue combinators over pairs of tpos, plus checkers for the properties
// used to characterise them.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqbc/frame.hpp"
#include "tqbc/tpo.hpp"

namespace tqbc {

/// Which queue(s) a TeamQueue step dequeues from: {1}, {2} or {1,2}.
enum class Queues : std::uint8_t { First = 1, Second = 2, Both = 3 };

/// A queue-selection schedule a(1), a(2), ... stored as a finite prefix whose
/// last cell repeats forever. The first cell is always {1,2}.
class ASequence {
 public:
  /// Throws InvalidScheduleError when empty or when the first cell is not Both.
  explicit ASequence(std::vector<Queues> cells);

  /// The all-{1,2} schedule.
  static ASequence synchronous();

  /// Text form: comma-separated "12", "1", "2"; the last cell repeats, e.g. "12,2,1".
  static ASequence parse(std::string_view text);

  /// a(step) for 1-based step.
  Queues at(std::size_t step) const;

  const std::vector<Queues>& cells() const { return cells_; }

  friend bool operator==(const ASequence&, const ASequence&) = default;

 private:
  std::vector<Queues> cells_;
};

std::string to_string(const ASequence& a);

/// Builds <T_1, ..., T_m> with T_i = union over j in a(i) of min(⪯j, W minus earlier cells).
Tpo team_queue_combine(const Tpo& t1, const Tpo& t2, const ASequence& a);

Tpo stq_combine(const Tpo& t1, const Tpo& t2);

/// Schedule <{1,2}, {2}, {2}, ...>.
Tpo right_biased_combine(const Tpo& t1, const Tpo& t2);

/// Reads a schedule off `combined` rank by rank (j is in a(i) iff the ⪯j-minimal
/// remaining worlds all sit in cell i) and returns it only if it is a valid
/// schedule that reproduces `combined`. Presence certifies `combined` is a
/// TeamQueue output for this pair.
std::optional<ASequence> recover_a_sequence(const Tpo& t1, const Tpo& t2, const Tpo& combined);

/// A concrete combinator: STQ, right-biased, a fixed schedule applied to every
/// pair, or a pair-indexed schedule rule.
class Combinator {
 public:
  using ScheduleRule = std::function<ASequence(const Tpo&, const Tpo&)>;

  static Combinator stq();
  static Combinator right_biased();
  static Combinator team_queue(ASequence schedule);
  static Combinator team_queue(std::string name, ScheduleRule rule);

  /// Tokens: "stq", "right-biased", "tq:<schedule>".
  static Combinator parse(std::string_view token);

  const std::string& name() const { return name_; }
  ASequence schedule_for(const Tpo& t1, const Tpo& t2) const { return rule_(t1, t2); }
  Tpo operator()(const Tpo& t1, const Tpo& t2) const { return team_queue_combine(t1, t2, rule_(t1, t2)); }

 private:
  Combinator(std::string name, ScheduleRule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

  std::string name_;
  ScheduleRule rule_;
};

enum class PropertyId { HI, EHI, UB, LB, SPU, WPU, SPUplus, WPUplus, NO, TRI, PAR, SB };

inline constexpr PropertyId kAllProperties[] = {
    PropertyId::HI,  PropertyId::EHI,     PropertyId::UB,      PropertyId::LB,
    PropertyId::SPU, PropertyId::WPU,     PropertyId::SPUplus, PropertyId::WPUplus,
    PropertyId::NO,  PropertyId::TRI,     PropertyId::PAR,     PropertyId::SB};

/// Display label, e.g. "⊕SPU+".
std::string label(PropertyId p);
/// CLI token, e.g. "spu+"; throws FormatError on an unknown token.
PropertyId parse_property_id(std::string_view token);
std::string token(PropertyId p);

/// A falsifying instantiation of a combinator property.
struct PropertyViolation {
  PropertyId property;
  /// The quantified S, for set-quantified properties.
  std::optional<WorldSet> scope;
  /// Quantified worlds in declaration order (x, y, z).
  std::vector<World> worlds;
  /// For the NO property: the index i in {1,2} of the strict premise.
  int side = 0;
  /// For set-quantified properties: min(⪯⊕,S) and the bound it was compared against.
  std::optional<WorldSet> combined_min;
  std::optional<WorldSet> min_first;
  std::optional<WorldSet> min_second;
};

/// Returns the first violation in canonical scan order (worlds by index,
/// sets by bit encoding), or nothing when the property holds.
std::optional<PropertyViolation> check_property(PropertyId p, const Tpo& t1, const Tpo& t2, const Tpo& combined);

/// Convenience: check_property(...) is empty.
inline bool satisfies(PropertyId p, const Tpo& t1, const Tpo& t2, const Tpo& combined) {
  return !check_property(p, t1, t2, combined);
}

std::string describe(const PropertyViolation& v, const Frame& frame);

}  // namespace tqbc
