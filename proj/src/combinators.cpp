#include "tqbc/combinators.hpp"

#include <sstream>

#include "tqbc/error.hpp"

namespace tqbc {

// ---------------------------------------------------------------- ASequence

ASequence::ASequence(std::vector<Queues> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw InvalidScheduleError("a schedule needs at least one cell");
  for (Queues q : cells_) {
    if (q != Queues::First && q != Queues::Second && q != Queues::Both) {
      throw InvalidScheduleError("schedule cells must be nonempty subsets of {1,2}");
    }
  }
  if (cells_.front() != Queues::Both) throw InvalidScheduleError("a schedule must start with {1,2}");
}

ASequence ASequence::synchronous() { return ASequence({Queues::Both}); }

ASequence ASequence::parse(std::string_view text) {
  std::vector<Queues> cells;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (piece == "12" || piece == "21") {
      cells.push_back(Queues::Both);
    } else if (piece == "1") {
      cells.push_back(Queues::First);
    } else if (piece == "2") {
      cells.push_back(Queues::Second);
    } else {
      throw InvalidScheduleError("bad schedule cell '" + std::string(piece) + "' (expected 12, 1 or 2)");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ASequence(std::move(cells));
}

Queues ASequence::at(std::size_t step) const {
  if (step == 0) throw InvalidScheduleError("schedule steps are 1-based");
  return step <= cells_.size() ? cells_[step - 1] : cells_.back();
}

std::string to_string(const ASequence& a) {
  std::string out;
  for (Queues q : a.cells()) {
    if (!out.empty()) out.push_back(',');
    out += q == Queues::Both ? "12" : q == Queues::First ? "1" : "2";
  }
  return out;
}

// ---------------------------------------------------------------- construction

namespace {

void require_same_worlds(const Tpo& a, const Tpo& b) {
  if (a.world_count() != b.world_count()) throw InvalidTpoError("tpos range over different world sets");
}

bool uses(Queues q, int j) { return (static_cast<int>(q) & j) != 0; }

}  // namespace

Tpo team_queue_combine(const Tpo& t1, const Tpo& t2, const ASequence& a) {
  require_same_worlds(t1, t2);
  std::vector<WorldSet> cells;
  WorldSet remaining = t1.universe();
  for (std::size_t step = 1; !remaining.empty(); ++step) {
    const Queues q = a.at(step);
    WorldSet cell = WorldSet::none(remaining.universe());
    if (uses(q, 1)) cell |= t1.min(remaining);
    if (uses(q, 2)) cell |= t2.min(remaining);
    cells.push_back(cell);
    remaining -= cell;
  }
  return Tpo(std::move(cells));
}

Tpo stq_combine(const Tpo& t1, const Tpo& t2) { return team_queue_combine(t1, t2, ASequence::synchronous()); }

Tpo right_biased_combine(const Tpo& t1, const Tpo& t2) {
  static const ASequence schedule({Queues::Both, Queues::Second});
  return team_queue_combine(t1, t2, schedule);
}

std::optional<ASequence> recover_a_sequence(const Tpo& t1, const Tpo& t2, const Tpo& combined) {
  require_same_worlds(t1, t2);
  require_same_worlds(t1, combined);
  std::vector<Queues> cells;
  WorldSet remaining = combined.universe();
  for (const WorldSet& cell : combined.cells()) {
    int members = 0;
    if (t1.min(remaining).subset_of(cell)) members |= 1;
    if (t2.min(remaining).subset_of(cell)) members |= 2;
    if (members == 0) return std::nullopt;  // (a1)
    cells.push_back(static_cast<Queues>(members));
    remaining -= cell;
  }
  if (cells.front() != Queues::Both) return std::nullopt;  // (a2)
  ASequence schedule(std::move(cells));
  if (team_queue_combine(t1, t2, schedule) != combined) return std::nullopt;
  return schedule;
}

// ---------------------------------------------------------------- Combinator

Combinator Combinator::stq() {
  return Combinator("stq", [](const Tpo&, const Tpo&) { return ASequence::synchronous(); });
}

Combinator Combinator::right_biased() {
  return Combinator("right-biased", [](const Tpo&, const Tpo&) { return ASequence({Queues::Both, Queues::Second}); });
}

Combinator Combinator::team_queue(ASequence schedule) {
  std::string name = "tq:" + to_string(schedule);
  return Combinator(std::move(name), [s = std::move(schedule)](const Tpo&, const Tpo&) { return s; });
}

Combinator Combinator::team_queue(std::string name, ScheduleRule rule) {
  return Combinator(std::move(name), std::move(rule));
}

Combinator Combinator::parse(std::string_view token) {
  if (token == "stq") return stq();
  if (token == "right-biased") return right_biased();
  if (token.substr(0, 3) == "tq:") return team_queue(ASequence::parse(token.substr(3)));
  throw FormatError("unknown combinator '" + std::string(token) + "' (expected stq, right-biased or tq:<schedule>)");
}

// ---------------------------------------------------------------- properties

std::string label(PropertyId p) {
  switch (p) {
    case PropertyId::HI: return "⊕HI";
    case PropertyId::EHI: return "⊕EHI";
    case PropertyId::UB: return "⊕UB";
    case PropertyId::LB: return "⊕LB";
    case PropertyId::SPU: return "⊕SPU";
    case PropertyId::WPU: return "⊕WPU";
    case PropertyId::SPUplus: return "⊕SPU+";
    case PropertyId::WPUplus: return "⊕WPU+";
    case PropertyId::NO: return "⊕NO";
    case PropertyId::TRI: return "⊕TRI";
    case PropertyId::PAR: return "⊕PAR";
    case PropertyId::SB: return "⊕SB";
  }
  return "?";
}

std::string token(PropertyId p) {
  switch (p) {
    case PropertyId::HI: return "hi";
    case PropertyId::EHI: return "ehi";
    case PropertyId::UB: return "ub";
    case PropertyId::LB: return "lb";
    case PropertyId::SPU: return "spu";
    case PropertyId::WPU: return "wpu";
    case PropertyId::SPUplus: return "spu+";
    case PropertyId::WPUplus: return "wpu+";
    case PropertyId::NO: return "no";
    case PropertyId::TRI: return "tri";
    case PropertyId::PAR: return "par";
    case PropertyId::SB: return "sb";
  }
  return "?";
}

PropertyId parse_property_id(std::string_view tok) {
  for (PropertyId p : kAllProperties) {
    if (tok == token(p)) return p;
  }
  throw FormatError("unknown property '" + std::string(tok) + "'");
}

namespace {

struct Triple {
  const Tpo& t1;
  const Tpo& t2;
  const Tpo& c;
  std::size_t n;

  const Tpo& side(int i) const { return i == 1 ? t1 : t2; }
};

using Violation = std::optional<PropertyViolation>;

PropertyViolation set_violation(PropertyId p, const Triple& t, WorldSet s) {
  PropertyViolation v{p, s, {}, 0, t.c.min(s), t.t1.min(s), t.t2.min(s)};
  return v;
}

template <class Pred>
Violation scan_sets(PropertyId p, const Triple& t, Pred holds) {
  const std::uint64_t limit = std::uint64_t{1} << t.n;
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    WorldSet s(t.n, static_cast<std::uint32_t>(bits));
    WorldSet mc = t.c.min(s), m1 = t.t1.min(s), m2 = t.t2.min(s);
    if (!holds(s, mc, m1, m2)) return set_violation(p, t, s);
  }
  return std::nullopt;
}

template <class Pred>
Violation scan_pairs(PropertyId p, const Triple& t, Pred holds) {
  for (std::uint32_t x = 0; x < t.n; ++x) {
    for (std::uint32_t y = 0; y < t.n; ++y) {
      if (int side = holds(World{x}, World{y}); side != 0) {
        return PropertyViolation{p, std::nullopt, {World{x}, World{y}}, side, {}, {}, {}};
      }
    }
  }
  return std::nullopt;
}

template <class Pred>
Violation scan_triples(PropertyId p, const Triple& t, Pred holds) {
  for (std::uint32_t x = 0; x < t.n; ++x) {
    for (std::uint32_t y = 0; y < t.n; ++y) {
      for (std::uint32_t z = 0; z < t.n; ++z) {
        if (int side = holds(World{x}, World{y}, World{z}); side != 0) {
          return PropertyViolation{p, std::nullopt, {World{x}, World{y}, World{z}}, side, {}, {}, {}};
        }
      }
    }
  }
  return std::nullopt;
}

// Every world outside s is strictly below every world inside s.
bool strictly_separated(const Tpo& c, WorldSet s) {
  for (World out : s.complement()) {
    for (World in : s) {
      if (!c.less(out, in)) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<PropertyViolation> check_property(PropertyId p, const Tpo& t1, const Tpo& t2, const Tpo& combined) {
  require_same_worlds(t1, t2);
  require_same_worlds(t1, combined);
  const Triple t{t1, t2, combined, t1.world_count()};

  switch (p) {
    case PropertyId::HI: {
      WorldSet w = t1.universe();
      if (combined.min(w) != (t1.min(w) | t2.min(w))) return set_violation(p, t, w);
      return std::nullopt;
    }
    case PropertyId::EHI:
      return scan_sets(p, t, [](WorldSet, WorldSet mc, WorldSet m1, WorldSet m2) { return mc == (m1 | m2); });
    case PropertyId::UB:
      return scan_sets(p, t, [](WorldSet, WorldSet mc, WorldSet m1, WorldSet m2) { return mc.subset_of(m1 | m2); });
    case PropertyId::LB:
      return scan_sets(p, t,
                       [](WorldSet, WorldSet mc, WorldSet m1, WorldSet m2) { return m1.subset_of(mc) || m2.subset_of(mc); });
    case PropertyId::TRI:
      return scan_sets(p, t, [](WorldSet, WorldSet mc, WorldSet m1, WorldSet m2) {
        return mc == m1 || mc == m2 || mc == (m1 | m2);
      });
    case PropertyId::SB:
      return scan_sets(p, t, [&](WorldSet s, WorldSet mc, WorldSet m1, WorldSet m2) {
        return !strictly_separated(combined, s) || (m1 | m2).subset_of(mc);
      });
    case PropertyId::SPU:
      return scan_pairs(p, t, [&](World x, World y) {
        return t1.less(x, y) && t2.less(x, y) && !combined.less(x, y) ? 1 : 0;
      });
    case PropertyId::WPU:
      return scan_pairs(p, t, [&](World x, World y) {
        return t1.leq(x, y) && t2.leq(x, y) && !combined.leq(x, y) ? 1 : 0;
      });
    case PropertyId::PAR:
      return scan_pairs(p, t, [&](World x, World y) {
        if (!combined.less(x, y)) return 0;
        for (int i = 1; i <= 2; ++i) {
          bool found = false;
          for (std::uint32_t z = 0; z < t.n && !found; ++z) {
            found = combined.equiv(x, World{z}) && t.side(i).less(World{z}, y);
          }
          if (!found) return i;
        }
        return 0;
      });
    case PropertyId::SPUplus:
      return scan_triples(p, t, [&](World x, World y, World z) {
        return t1.less(x, y) && t2.less(z, y) && !combined.less(x, y) && !combined.less(z, y) ? 1 : 0;
      });
    case PropertyId::WPUplus:
      return scan_triples(p, t, [&](World x, World y, World z) {
        return t1.leq(x, y) && t2.leq(z, y) && !combined.leq(x, y) && !combined.leq(z, y) ? 1 : 0;
      });
    case PropertyId::NO:
      return scan_triples(p, t, [&](World x, World y, World z) {
        for (int i = 1; i <= 2; ++i) {
          const Tpo& ti = t.side(i);
          const Tpo& tj = t.side(3 - i);
          if (ti.less(x, y) && tj.leq(z, y) && !combined.less(x, y) && !combined.leq(z, y)) return i;
        }
        return 0;
      });
  }
  throw FormatError("unknown property id");
}

std::string describe(const PropertyViolation& v, const Frame& f) {
  std::ostringstream os;
  os << label(v.property) << " fails";
  auto w = [&](std::size_t k) { return f.name(v.worlds.at(k)); };
  if (v.scope) {
    const WorldSet s = *v.scope;
    os << " at S = " << f.braced(s) << ": min(⪯⊕,S) = " << f.braced(*v.combined_min) << ", min(⪯1,S) = "
       << f.braced(*v.min_first) << ", min(⪯2,S) = " << f.braced(*v.min_second);
    if (v.property == PropertyId::SB) os << " although every world outside S is strictly below every world in S";
    return os.str();
  }
  switch (v.property) {
    case PropertyId::SPU:
      os << ": " << w(0) << " ≺1 " << w(1) << " and " << w(0) << " ≺2 " << w(1) << " but not " << w(0) << " ≺⊕ " << w(1);
      break;
    case PropertyId::WPU:
      os << ": " << w(0) << " ⪯1 " << w(1) << " and " << w(0) << " ⪯2 " << w(1) << " but not " << w(0) << " ⪯⊕ " << w(1);
      break;
    case PropertyId::PAR:
      os << ": " << w(0) << " ≺⊕ " << w(1) << " but no z with " << w(0) << " ∼⊕ z and z ≺" << v.side << " " << w(1);
      break;
    case PropertyId::SPUplus:
      os << ": " << w(0) << " ≺1 " << w(1) << " and " << w(2) << " ≺2 " << w(1) << " but neither " << w(0) << " ≺⊕ "
         << w(1) << " nor " << w(2) << " ≺⊕ " << w(1);
      break;
    case PropertyId::WPUplus:
      os << ": " << w(0) << " ⪯1 " << w(1) << " and " << w(2) << " ⪯2 " << w(1) << " but neither " << w(0) << " ⪯⊕ "
         << w(1) << " nor " << w(2) << " ⪯⊕ " << w(1);
      break;
    case PropertyId::NO:
      os << ": " << w(0) << " ≺" << v.side << " " << w(1) << " and " << w(2) << " ⪯" << (3 - v.side) << " " << w(1)
         << " but neither " << w(0) << " ≺⊕ " << w(1) << " nor " << w(2) << " ⪯⊕ " << w(1);
      break;
    default:
      break;
  }
  return os.str();
}

}  // namespace tqbc
