#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tqbc/frame.hpp"
#include "tqbc/worlds.hpp"

namespace tqbc {

/// Largest |W| for which enumerate_tpos will run.
inline constexpr std::size_t kMaxEnumerationWorlds = 8;

/// 1-based plausibility rank; rank 1 is the most plausible cell.
struct Rank {
  std::uint32_t value = 1;

  friend constexpr auto operator<=>(Rank, Rank) = default;
};

/// Total preorder over W held as an ordered partition <S_1, ..., S_m>.
/// Two tpos are equal iff their cell lists are equal.
class Tpo {
 public:
  /// Throws InvalidTpoError unless the cells are nonempty, pairwise disjoint
  /// and cover their common universe.
  explicit Tpo(std::vector<WorldSet> cells);

  /// The single-cell order <W>.
  static Tpo flat(std::size_t world_count);

  /// Builds the tpo in which x ⪯ y iff key[x] <= key[y]. Keys need not be compact.
  static Tpo from_keys(std::span<const std::uint32_t> keys);

  std::size_t world_count() const { return cells_.front().universe(); }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<WorldSet>& cells() const { return cells_; }
  const WorldSet& cell(Rank r) const { return cells_.at(r.value - 1); }
  WorldSet universe() const { return WorldSet::all(world_count()); }

  Rank rank(World x) const { return Rank{rank_[x.index] + 1u}; }

  bool leq(World x, World y) const { return rank_[x.index] <= rank_[y.index]; }
  bool less(World x, World y) const { return rank_[x.index] < rank_[y.index]; }
  bool equiv(World x, World y) const { return rank_[x.index] == rank_[y.index]; }

  /// min(⪯, s): the members of s of least rank; empty iff s is empty.
  WorldSet min(WorldSet s) const;

  /// The most plausible worlds, min(⪯, W).
  WorldSet bottom() const { return cells_.front(); }

  friend bool operator==(const Tpo& a, const Tpo& b) { return a.cells_ == b.cells_; }

 private:
  std::vector<WorldSet> cells_;
  std::array<std::uint8_t, kMaxWorlds> rank_{};  // 0-based cell index per world
};

inline Rank rank(const Tpo& t, World x) { return t.rank(x); }
inline WorldSet min_worlds(const Tpo& t, WorldSet s) { return t.min(s); }

/// True iff [x ⪯1 y iff x ⪯2 y] for all x, y both in s or both outside s.
bool is_s_variant(const Tpo& t1, const Tpo& t2, WorldSet s);

/// A set S for which a pair of tpos is known to be S-variant.
class VariantWitness {
 public:
  /// Returns nothing unless (t1, t2) really are s-variants.
  static std::optional<VariantWitness> make(const Tpo& t1, const Tpo& t2, WorldSet s);

  WorldSet set() const { return set_; }

 private:
  explicit VariantWitness(WorldSet s) : set_(s) {}
  WorldSet set_;
};

/// Smallest S (by bit encoding) making the pair S-variant, if any.
/// Presence means the pair lies in V(W).
std::optional<VariantWitness> find_variant_set(const Tpo& t1, const Tpo& t2);

/// Visits every ordered partition of W exactly once in a fixed order.
/// Throws CapExceededError when world_count exceeds cap (itself at most kMaxEnumerationWorlds).
void for_each_tpo(std::size_t world_count, const std::function<void(const Tpo&)>& visit,
                  std::size_t cap = kMaxEnumerationWorlds);

std::vector<Tpo> enumerate_tpos(std::size_t world_count, std::size_t cap = kMaxEnumerationWorlds);

/// Text form: cells separated by '|', most plausible first, e.g. "z | w | x y".
Tpo parse_tpo(std::string_view text, const Frame& frame);
std::string format_tpo(const Tpo& t, const Frame& frame);

}  // namespace tqbc
