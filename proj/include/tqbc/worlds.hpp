#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace tqbc {

/// Hard upper bound on |W|; world sets are 32-bit masks.
inline constexpr std::size_t kMaxWorlds = 32;

/// A world identified by its canonical index. In propositional mode atom i
/// is bit i of the index.
struct World {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(World, World) = default;
};

/// A subset of a universe W = {0, ..., n-1}. The universe size travels with
/// the set so that complement is well defined.
class WorldSet {
 public:
  constexpr WorldSet() = default;

  constexpr WorldSet(std::size_t universe, std::uint32_t bits)
      : bits_(bits & full_mask(universe)), universe_(static_cast<std::uint8_t>(universe)) {}

  static constexpr WorldSet none(std::size_t universe) { return {universe, 0}; }
  static constexpr WorldSet all(std::size_t universe) { return {universe, full_mask(universe)}; }
  static constexpr WorldSet single(std::size_t universe, World w) { return {universe, 1u << w.index}; }

  constexpr std::size_t universe() const { return universe_; }
  constexpr std::uint32_t bits() const { return bits_; }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool full() const { return bits_ == full_mask(universe_); }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(World w) const { return w.index < universe_ && ((bits_ >> w.index) & 1u) != 0; }
  constexpr bool subset_of(WorldSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(WorldSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr WorldSet complement() const { return {universe_, ~bits_}; }

  constexpr WorldSet with(World w) const { return {universe_, bits_ | (1u << w.index)}; }
  constexpr WorldSet without(World w) const { return {universe_, bits_ & ~(1u << w.index)}; }

  friend constexpr WorldSet operator|(WorldSet a, WorldSet b) { return {a.universe_, a.bits_ | b.bits_}; }
  friend constexpr WorldSet operator&(WorldSet a, WorldSet b) { return {a.universe_, a.bits_ & b.bits_}; }
  friend constexpr WorldSet operator-(WorldSet a, WorldSet b) { return {a.universe_, a.bits_ & ~b.bits_}; }
  WorldSet& operator|=(WorldSet o) { return *this = *this | o; }
  WorldSet& operator&=(WorldSet o) { return *this = *this & o; }
  WorldSet& operator-=(WorldSet o) { return *this = *this - o; }

  friend constexpr bool operator==(WorldSet, WorldSet) = default;

  /// Iterates members in increasing index order.
  class iterator {
   public:
    using value_type = World;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr World operator*() const { return World{static_cast<std::uint32_t>(std::countr_zero(rest_))}; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint32_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{0}; }

  std::vector<World> members() const { return {begin(), end()}; }

  static constexpr std::uint32_t full_mask(std::size_t universe) {
    return universe >= 32 ? ~0u : static_cast<std::uint32_t>((std::uint64_t{1} << universe) - 1);
  }

 private:
  std::uint32_t bits_ = 0;
  std::uint8_t universe_ = 0;
};

/// Every subset of W in canonical (bit-encoding) order, optionally skipping the empty set.
std::vector<WorldSet> all_subsets(std::size_t universe, bool include_empty = true);

}  // namespace tqbc
