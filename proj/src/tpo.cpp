#include "tqbc/tpo.hpp"

#include <algorithm>
#include <map>

#include "tqbc/error.hpp"

namespace tqbc {

Tpo::Tpo(std::vector<WorldSet> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw InvalidTpoError("a tpo needs at least one cell");
  const std::size_t n = cells_.front().universe();
  if (n == 0) throw InvalidTpoError("a tpo needs a nonempty set of worlds");
  WorldSet seen = WorldSet::none(n);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const WorldSet& c = cells_[i];
    if (c.universe() != n) throw InvalidTpoError("cells range over different world sets");
    if (c.empty()) throw InvalidTpoError("cell " + std::to_string(i + 1) + " is empty");
    if (c.intersects(seen)) throw InvalidTpoError("cell " + std::to_string(i + 1) + " overlaps an earlier cell");
    seen |= c;
    for (World w : c) rank_[w.index] = static_cast<std::uint8_t>(i);
  }
  if (!seen.full()) throw InvalidTpoError("cells do not cover every world");
}

Tpo Tpo::flat(std::size_t world_count) { return Tpo({WorldSet::all(world_count)}); }

Tpo Tpo::from_keys(std::span<const std::uint32_t> keys) {
  const std::size_t n = keys.size();
  std::map<std::uint32_t, WorldSet> grouped;
  for (std::size_t w = 0; w < n; ++w) {
    auto [it, fresh] = grouped.try_emplace(keys[w], WorldSet::none(n));
    it->second = it->second.with(World{static_cast<std::uint32_t>(w)});
  }
  std::vector<WorldSet> cells;
  cells.reserve(grouped.size());
  for (auto& [key, cell] : grouped) cells.push_back(cell);
  return Tpo(std::move(cells));
}

WorldSet Tpo::min(WorldSet s) const {
  for (const WorldSet& c : cells_) {
    WorldSet hit = c & s;
    if (!hit.empty()) return hit;
  }
  return WorldSet::none(world_count());
}

bool is_s_variant(const Tpo& t1, const Tpo& t2, WorldSet s) {
  const std::size_t n = t1.world_count();
  if (t2.world_count() != n || s.universe() != n) throw InvalidTpoError("is_s_variant: mismatched world sets");
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x + 1; y < n; ++y) {
      World wx{x}, wy{y};
      if (s.contains(wx) != s.contains(wy)) continue;
      if (t1.leq(wx, wy) != t2.leq(wx, wy) || t1.leq(wy, wx) != t2.leq(wy, wx)) return false;
    }
  }
  return true;
}

std::optional<VariantWitness> VariantWitness::make(const Tpo& t1, const Tpo& t2, WorldSet s) {
  if (!is_s_variant(t1, t2, s)) return std::nullopt;
  return VariantWitness(s);
}

std::optional<VariantWitness> find_variant_set(const Tpo& t1, const Tpo& t2) {
  const std::size_t n = t1.world_count();
  if (n > 20) throw CapExceededError("find_variant_set scans 2^|W| subsets; |W| is too large");
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    WorldSet s(n, static_cast<std::uint32_t>(bits));
    if (is_s_variant(t1, t2, s)) return VariantWitness::make(t1, t2, s);
  }
  return std::nullopt;
}

namespace {

void extend(std::vector<WorldSet>& prefix, WorldSet remaining, const std::function<void(const Tpo&)>& visit) {
  if (remaining.empty()) {
    visit(Tpo(prefix));
    return;
  }
  const std::uint32_t rest = remaining.bits();
  // Nonempty submasks of `rest` in increasing numeric order.
  for (std::uint32_t sub = 1; sub <= rest; ++sub) {
    if ((sub & ~rest) != 0) continue;
    WorldSet cell(remaining.universe(), sub);
    prefix.push_back(cell);
    extend(prefix, remaining - cell, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_tpo(std::size_t world_count, const std::function<void(const Tpo&)>& visit, std::size_t cap) {
  cap = std::min(cap, kMaxEnumerationWorlds);
  if (world_count == 0) throw InvalidTpoError("cannot enumerate tpos over an empty set of worlds");
  if (world_count > cap) {
    throw CapExceededError("enumerating tpos over " + std::to_string(world_count) + " worlds exceeds the cap of " +
                           std::to_string(cap));
  }
  std::vector<WorldSet> prefix;
  extend(prefix, WorldSet::all(world_count), visit);
}

std::vector<Tpo> enumerate_tpos(std::size_t world_count, std::size_t cap) {
  std::vector<Tpo> out;
  for_each_tpo(world_count, [&](const Tpo& t) { out.push_back(t); }, cap);
  return out;
}

Tpo parse_tpo(std::string_view text, const Frame& frame) {
  std::vector<WorldSet> cells;
  std::size_t start = 0;
  while (true) {
    auto bar = text.find('|', start);
    auto piece = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    WorldSet cell = frame.parse_set(piece);
    if (cell.empty()) throw FormatError("empty cell in tpo '" + std::string(text) + "'");
    cells.push_back(cell);
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  try {
    return Tpo(std::move(cells));
  } catch (const InvalidTpoError& e) {
    throw FormatError("invalid tpo '" + std::string(text) + "': " + e.what());
  }
}

std::string format_tpo(const Tpo& t, const Frame& frame) {
  if (t.world_count() != frame.size()) throw FormatError("tpo and frame have different world counts");
  std::string out;
  for (const WorldSet& c : t.cells()) {
    if (!out.empty()) out += " | ";
    out += frame.format(c);
  }
  return out;
}

}  // namespace tqbc
