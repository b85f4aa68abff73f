#include "tqbc/frame.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tqbc/error.hpp"

namespace tqbc {

Frame::Frame(std::vector<std::string> names, std::optional<Vocabulary> vocabulary)
    : names_(std::move(names)), vocabulary_(std::move(vocabulary)) {
  if (names_.empty()) throw FormatError("a frame needs at least one world");
  if (names_.size() > kMaxWorlds) {
    throw CapExceededError("at most " + std::to_string(kMaxWorlds) + " worlds are supported");
  }
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty() || n.find_first_of(" \t|{},") != std::string::npos) {
      throw FormatError("world name '" + n + "' is empty or contains a separator");
    }
    if (!seen.insert(n).second) throw FormatError("duplicate world name '" + n + "'");
  }
}

Frame Frame::named(std::vector<std::string> names) { return Frame(std::move(names), std::nullopt); }

Frame Frame::parse_named(std::string_view csv) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      names.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  names.push_back(cur);
  return named(std::move(names));
}

Frame Frame::propositional(const Vocabulary& vocabulary) {
  std::vector<std::string> names;
  const std::size_t n = vocabulary.world_count();
  names.reserve(n);
  for (std::size_t w = 0; w < n; ++w) {
    std::string bits;
    for (std::size_t a = 0; a < vocabulary.size(); ++a) bits.push_back(((w >> a) & 1u) ? '1' : '0');
    names.push_back(std::move(bits));
  }
  return Frame(std::move(names), vocabulary);
}

World Frame::world(std::string_view token) const {
  auto it = std::find(names_.begin(), names_.end(), token);
  if (it == names_.end()) throw FormatError("unknown world '" + std::string(token) + "'");
  return World{static_cast<std::uint32_t>(it - names_.begin())};
}

WorldSet Frame::parse_set(std::string_view text) const {
  WorldSet out = WorldSet::none(size());
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    World w = world(cur);
    if (out.contains(w)) throw FormatError("world '" + cur + "' listed twice");
    out = out.with(w);
    cur.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '{' || c == '}') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

std::string Frame::format(WorldSet s) const {
  std::string out;
  for (World w : s) {
    if (!out.empty()) out.push_back(' ');
    out += name(w);
  }
  return out;
}

}  // namespace tqbc
