#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqbc/logic.hpp"
#include "tqbc/worlds.hpp"

namespace tqbc {

/// Names for the worlds of W. Abstract frames use declared names; propositional
/// frames name world i by its bit-string over the atom order ("10" is p true, q false).
class Frame {
 public:
  static Frame named(std::vector<std::string> names);
  /// Comma-separated names, e.g. "w,x,y,z".
  static Frame parse_named(std::string_view csv);
  static Frame propositional(const Vocabulary& vocabulary);

  std::size_t size() const { return names_.size(); }
  const std::string& name(World w) const { return names_.at(w.index); }
  const std::vector<std::string>& names() const { return names_; }
  const std::optional<Vocabulary>& vocabulary() const { return vocabulary_; }

  /// Throws FormatError for an unknown token.
  World world(std::string_view token) const;

  /// Whitespace-separated world tokens; surrounding braces and commas are tolerated.
  WorldSet parse_set(std::string_view text) const;

  /// Members in index order, space separated. The empty set prints as "".
  std::string format(WorldSet s) const;
  /// Same as format, wrapped in braces.
  std::string braced(WorldSet s) const { return "{" + format(s) + "}"; }

 private:
  Frame(std::vector<std::string> names, std::optional<Vocabulary> vocabulary);

  std::vector<std::string> names_;
  std::optional<Vocabulary> vocabulary_;
};

}  // namespace tqbc
