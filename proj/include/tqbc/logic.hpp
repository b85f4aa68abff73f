#pragma once

// Finitely generated propositional language over a small vocabulary.
//
// Grammar (loosest binding first):
//   iff     := implies ('<->' implies)*        left-associative
//   implies := or ('->' implies)?              right-associative
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '!' unary | primary
//   primary := ATOM | 'T' | 'F' | '(' iff ')'

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqbc/worlds.hpp"

namespace tqbc {

inline constexpr std::size_t kMaxAtoms = 5;

/// Ordered list of atom names. Atom i is bit i of a world index.
class Vocabulary {
 public:
  explicit Vocabulary(std::vector<std::string> atoms);

  /// Parses a comma-separated list such as "p,q".
  static Vocabulary parse(std::string_view csv);

  std::size_t size() const { return atoms_.size(); }
  std::size_t world_count() const { return std::size_t{1} << atoms_.size(); }
  const std::string& atom(std::size_t i) const { return atoms_.at(i); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<std::string> atoms_;
};

/// Immutable propositional sentence. Copies share structure.
class Sentence {
 public:
  enum class Kind : std::uint8_t { Atom, Top, Bot, Not, And, Or, Implies, Iff };

  static Sentence atom(std::size_t index);
  static Sentence top();
  static Sentence bot();
  static Sentence negation(Sentence operand);
  static Sentence binary(Kind kind, Sentence left, Sentence right);

  Kind kind() const;
  bool is_binary() const;
  std::size_t atom_index() const;
  const Sentence& operand() const;
  const Sentence& left() const;
  const Sentence& right() const;

  friend bool operator==(const Sentence& a, const Sentence& b);

 private:
  struct Node;
  explicit Sentence(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline Sentence operator!(Sentence s) { return Sentence::negation(std::move(s)); }
inline Sentence operator&&(Sentence a, Sentence b) { return Sentence::binary(Sentence::Kind::And, std::move(a), std::move(b)); }
inline Sentence operator||(Sentence a, Sentence b) { return Sentence::binary(Sentence::Kind::Or, std::move(a), std::move(b)); }
inline Sentence implies(Sentence a, Sentence b) { return Sentence::binary(Sentence::Kind::Implies, std::move(a), std::move(b)); }
inline Sentence iff(Sentence a, Sentence b) { return Sentence::binary(Sentence::Kind::Iff, std::move(a), std::move(b)); }

/// Throws SyntaxError or UnknownAtomError.
Sentence parse_sentence(std::string_view text, const Vocabulary& vocabulary);

/// Prints with the minimum parentheses needed for parse_sentence to rebuild
/// the same tree, except that binary operands of a different binary
/// connective are always parenthesised.
std::string to_string(const Sentence& s, const Vocabulary& vocabulary);

/// Truth-table evaluation at a single world.
bool evaluate(const Sentence& s, World w);

WorldSet models(const Sentence& s, const Vocabulary& vocabulary);

/// True iff premise ⊆ models(s). The atom count is read off premise's universe.
bool entails(WorldSet premise, const Sentence& s);

/// Canonical full-DNF sentence whose models are exactly `ws`.
/// Empty set gives F, the full set gives T.
Sentence theory_of(WorldSet ws, const Vocabulary& vocabulary);

}  // namespace tqbc
