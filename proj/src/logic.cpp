#include "tqbc/logic.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>
#include <sstream>

#include "tqbc/error.hpp"

namespace tqbc {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- Vocabulary

Vocabulary::Vocabulary(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw InvalidVocabularyError("vocabulary needs at least one atom");
  if (atoms_.size() > kMaxAtoms) {
    throw InvalidVocabularyError("vocabulary has " + std::to_string(atoms_.size()) + " atoms; at most " +
                                 std::to_string(kMaxAtoms) + " are supported");
  }
  std::set<std::string_view> seen;
  for (const auto& a : atoms_) {
    if (!is_identifier(a)) throw InvalidVocabularyError("atom name '" + a + "' is not an identifier");
    if (a == "T" || a == "F") throw InvalidVocabularyError("atom name '" + a + "' is reserved for a constant");
    if (!seen.insert(a).second) throw InvalidVocabularyError("duplicate atom '" + a + "'");
  }
}

Vocabulary Vocabulary::parse(std::string_view csv) {
  std::vector<std::string> atoms;
  std::size_t start = 0;
  while (true) {
    auto comma = csv.find(',', start);
    auto piece = trim(csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    atoms.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Vocabulary(std::move(atoms));
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view name) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), name);
  if (it == atoms_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

// ---------------------------------------------------------------- Sentence

struct Sentence::Node {
  Kind kind;
  std::size_t atom = 0;
  std::optional<Sentence> left;
  std::optional<Sentence> right;
};

Sentence Sentence::atom(std::size_t index) { return Sentence(std::make_shared<const Node>(Node{Kind::Atom, index, {}, {}})); }
Sentence Sentence::top() { return Sentence(std::make_shared<const Node>(Node{Kind::Top, 0, {}, {}})); }
Sentence Sentence::bot() { return Sentence(std::make_shared<const Node>(Node{Kind::Bot, 0, {}, {}})); }

Sentence Sentence::negation(Sentence operand) {
  return Sentence(std::make_shared<const Node>(Node{Kind::Not, 0, std::move(operand), {}}));
}

Sentence Sentence::binary(Kind kind, Sentence left, Sentence right) {
  if (kind != Kind::And && kind != Kind::Or && kind != Kind::Implies && kind != Kind::Iff) {
    throw Error("Sentence::binary needs a binary connective");
  }
  return Sentence(std::make_shared<const Node>(Node{kind, 0, std::move(left), std::move(right)}));
}

Sentence::Kind Sentence::kind() const { return node_->kind; }

bool Sentence::is_binary() const {
  auto k = node_->kind;
  return k == Kind::And || k == Kind::Or || k == Kind::Implies || k == Kind::Iff;
}

std::size_t Sentence::atom_index() const { return node_->atom; }
const Sentence& Sentence::operand() const { return *node_->left; }
const Sentence& Sentence::left() const { return *node_->left; }
const Sentence& Sentence::right() const { return *node_->right; }

bool operator==(const Sentence& a, const Sentence& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Sentence::Kind::Atom:
      return a.atom_index() == b.atom_index();
    case Sentence::Kind::Top:
    case Sentence::Kind::Bot:
      return true;
    case Sentence::Kind::Not:
      return a.operand() == b.operand();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

// ---------------------------------------------------------------- Parser

namespace {

enum class Tok { Ident, Top, Bot, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t at = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string word(text.substr(at, i - at));
      Tok k = word == "T" ? Tok::Top : word == "F" ? Tok::Bot : Tok::Ident;
      out.push_back({k, std::move(word), at});
      continue;
    }
    if (text.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, "<->", at});
      i += 3;
      continue;
    }
    if (text.substr(i, 2) == "->") {
      out.push_back({Tok::Implies, "->", at});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '!': k = Tok::Not; break;
      case '&': k = Tok::And; break;
      case '|': k = Tok::Or; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw SyntaxError("syntax error at token " + std::to_string(out.size() + 1) + " (offset " +
                              std::to_string(at) + "): unexpected character '" + std::string(1, c) + "'",
                          out.size() + 1, at);
    }
    out.push_back({k, std::string(1, c), at});
    ++i;
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Vocabulary& vocabulary) : toks_(std::move(tokens)), vocab_(vocabulary) {}

  Sentence parse() {
    Sentence s = parse_iff();
    if (peek().kind != Tok::End) fail("expected end of input");
    return s;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError("syntax error at token " + std::to_string(pos_ + 1) + " (offset " + std::to_string(t.offset) +
                          "): " + what + ", found " + found,
                      pos_ + 1, t.offset);
  }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  Sentence parse_iff() {
    Sentence s = parse_implies();
    while (accept(Tok::Iff)) s = iff(std::move(s), parse_implies());
    return s;
  }

  Sentence parse_implies() {
    Sentence s = parse_or();
    if (accept(Tok::Implies)) return implies(std::move(s), parse_implies());
    return s;
  }

  Sentence parse_or() {
    Sentence s = parse_and();
    while (accept(Tok::Or)) s = std::move(s) || parse_and();
    return s;
  }

  Sentence parse_and() {
    Sentence s = parse_unary();
    while (accept(Tok::And)) s = std::move(s) && parse_unary();
    return s;
  }

  Sentence parse_unary() {
    if (accept(Tok::Not)) return !parse_unary();
    return parse_primary();
  }

  Sentence parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        auto idx = vocab_.index_of(t.text);
        if (!idx) throw UnknownAtomError(t.text);
        ++pos_;
        return Sentence::atom(*idx);
      }
      case Tok::Top:
        ++pos_;
        return Sentence::top();
      case Tok::Bot:
        ++pos_;
        return Sentence::bot();
      case Tok::LParen: {
        ++pos_;
        Sentence s = parse_iff();
        if (!accept(Tok::RParen)) fail("expected ')'");
        return s;
      }
      default:
        fail("expected an atom, constant, '!' or '('");
    }
  }

  std::vector<Token> toks_;
  const Vocabulary& vocab_;
  std::size_t pos_ = 0;
};

}  // namespace

Sentence parse_sentence(std::string_view text, const Vocabulary& vocabulary) {
  return Parser(tokenize(text), vocabulary).parse();
}

// ---------------------------------------------------------------- Printer

namespace {

const char* connective(Sentence::Kind k) {
  switch (k) {
    case Sentence::Kind::And: return " & ";
    case Sentence::Kind::Or: return " | ";
    case Sentence::Kind::Implies: return " -> ";
    case Sentence::Kind::Iff: return " <-> ";
    default: return "";
  }
}

void print(std::ostream& os, const Sentence& s, const Vocabulary& v);

void print_operand(std::ostream& os, const Sentence& child, bool parens, const Vocabulary& v) {
  if (parens) os << '(';
  print(os, child, v);
  if (parens) os << ')';
}

void print(std::ostream& os, const Sentence& s, const Vocabulary& v) {
  using K = Sentence::Kind;
  switch (s.kind()) {
    case K::Atom:
      if (s.atom_index() >= v.size()) throw UnknownAtomError("#" + std::to_string(s.atom_index()));
      os << v.atom(s.atom_index());
      return;
    case K::Top:
      os << 'T';
      return;
    case K::Bot:
      os << 'F';
      return;
    case K::Not:
      os << '!';
      print_operand(os, s.operand(), s.operand().is_binary(), v);
      return;
    default: {
      const bool right_assoc = s.kind() == K::Implies;
      const auto& l = s.left();
      const auto& r = s.right();
      bool lp = l.is_binary() && (l.kind() != s.kind() || right_assoc);
      bool rp = r.is_binary() && (r.kind() != s.kind() || !right_assoc);
      print_operand(os, l, lp, v);
      os << connective(s.kind());
      print_operand(os, r, rp, v);
    }
  }
}

}  // namespace

std::string to_string(const Sentence& s, const Vocabulary& vocabulary) {
  std::ostringstream os;
  print(os, s, vocabulary);
  return os.str();
}

// ---------------------------------------------------------------- Semantics

bool evaluate(const Sentence& s, World w) {
  using K = Sentence::Kind;
  switch (s.kind()) {
    case K::Atom: return ((w.index >> s.atom_index()) & 1u) != 0;
    case K::Top: return true;
    case K::Bot: return false;
    case K::Not: return !evaluate(s.operand(), w);
    case K::And: return evaluate(s.left(), w) && evaluate(s.right(), w);
    case K::Or: return evaluate(s.left(), w) || evaluate(s.right(), w);
    case K::Implies: return !evaluate(s.left(), w) || evaluate(s.right(), w);
    case K::Iff: return evaluate(s.left(), w) == evaluate(s.right(), w);
  }
  return false;
}

namespace {

WorldSet atom_models(std::size_t atom, std::size_t atom_count) {
  const std::size_t n = std::size_t{1} << atom_count;
  std::uint32_t bits = 0;
  for (std::size_t w = 0; w < n; ++w) {
    if ((w >> atom) & 1u) bits |= 1u << w;
  }
  return {n, bits};
}

WorldSet models_over(const Sentence& s, std::size_t atom_count) {
  using K = Sentence::Kind;
  const std::size_t n = std::size_t{1} << atom_count;
  switch (s.kind()) {
    case K::Atom:
      if (s.atom_index() >= atom_count) throw UnknownAtomError("#" + std::to_string(s.atom_index()));
      return atom_models(s.atom_index(), atom_count);
    case K::Top: return WorldSet::all(n);
    case K::Bot: return WorldSet::none(n);
    case K::Not: return models_over(s.operand(), atom_count).complement();
    case K::And: return models_over(s.left(), atom_count) & models_over(s.right(), atom_count);
    case K::Or: return models_over(s.left(), atom_count) | models_over(s.right(), atom_count);
    case K::Implies: return models_over(s.left(), atom_count).complement() | models_over(s.right(), atom_count);
    case K::Iff: {
      auto a = models_over(s.left(), atom_count);
      auto b = models_over(s.right(), atom_count);
      return (a & b) | (a.complement() & b.complement());
    }
  }
  return WorldSet::none(n);
}

}  // namespace

WorldSet models(const Sentence& s, const Vocabulary& vocabulary) { return models_over(s, vocabulary.size()); }

bool entails(WorldSet premise, const Sentence& s) {
  const std::size_t n = premise.universe();
  if (!std::has_single_bit(n)) throw Error("entails: premise universe is not a power of two");
  const auto atoms = static_cast<std::size_t>(std::countr_zero(n));
  return premise.subset_of(models_over(s, atoms));
}

Sentence theory_of(WorldSet ws, const Vocabulary& vocabulary) {
  if (ws.universe() != vocabulary.world_count()) throw Error("theory_of: world set does not match vocabulary");
  if (ws.empty()) return Sentence::bot();
  if (ws.full()) return Sentence::top();
  std::optional<Sentence> dnf;
  for (World w : ws) {
    std::optional<Sentence> term;
    for (std::size_t a = 0; a < vocabulary.size(); ++a) {
      Sentence lit = ((w.index >> a) & 1u) ? Sentence::atom(a) : !Sentence::atom(a);
      term = term ? std::move(*term) && std::move(lit) : std::move(lit);
    }
    dnf = dnf ? std::move(*dnf) || std::move(*term) : std::move(*term);
  }
  return *dnf;
}

}  // namespace tqbc
