#include "tqbc/change.hpp"

#include <algorithm>

#include "tqbc/error.hpp"

namespace tqbc {

namespace {

/// Cells of t restricted to s, empty pieces dropped, order kept.
std::vector<WorldSet> restricted_cells(const Tpo& t, WorldSet s) {
  std::vector<WorldSet> out;
  for (const WorldSet& c : t.cells()) {
    WorldSet piece = c & s;
    if (!piece.empty()) out.push_back(piece);
  }
  return out;
}

void append(std::vector<WorldSet>& cells, const std::vector<WorldSet>& more) {
  cells.insert(cells.end(), more.begin(), more.end());
}

void require_universe(const BeliefState& st, WorldSet a) {
  if (a.universe() != st.world_count()) throw Error("input sentence and belief state range over different worlds");
}

void require_contractible(const BeliefState& st, WorldSet a) {
  require_universe(st, a);
  if (a.full()) throw InadmissibleContractionError("cannot contract by a tautology");
}

}  // namespace

std::string token(RevisionOp op) {
  switch (op) {
    case RevisionOp::Natural: return "natural";
    case RevisionOp::Restrained: return "restrained";
    case RevisionOp::Lexicographic: return "lex";
  }
  return "?";
}

RevisionOp parse_revision_op(std::string_view tok) {
  for (RevisionOp op : kAllRevisionOps) {
    if (tok == token(op)) return op;
  }
  throw FormatError("unknown revision operator '" + std::string(tok) + "' (expected natural, restrained or lex)");
}

BeliefState revise(const BeliefState& st, WorldSet a, RevisionOp op) {
  require_universe(st, a);
  if (a.empty()) throw InconsistentInputError("cannot revise by an inconsistent sentence");
  const Tpo& t = st.order();
  const WorldSet promoted = t.min(a);
  std::vector<WorldSet> cells{promoted};

  switch (op) {
    case RevisionOp::Natural:
      append(cells, restricted_cells(t, promoted.complement()));
      break;
    case RevisionOp::Restrained:
      // Ties between an A-world and a ¬A-world break in favour of the A-world.
      for (const WorldSet& c : t.cells()) {
        for (WorldSet piece : {(c & a) - promoted, c - a}) {
          if (!piece.empty()) cells.push_back(piece);
        }
      }
      break;
    case RevisionOp::Lexicographic:
      cells.clear();
      append(cells, restricted_cells(t, a));
      append(cells, restricted_cells(t, a.complement()));
      break;
  }
  return BeliefState(Tpo(std::move(cells)));
}

BeliefState revise(const BeliefState& st, const Sentence& a, const Vocabulary& v, RevisionOp op) {
  return revise(st, models(a, v), op);
}

BeliefState contract_via_combi(const BeliefState& st, WorldSet a, RevisionOp rop, const Combinator& c) {
  require_contractible(st, a);
  const BeliefState revised = revise(st, a.complement(), rop);
  return BeliefState(c(st.order(), revised.order()));
}

BeliefState contract_via_combi(const BeliefState& st, const Sentence& a, const Vocabulary& v, RevisionOp rop,
                               const Combinator& c) {
  return contract_via_combi(st, models(a, v), rop, c);
}

BeliefState natural_contraction(const BeliefState& st, WorldSet a) {
  require_contractible(st, a);
  const Tpo& t = st.order();
  const WorldSet lowest = t.min(a.complement()) | t.bottom();
  std::vector<WorldSet> cells{lowest};
  append(cells, restricted_cells(t, lowest.complement()));
  return BeliefState(Tpo(std::move(cells)));
}

BeliefState natural_contraction(const BeliefState& st, const Sentence& a, const Vocabulary& v) {
  return natural_contraction(st, models(a, v));
}

BeliefState lexicographic_contraction(const BeliefState& st, WorldSet a) {
  require_contractible(st, a);
  if (a.empty()) throw InadmissibleContractionError("lexicographic contraction needs a consistent sentence");
  const auto in = restricted_cells(st.order(), a);
  const auto out = restricted_cells(st.order(), a.complement());
  std::vector<WorldSet> cells;
  for (std::size_t i = 0; i < std::max(in.size(), out.size()); ++i) {
    WorldSet c = WorldSet::none(a.universe());
    if (i < in.size()) c |= in[i];
    if (i < out.size()) c |= out[i];
    cells.push_back(c);
  }
  return BeliefState(Tpo(std::move(cells)));
}

BeliefState lexicographic_contraction(const BeliefState& st, const Sentence& a, const Vocabulary& v) {
  return lexicographic_contraction(st, models(a, v));
}

BeliefState priority_contraction(const BeliefState& st, WorldSet a) {
  require_contractible(st, a);
  const Tpo& t = st.order();
  const WorldSet lowest = t.bottom() | t.min(a.complement());
  std::vector<WorldSet> cells{lowest};
  append(cells, restricted_cells(t, a.complement() - lowest));
  append(cells, restricted_cells(t, a - lowest));
  return BeliefState(Tpo(std::move(cells)));
}

BeliefState priority_contraction(const BeliefState& st, const Sentence& a, const Vocabulary& v) {
  return priority_contraction(st, models(a, v));
}

bool is_strongly_believed(const BeliefState& st, WorldSet a) {
  require_universe(st, a);
  if (a.empty()) return false;
  const Tpo& t = st.order();
  for (World x : a) {
    for (World y : a.complement()) {
      if (!t.less(x, y)) return false;
    }
  }
  return true;
}

bool is_strongly_believed(const BeliefState& st, const Sentence& a, const Vocabulary& v) {
  return is_strongly_believed(st, models(a, v));
}

// ---------------------------------------------------------------- ContractionOp

ContractionOp ContractionOp::parse(std::string_view tok, RevisionOp rop, const Combinator& c) {
  if (tok == "via-combi") return via_combi(rop, c);
  if (tok == "natural") return natural();
  if (tok == "lex") return lexicographic();
  if (tok == "priority") return priority();
  throw FormatError("unknown contraction operator '" + std::string(tok) +
                    "' (expected via-combi, natural, lex or priority)");
}

bool ContractionOp::admits(WorldSet a) const {
  if (a.full()) return false;
  if (auto d = std::get_if<Direct>(&impl_); d && *d == Direct::Lexicographic) return !a.empty();
  return true;
}

BeliefState ContractionOp::apply(const BeliefState& st, WorldSet a) const {
  if (const auto* vc = combi()) return contract_via_combi(st, a, vc->revision, vc->combinator);
  switch (std::get<Direct>(impl_)) {
    case Direct::Natural: return natural_contraction(st, a);
    case Direct::Lexicographic: return lexicographic_contraction(st, a);
    case Direct::Priority: return priority_contraction(st, a);
  }
  throw Error("unreachable contraction kind");
}

std::string ContractionOp::name() const {
  if (const auto* vc = combi()) return "via-combi(" + token(vc->revision) + ", " + vc->combinator.name() + ")";
  switch (std::get<Direct>(impl_)) {
    case Direct::Natural: return "natural";
    case Direct::Lexicographic: return "lex";
    case Direct::Priority: return "priority";
  }
  return "?";
}

}  // namespace tqbc
