#include <doctest.h>

#include "oracles.hpp"
#include "tqbc/change.hpp"
#include "tqbc/error.hpp"

using namespace tqbc;

namespace {

const Frame xyzw = Frame::parse_named("x,y,z,w");
Tpo T(const char* text) { return parse_tpo(text, xyzw); }
WorldSet S(const char* text) { return xyzw.parse_set(text); }

constexpr int kSync = 3;
int sync_both(std::size_t) { return kSync; }
int right_then_second(std::size_t i) { return i == 1 ? 3 : 2; }

// Every nonempty, non-full subset of the four 2-atom worlds, and every state.
const std::vector<Tpo>& states() {
  static const auto s = enumerate_tpos(4);
  return s;
}

}  // namespace

TEST_CASE("revision operators on a chain") {
  const BeliefState st(T("x | y | z | w"));
  CHECK(revise(st, S("y z"), RevisionOp::Lexicographic).order() == T("y | z | x | w"));
  CHECK(revise(st, S("y z"), RevisionOp::Natural).order() == T("y | x | z | w"));
  CHECK(revise(st, S("z w"), RevisionOp::Restrained).order() == T("z | x | y | w"));
  CHECK(revise(BeliefState(T("x y | z w")), S("y w"), RevisionOp::Restrained).order() == T("y | x | w | z"));
}

TEST_CASE("lex revision by the complement in the contraction example") {
  const BeliefState st(T("x | y | z | w"));
  CHECK(revise(st, S("y z"), RevisionOp::Lexicographic).order() == T("y | z | x | w"));
}

TEST_CASE("lexicographic contraction against STQ-lex contraction") {
  const BeliefState st(T("x | y | z | w"));
  const WorldSet a = S("x w");
  CHECK(lexicographic_contraction(st, a).order() == T("x y | z w"));
  CHECK(contract_via_combi(st, a, RevisionOp::Lexicographic, Combinator::stq()).order() == T("x y | z | w"));
  CHECK(priority_contraction(st, a).order() == T("x y | z | w"));
  CHECK(natural_contraction(st, a).order() == T("x y | z | w"));
}

TEST_CASE("sentence overloads agree with world-set overloads") {
  const Vocabulary v = Vocabulary::parse("p,q");
  const Sentence a = parse_sentence("p -> q", v);
  const WorldSet m = models(a, v);
  for (const Tpo& t : states()) {
    const BeliefState st(t);
    CHECK(revise(st, a, v, RevisionOp::Natural) == revise(st, m, RevisionOp::Natural));
    CHECK(natural_contraction(st, a, v) == natural_contraction(st, m));
    CHECK(lexicographic_contraction(st, a, v) == lexicographic_contraction(st, m));
    CHECK(priority_contraction(st, a, v) == priority_contraction(st, m));
    CHECK(contract_via_combi(st, a, v, RevisionOp::Restrained, Combinator::stq()) ==
          contract_via_combi(st, m, RevisionOp::Restrained, Combinator::stq()));
  }
}

TEST_CASE("input errors") {
  const BeliefState st(T("x | y | z | w"));
  CHECK_THROWS_AS(revise(st, WorldSet::none(4), RevisionOp::Natural), InconsistentInputError);
  CHECK_THROWS_AS(natural_contraction(st, WorldSet::all(4)), InadmissibleContractionError);
  CHECK_THROWS_AS(lexicographic_contraction(st, WorldSet::none(4)), InadmissibleContractionError);
  CHECK_THROWS_AS(contract_via_combi(st, WorldSet::all(4), RevisionOp::Natural, Combinator::stq()),
                  InadmissibleContractionError);
  CHECK_THROWS_AS(parse_revision_op("lexi"), FormatError);
  CHECK_THROWS_AS(ContractionOp::parse("severe", RevisionOp::Natural, Combinator::stq()), FormatError);
}

TEST_CASE("admissibility") {
  CHECK(ContractionOp::natural().admits(WorldSet::none(4)));
  CHECK_FALSE(ContractionOp::natural().admits(WorldSet::all(4)));
  CHECK_FALSE(ContractionOp::lexicographic().admits(WorldSet::none(4)));
  CHECK(ContractionOp::lexicographic().admits(S("x")));
}

TEST_CASE("operator names") {
  const auto c = ContractionOp::parse("via-combi", RevisionOp::Lexicographic, Combinator::stq());
  CHECK(c.name() == "via-combi(lex, stq)");
  CHECK(c.is_via_combi());
  CHECK(ContractionOp::parse("priority", RevisionOp::Natural, Combinator::stq()).name() == "priority");
  for (RevisionOp op : kAllRevisionOps) CHECK(parse_revision_op(token(op)) == op);
}

TEST_CASE("strong belief") {
  const BeliefState st(T("x | y | z w"));
  CHECK(is_strongly_believed(st, S("x")));
  CHECK(is_strongly_believed(st, S("x y")));
  CHECK_FALSE(is_strongly_believed(st, S("x z")));
  CHECK(is_strongly_believed(st, WorldSet::all(4)));
  const BeliefState lexed = revise(st, S("z w"), RevisionOp::Lexicographic);
  CHECK(is_strongly_believed(lexed, S("z w")));
}

TEST_CASE("revision matches the relational oracle on every 2-atom state and input") {
  for (const Tpo& t : states()) {
    for (const WorldSet& a : all_subsets(4, false)) {
      for (RevisionOp op : kAllRevisionOps) {
        CHECK(revise(BeliefState(t), a, op).order() == oracle::revise(t, a.bits(), op));
      }
    }
  }
}

TEST_CASE("contractions match the oracles on every 2-atom state and input") {
  for (const Tpo& t : states()) {
    const BeliefState st(t);
    for (const WorldSet& a : all_subsets(4)) {
      if (a.full()) continue;
      const std::uint32_t na = a.complement().bits();
      CHECK(natural_contraction(st, a).order() == oracle::natural_contraction(t, a.bits(), 0xF));
      for (RevisionOp op : kAllRevisionOps) {
        const Tpo r = oracle::revise(t, na, op);
        CHECK(contract_via_combi(st, a, op, Combinator::stq()).order() == oracle::team_queue(t, r, sync_both));
        CHECK(contract_via_combi(st, a, op, Combinator::right_biased()).order() == oracle::team_queue(t, r, right_then_second));
      }
      const Tpo lex_neg = oracle::revise(t, na, RevisionOp::Lexicographic);
      CHECK(priority_contraction(st, a).order() == oracle::team_queue(t, lex_neg, right_then_second));
      if (!a.empty()) {
        CHECK(lexicographic_contraction(st, a).order() == oracle::lexicographic_contraction(t, a.bits()));
      }
    }
  }
}

TEST_CASE("contractions remove the belief and keep old beliefs' worlds") {
  for (const Tpo& t : states()) {
    const BeliefState st(t);
    for (const WorldSet& a : all_subsets(4, false)) {
      if (a.full()) continue;
      for (const ContractionOp& c : {ContractionOp::natural(), ContractionOp::lexicographic(),
                                     ContractionOp::priority(),
                                     ContractionOp::via_combi(RevisionOp::Restrained, Combinator::stq())}) {
        const BeliefState out = c.apply(st, a);
        CHECK_FALSE(out.believes(a));
        CHECK(st.belief_models().subset_of(out.belief_models()));
      }
    }
  }
}
