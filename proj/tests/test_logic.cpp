#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tqbc/error.hpp"
#include "tqbc/frame.hpp"
#include "tqbc/logic.hpp"

using namespace tqbc;

namespace {

const Vocabulary pq = Vocabulary::parse("p,q");

WorldSet bits(const char* text) { return Frame::propositional(pq).parse_set(text); }

}  // namespace

TEST_CASE("vocabulary validation") {
  CHECK(pq.size() == 2);
  CHECK(pq.world_count() == 4);
  CHECK(pq.index_of("q") == 1);
  CHECK_FALSE(pq.index_of("r").has_value());
  CHECK_THROWS_AS(Vocabulary::parse("p,p"), InvalidVocabularyError);
  CHECK_THROWS_AS(Vocabulary::parse(""), InvalidVocabularyError);
  CHECK_THROWS_AS(Vocabulary::parse("a,b,c,d,e,f"), InvalidVocabularyError);
  CHECK_THROWS_AS(Vocabulary::parse("p,T"), InvalidVocabularyError);
  CHECK_THROWS_AS(Vocabulary::parse("p,1x"), InvalidVocabularyError);
}

TEST_CASE("parse builds the expected trees") {
  CHECK(parse_sentence("p & q", pq) == (Sentence::atom(0) && Sentence::atom(1)));
  CHECK(parse_sentence("p <-> !q", pq) == iff(Sentence::atom(0), !Sentence::atom(1)));
  CHECK(parse_sentence("p -> q -> p", pq) == implies(Sentence::atom(0), implies(Sentence::atom(1), Sentence::atom(0))));
  CHECK(parse_sentence("p | q & p", pq) == (Sentence::atom(0) || (Sentence::atom(1) && Sentence::atom(0))));
  CHECK(parse_sentence("p <-> q <-> p", pq) == iff(iff(Sentence::atom(0), Sentence::atom(1)), Sentence::atom(0)));
  CHECK(parse_sentence("!(T)", pq) == !Sentence::top());
}

TEST_CASE("parse errors report where and what") {
  try {
    parse_sentence("p & & q", pq);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.token() == 3);
    CHECK(std::string(e.what()).find("token 3") != std::string::npos);
  }
  try {
    parse_sentence("p & r", pq);
    FAIL("expected an unknown atom");
  } catch (const UnknownAtomError& e) {
    CHECK(e.atom() == "r");
  }
  CHECK_THROWS_AS(parse_sentence("(p", pq), SyntaxError);
  CHECK_THROWS_AS(parse_sentence("p q", pq), SyntaxError);
  CHECK_THROWS_AS(parse_sentence("", pq), SyntaxError);
  CHECK_THROWS_AS(parse_sentence("p - q", pq), SyntaxError);
}

TEST_CASE("models of small formulas") {
  CHECK(models(parse_sentence("p & q", pq), pq) == bits("11"));
  CHECK(models(parse_sentence("p <-> !q", pq), pq) == bits("10 01"));
  CHECK(models(parse_sentence("F", pq), pq).empty());
  CHECK(models(parse_sentence("T", pq), pq).full());
  CHECK(models(parse_sentence("!p", pq), pq) == bits("00 01"));
}

TEST_CASE("entailment is model inclusion") {
  CHECK(entails(bits("11"), parse_sentence("q", pq)));
  CHECK_FALSE(entails(bits("11 01"), parse_sentence("p", pq)));
  CHECK(entails(WorldSet::none(4), parse_sentence("F", pq)));
}

TEST_CASE("theory_of gives canonical full DNF") {
  CHECK(to_string(theory_of(bits("11"), pq), pq) == "p & q");
  CHECK(to_string(theory_of(WorldSet::all(4), pq), pq) == "T");
  CHECK(to_string(theory_of(WorldSet::none(4), pq), pq) == "F");
  CHECK(to_string(theory_of(bits("10 01"), pq), pq) == "(p & !q) | (!p & q)");
}

TEST_CASE("theory_of round-trips every world set") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> names{"a", "b", "c"};
    names.resize(n);
    const Vocabulary v(names);
    for (const WorldSet& ws : all_subsets(v.world_count())) {
      const Sentence s = theory_of(ws, v);
      CHECK(models(s, v) == ws);
      CHECK(entails(ws, s));
    }
  }
}

TEST_CASE("set algebra agrees with truth tables on random sentences") {
  std::mt19937 rng(7);
  const Vocabulary v = Vocabulary::parse("a,b,c");
  for (int i = 0; i < 500; ++i) {
    const Sentence a = oracle::random_sentence(rng, 3, 4);
    const Sentence b = oracle::random_sentence(rng, 3, 4);
    CHECK(models(a, v).bits() == oracle::models_mask(a, 3));
    CHECK(models(!a, v) == models(a, v).complement());
    CHECK(models(a && b, v) == (models(a, v) & models(b, v)));
    CHECK(models(a || b, v) == (models(a, v) | models(b, v)));
    for (World w : WorldSet::all(8)) CHECK(evaluate(a, w) == oracle::eval(a, w.index));
  }
}

TEST_CASE("printing then parsing is the identity on 1000 random trees") {
  std::mt19937 rng(2024);
  const Vocabulary v = Vocabulary::parse("p,q,r");
  for (int i = 0; i < 1000; ++i) {
    const Sentence s = oracle::random_sentence(rng, 3, 5);
    const std::string text = to_string(s, v);
    INFO(text);
    CHECK(parse_sentence(text, v) == s);
  }
}
