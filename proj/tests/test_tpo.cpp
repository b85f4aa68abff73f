#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tqbc/error.hpp"
#include "tqbc/tpo.hpp"

using namespace tqbc;

namespace {

const Frame wxyz = Frame::parse_named("w,x,y,z");

Tpo T(const char* text) { return parse_tpo(text, wxyz); }
WorldSet S(const char* text) { return wxyz.parse_set(text); }
World at(const char* name) { return wxyz.world(name); }

}  // namespace

TEST_CASE("ranks") {
  CHECK(rank(T("z | w | x y"), at("w")).value == 2);
  CHECK(rank(T("w x y z"), at("y")).value == 1);
  CHECK(rank(T("x | y | z | w"), at("w")).value == 4);
}

TEST_CASE("minima") {
  CHECK(min_worlds(T("z | w | x y"), WorldSet::all(4)) == S("z"));
  CHECK(min_worlds(T("z | w | x y"), WorldSet::none(4)).empty());
  CHECK(min_worlds(T("x z | y | w"), S("w y")) == S("y"));
  CHECK(min_worlds(T("z | w | x y"), S("x y")) == S("x y"));
}

TEST_CASE("tpo validation and text round trip") {
  CHECK_THROWS_AS(T("x | y"), FormatError);        // does not cover W
  CHECK_THROWS_AS(T("x y | y z | w"), FormatError);  // overlapping cells
  CHECK_THROWS_AS(T("x | | y z w"), FormatError);    // empty cell
  CHECK_THROWS_AS(T("x | q | y z w"), FormatError);  // unknown world
  CHECK(format_tpo(T("z|w|x  y"), wxyz) == "z | w | x y");
  CHECK(format_tpo(T("y x | z w"), wxyz) == "x y | w z");
}

TEST_CASE("S-variants from the worked example") {
  const Tpo t1 = T("w | x | y | z");
  const Tpo t2 = T("w | x y | z");
  CHECK(is_s_variant(t1, t2, S("y z")));
  CHECK_FALSE(is_s_variant(t1, t2, S("x y")));
  CHECK(is_s_variant(t1, t1, S("x")));
  const auto wit = find_variant_set(t1, t2);
  REQUIRE(wit);
  CHECK(is_s_variant(t1, t2, wit->set()));
  CHECK(wit->set() == S("x"));  // smallest encoding; {y z} is also valid
  CHECK_FALSE(VariantWitness::make(t1, t2, S("x y")).has_value());
}

TEST_CASE("variant witness on a two-world flip and on identical inputs") {
  const Frame xy = Frame::parse_named("x,y");
  const auto w = find_variant_set(parse_tpo("x | y", xy), parse_tpo("y | x", xy));
  REQUIRE(w);
  CHECK(w->set() == xy.parse_set("x"));
  CHECK(find_variant_set(T("z | w | x y"), T("z | w | x y"))->set().empty());
}

TEST_CASE("some pairs lie outside V(W)") {
  // Full reversal of four singletons admits no separating S.
  CHECK_FALSE(find_variant_set(T("w | x | y | z"), T("z | y | x | w")).has_value());
}

TEST_CASE("enumeration counts match the surjection oracle") {
  CHECK(oracle::ordered_bell(2) == 3);
  CHECK(oracle::ordered_bell(3) == 13);
  CHECK(oracle::ordered_bell(4) == 75);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(enumerate_tpos(n).size() == oracle::ordered_bell(n));
  CHECK(enumerate_tpos(2).size() == 3);
  CHECK(enumerate_tpos(3).size() == 13);
  CHECK(enumerate_tpos(4).size() == 75);
  CHECK_THROWS_AS(enumerate_tpos(9), CapExceededError);
  CHECK_THROWS_AS(enumerate_tpos(5, 4), CapExceededError);
}

TEST_CASE("enumeration yields each tpo once and nothing else") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<oracle::Keys> seen;
    for (const Tpo& t : enumerate_tpos(n)) {
      CHECK(seen.insert(oracle::keys_of(t)).second);
      WorldSet cover = WorldSet::none(n);
      for (const WorldSet& c : t.cells()) {
        CHECK_FALSE(c.empty());
        CHECK_FALSE(c.intersects(cover));
        cover |= c;
      }
      CHECK(cover.full());
    }
    CHECK(seen == oracle::all_key_vectors(n));
  }
}

TEST_CASE("enumeration order is deterministic") {
  CHECK(enumerate_tpos(4) == enumerate_tpos(4));
}

TEST_CASE("property: min agrees with rank comparison, and variance is symmetric in S") {
  std::mt19937 rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const Tpo t = oracle::random_tpo(rng, n);
    const Tpo u = oracle::random_tpo(rng, n);
    const WorldSet s(n, rng());
    CHECK(t.min(s).bits() == oracle::min_mask(oracle::keys_of(t), s.bits()));
    for (World x : WorldSet::all(n)) {
      bool minimal = s.contains(x);
      for (World y : s) minimal = minimal && t.rank(x) <= t.rank(y);
      CHECK(t.min(s).contains(x) == minimal);
    }
    CHECK(is_s_variant(t, u, s) == is_s_variant(t, u, s.complement()));
  }
}
