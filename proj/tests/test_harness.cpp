#include <doctest.h>

#include <cstdlib>

#include "tqbc/error.hpp"
#include "tqbc/harness.hpp"
#include "tqbc/report.hpp"

using namespace tqbc;

TEST_CASE("theorem ids") {
  for (TheoremId t : all_theorems()) CHECK(parse_theorem_id(token(t)) == t);
  CHECK(parse_theorem_id("thm1") == TheoremId::Prop4);
  CHECK(parse_theorem_id("thm2") == TheoremId::Prop9);
  CHECK_THROWS_AS(parse_theorem_id("prop11"), FormatError);
  CHECK(size_unit(TheoremId::Prop3) == SizeUnit::Worlds);
  CHECK(size_unit(TheoremId::Prop7) == SizeUnit::Atoms);
}

TEST_CASE("the test family") {
  const auto& fam = test_family();
  CHECK(fam.size() == 24);
  CHECK(fam[0].name() == "stq");
  CHECK(fam[1].name() == "right-biased");
  CHECK(fam[2].name() == "tq:12,1");
  CHECK(fam.back().name() == "tq:pair-hash");
  // The seeded schedules are fixed across runs.
  CHECK(test_family()[5].name() == fam[5].name());
}

TEST_CASE("small runs pass with their known instance counts") {
  const RunReport r4 = run_theorem(TheoremId::Prop4, 3);
  CHECK(r4.pass());
  CHECK(r4.instances == 169);
  const RunReport r10 = run_theorem(TheoremId::Prop10);
  CHECK(r10.pass());
  CHECK(r10.instances == 1125);
  const RunReport r3 = run_theorem(TheoremId::Prop3);
  CHECK(r3.pass());
  CHECK(r3.instances == 2197);
}

TEST_CASE("reports render deterministically") {
  const RunReport a = run_theorem(TheoremId::Prop9);
  const RunReport b = run_theorem(TheoremId::Prop9);
  CHECK(render_text(a) == render_text(b));
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK_FALSE(to_json(a).contains("wall_seconds"));
  CHECK(to_json(a, true).contains("wall_seconds"));
  CHECK(render_text(a).find("result: PASS") != std::string::npos);
}

TEST_CASE("world cap") {
  ::unsetenv("TQBC_MAX_WORLDS");
  CHECK(world_cap() == 4);
  CHECK_THROWS_AS(run_theorem(TheoremId::Prop3, 5), CapExceededError);
  ::setenv("TQBC_MAX_WORLDS", "64", 1);
  CHECK(world_cap() == kMaxEnumerationWorlds);
  ::unsetenv("TQBC_MAX_WORLDS");
}

TEST_CASE("default vocabulary") {
  CHECK(default_vocabulary(3).size() == 3);
  CHECK(default_vocabulary(2).atom(0) == "p");
}
