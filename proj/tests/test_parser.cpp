#include "doctest.h"

#include <random>

#include "freedl/parser.hpp"
#include "freedl/printer.hpp"
#include "support/gen.hpp"

using namespace freedl;

TEST_CASE("parses the motivating concept") {
  Concept c =
      parse_concept("some u. ({pierre} and box1 {iota some isGenChair. {kr24}})");
  Concept expect = make_exists_u(make_and(
      make_nominal("pierre"),
      make_box(1, make_iota(make_exists("isGenChair", make_nominal("kr24"))))));
  CHECK(c == expect);
}

TEST_CASE("no simplification of double negation") {
  CHECK(parse_concept("not not A") == make_not(make_not(make_name("A"))));
}

TEST_CASE("ontology CIs") {
  Ontology o = parse_ontology("A [= dia1 A");
  REQUIRE(o.cis.size() == 1);
  CHECK(o.cis[0].lhs == make_name("A"));
  CHECK(o.cis[0].rhs == make_dia(1, make_name("A")));
  CHECK(o.modality_count == 1);

  Ontology two = parse_ontology("A [= B\n# comment\nB [= dia2 A\n");
  CHECK(two.cis.size() == 2);
  CHECK(two.modality_count == 2);
}

TEST_CASE("printer canonical forms") {
  CHECK(print_concept(make_bot()) == "bot");
  CHECK(print_concept(make_top()) == "top");
  CHECK(print_concept(make_dia(1, make_name("A"))) == "dia1 A");
  CHECK(print_concept(make_box(2, make_name("A"))) == "box2 A");
  CHECK(print_concept(make_or(make_name("A"), make_name("B"))) == "(A or B)");
  CHECK(print_concept(make_forall_u(make_name("A"))) == "only u. A");
  CHECK(print_concept(make_exists_neq_u(make_name("A"))) == "some!= u. A");
}

TEST_CASE("temporal aliases") {
  CHECK(parse_concept("X A") == make_dia(1, make_name("A")));
  CHECK(parse_concept("F A") == make_dia(2, make_name("A")));
  CHECK(parse_concept("G A") == make_box(2, make_name("A")));
}

TEST_CASE("errors carry source spans") {
  try {
    parse_concept("A and\n  some r bad");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.span().line == 2);
    CHECK(e.span().column >= 3);
  }
  CHECK_THROWS_AS(parse_concept("some!= u. A"), ParseError);  // counting mode only
  ParseOptions diff;
  diff.allow_diff = true;
  CHECK(parse_concept("some!= u. A", diff) == make_exists_neq_u(make_name("A")));
  CHECK(parse_concept("some=1 u. A", diff) == make_exists_eq1_u(make_name("A")));
  CHECK_THROWS_AS(parse_concept("Bot0"), ParseError);  // reserved

  ParseOptions capped;
  capped.max_modality = 2;
  CHECK_THROWS_AS(parse_concept("dia3 A", capped), ParseError);
}

TEST_CASE("round trip on random concepts") {
  std::mt19937_64 rng(101);
  testgen::GenOptions opts;
  opts.allow_iota = true;
  opts.allow_diff = true;
  opts.modalities = 3;
  opts.closure_cap = 40;
  opts.max_depth = 5;
  opts.max_modal_depth = 4;
  ParseOptions popts;
  popts.allow_diff = true;
  for (int i = 0; i < 1000; ++i) {
    Concept c = testgen::random_concept(rng, opts);
    Concept back = parse_concept(print_concept(c), popts);
    CHECK(back == c);
  }
}

TEST_CASE("ontology print round trip") {
  std::mt19937_64 rng(5);
  testgen::GenOptions opts;
  for (int i = 0; i < 50; ++i) {
    Ontology o = testgen::random_ontology(rng, opts, 3);
    Ontology back = parse_ontology(print_ontology(o));
    REQUIRE(back.cis.size() == o.cis.size());
    for (std::size_t j = 0; j < o.cis.size(); ++j) {
      CHECK(back.cis[j].lhs == o.cis[j].lhs);
      CHECK(back.cis[j].rhs == o.cis[j].rhs);
    }
  }
}

TEST_CASE("minsky machine files") {
  MinskyMachine m = parse_minsky(
      "states: q0 q1 q2\n"
      "0: inc r1 -> q1\n"
      "1: dec r2 -> q0 else q2\n");
  CHECK(m.state_count() == 3);
  CHECK(m.halting_state() == 2);
  REQUIRE(m.instructions.size() == 2);
  CHECK(m.instructions[0].is_inc);
  CHECK(m.instructions[0].reg == 1);
  CHECK(m.instructions[0].target == 1);
  CHECK(!m.instructions[1].is_inc);
  CHECK(m.instructions[1].target == 0);
  CHECK(m.instructions[1].target_zero == 2);

  CHECK_THROWS_AS(parse_minsky("states: q0 q1\n"), ParseError);  // missing instruction
  CHECK_THROWS_AS(parse_minsky("states: q0\n0: inc r1 -> q0\n"), ParseError);
  MinskyMachine trivial = parse_minsky("states: q0\n");
  CHECK(trivial.state_count() == 1);
}
