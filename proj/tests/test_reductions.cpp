#include "doctest.h"

#include <random>

#include "freedl/oracle.hpp"
#include "freedl/parser.hpp"
#include "freedl/printer.hpp"
#include "freedl/reductions.hpp"
#include "support/gen.hpp"

using namespace freedl;

namespace {

bool sat(Concept goal, const Ontology& o, ModelBounds b) {
  return oracle_sat(goal, o, b).verdict == OracleVerdict::Sat;
}
bool sat(Concept goal, ModelBounds b) {
  return oracle_sat(goal, b).verdict == OracleVerdict::Sat;
}

ModelBounds bounds(DesignationMode d, bool rda = false,
                   DomainMode dom = DomainMode::Constant, int n = 1) {
  ModelBounds b;
  b.max_worlds = 3;
  b.max_domain = 3;
  b.frame_class = FrameClass::kn(n);
  b.designation_mode = d;
  b.domain_mode = dom;
  b.rda = rda;
  return b;
}

}  // namespace

TEST_CASE("enforce_rda_ontology adds the rigidity CIs") {
  Ontology o = parse_ontology("A [= {a}");
  ReductionResult r = enforce_rda_ontology(o);
  REQUIRE(r.ontology_out->cis.size() == 2);
  CHECK(print_ci(r.ontology_out->cis[1]) == "{a} [= box1 {a}");

  Ontology no_names = parse_ontology("A [= B");
  CHECK(enforce_rda_ontology(no_names).ontology_out->cis.size() == 1);
}

TEST_CASE("enforce_rda_ontology is oracle-equivalent") {
  std::mt19937_64 rng(41);
  testgen::GenOptions opts;
  opts.modalities = 1;
  opts.closure_cap = 7;
  Concept goal = make_name("A");
  for (int i = 0; i < 25; ++i) {
    Ontology o = testgen::random_ontology(rng, opts, 2);
    ReductionResult r = enforce_rda_ontology(o);
    bool lhs = sat(goal, o, bounds(DesignationMode::Partial, true));
    bool rhs = sat(goal, *r.ontology_out, bounds(DesignationMode::Partial, false));
    INFO(print_ontology(o));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("enforce_rda_concept_total schema and refusal") {
  Concept c = parse_concept("dia1 some u. {a}");
  Concept out = enforce_rda_concept_total(c, DesignationMode::Total);
  Concept expect = make_and(
      c, make_forall_u(make_implies(make_nominal("a"), make_box(1, make_nominal("a")))));
  CHECK(out == expect);

  Concept plain = parse_concept("A and dia1 B");
  CHECK(enforce_rda_concept_total(plain, DesignationMode::Total) == plain);

  CHECK_THROWS_AS(enforce_rda_concept_total(c, DesignationMode::Partial), ModeError);
}

TEST_CASE("enforce_rda_concept_total is oracle-equivalent in total mode") {
  std::mt19937_64 rng(43);
  testgen::GenOptions opts;
  opts.modalities = 1;
  opts.closure_cap = 7;
  opts.individual_names = {"a"};
  for (int i = 0; i < 25; ++i) {
    Concept c = testgen::random_concept(rng, opts);
    Concept out = enforce_rda_concept_total(c, DesignationMode::Total);
    bool lhs = sat(c, bounds(DesignationMode::Total, true));
    bool rhs = sat(out, bounds(DesignationMode::Total, false));
    INFO(print_concept(c));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("totalize schemas") {
  Ontology o = parse_ontology("A [= {a}");
  ReductionResult r = totalize_ontology(o);
  CHECK(print_ci(r.ontology_out->cis[1]) == "top [= some u. {a}");

  Concept c = parse_concept("dia1 {a}");
  ReductionResult rc = totalize_concept(c);
  CHECK(*rc.concept_out == make_and(c, make_box(1, make_exists_u(make_nominal("a")))));

  Concept noname = parse_concept("A and B");
  CHECK(*totalize_concept(noname).concept_out == noname);
}

TEST_CASE("partialize schemas") {
  Ontology o = parse_ontology("{a} [= A");
  ReductionResult r = partialize_ontology(o);
  REQUIRE(r.ontology_out->cis.size() == 2);
  CHECK(print_ci(r.ontology_out->cis[0]) == "N_a [= A");
  CHECK(print_ci(r.ontology_out->cis[1]) == "N_a [= {a}");

  ReductionResult rc = partialize_concept(parse_concept("{a}"));
  Concept expect = make_and(make_name("N_a"),
                            make_forall_u(make_implies(make_name("N_a"), make_nominal("a"))));
  CHECK(*rc.concept_out == expect);

  CHECK(*partialize_concept(parse_concept("A")).concept_out == parse_concept("A"));
}

TEST_CASE("totalize and partialize are oracle-equivalent across modes") {
  std::mt19937_64 rng(47);
  testgen::GenOptions opts;
  opts.modalities = 1;
  opts.closure_cap = 7;
  opts.individual_names = {"a"};
  for (int i = 0; i < 20; ++i) {
    Concept c = testgen::random_concept(rng, opts);
    ReductionResult tot = totalize_concept(c);
    CHECK(sat(c, bounds(DesignationMode::Total)) ==
          sat(*tot.concept_out, bounds(DesignationMode::Partial)));
    ReductionResult par = partialize_concept(c);
    CHECK(sat(c, bounds(DesignationMode::Partial)) ==
          sat(*par.concept_out, bounds(DesignationMode::Total)));
  }
}

TEST_CASE("ontology normal form") {
  Ontology o = parse_ontology("top [= dia1 (A and B)");
  ReductionResult r = normalize_ontology(o);
  CHECK(is_normal_form(*r.ontology_out));

  Ontology already = parse_ontology("A [= dia1 B\nnot A [= B");
  ReductionResult r2 = normalize_ontology(already);
  CHECK(r2.ontology_out->cis.size() == already.cis.size());
  CHECK(is_normal_form(*r2.ontology_out));
}

TEST_CASE("normalize_ontology restriction property and equisatisfiability") {
  std::mt19937_64 rng(53);
  testgen::GenOptions opts;
  opts.modalities = 1;
  opts.closure_cap = 6;
  opts.individual_names = {"a"};
  Concept goal = make_name("A");
  for (int i = 0; i < 15; ++i) {
    Ontology o = testgen::random_ontology(rng, opts, 2);
    ReductionResult r = normalize_ontology(o);
    CHECK(is_normal_form(*r.ontology_out));
    CHECK(sat(goal, o, bounds(DesignationMode::Partial)) ==
          sat(goal, *r.ontology_out, bounds(DesignationMode::Partial)));
  }
  // Models of the output restrict to models of the input.
  Ontology o = parse_ontology("A [= dia1 (A and B)");
  ReductionResult r = normalize_ontology(o);
  Signature sig = signature_of(*r.ontology_out);
  ModelBounds b = bounds(DesignationMode::Partial);
  b.max_worlds = 2;
  b.max_domain = 1;
  int seen = 0;
  enumerate_models(sig, b, [&](const Interpretation& m) {
    if (satisfies_ontology(m, *r.ontology_out)) CHECK(satisfies_ontology(m, o));
    return ++seen < 3000;
  });
}

TEST_CASE("concept normal form structure") {
  Concept d = parse_concept("dia1 (A and B)");
  NormalFormConcept nf = normalize_concept(d);
  CHECK(nf.steps.size() == 2);
  CHECK(nf.steps[0].lhs == parse_concept("A and B"));
  CHECK(nf.steps[0].paths == std::vector<ModalPath>{{1}});
  CHECK(nf.steps[1].lhs == make_dia(1, make_name(nf.steps[0].surrogate)));
  CHECK(nf.steps[1].paths == std::vector<ModalPath>{{}});
  CHECK(nf.head == nf.steps[1].surrogate);

  Concept assembled = nf.to_concept();
  auto matched = match_normal_form_concept(assembled);
  REQUIRE(matched.has_value());
  CHECK(matched->head == nf.head);
  CHECK(matched->steps.size() == nf.steps.size());

  CHECK(normalize_concept(parse_concept("A")).to_concept() == parse_concept("A"));
}

TEST_CASE("normalize_concept is oracle-equisatisfiable") {
  std::mt19937_64 rng(59);
  testgen::GenOptions opts;
  opts.modalities = 1;
  opts.closure_cap = 6;
  for (int i = 0; i < 15; ++i) {
    Concept d = testgen::random_concept(rng, opts);
    Concept out = normalize_concept(d).to_concept();
    INFO(print_concept(d));
    CHECK(sat(d, bounds(DesignationMode::Partial)) ==
          sat(out, bounds(DesignationMode::Partial)));
  }
}

TEST_CASE("surrogate step keeps path sets") {
  Concept d = parse_concept("dia1 not A and dia2 dia3 A");
  Concept c = parse_concept("not A");
  Concept out = surrogate_step(d, c, "Zs");
  CHECK(relevant_paths(out, make_name("Zs")) == relevant_paths(d, c));
  CHECK(relevant_paths(out, make_name("A")) == relevant_paths(d, make_name("A")));
}

TEST_CASE("spy points eliminate the universal role") {
  Ontology pos = parse_ontology("B [= some u. Bp");
  ReductionResult r = eliminate_universal_role(pos);
  REQUIRE(r.ontology_out->cis.size() == 1);
  CHECK(print_ci(r.ontology_out->cis[0]) == "B [= some r. Bp");

  Ontology neg = parse_ontology("some u. B [= Bp");
  ReductionResult r2 = eliminate_universal_role(neg);
  REQUIRE(r2.ontology_out->cis.size() == 4);
  CHECK(print_ci(r2.ontology_out->cis[0]) == "top [= some r. {e}");
  CHECK(print_ci(r2.ontology_out->cis[1]) == "A [= {e}");
  CHECK(print_ci(r2.ontology_out->cis[2]) == "not Bp [= some r. A");
  CHECK(print_ci(r2.ontology_out->cis[3]) == "some r. A [= not B");
  CHECK(is_u_free(*r2.ontology_out));

  Ontology ufree = parse_ontology("B [= some r. Bp");
  CHECK(eliminate_universal_role(ufree).ontology_out->cis.size() == 1);

  CHECK_THROWS_AS(eliminate_universal_role(parse_ontology("B [= some u. (A and B)")),
                  NotNormalFormError);
}

TEST_CASE("spy-point reduction is oracle-equivalent") {
  std::mt19937_64 rng(61);
  testgen::GenOptions opts;
  opts.modalities = 1;
  opts.closure_cap = 6;
  Concept goal = make_name("A");
  for (int i = 0; i < 12; ++i) {
    Ontology o = testgen::random_ontology(rng, opts, 2);
    Ontology normal = *normalize_ontology(o).ontology_out;
    ReductionResult r = eliminate_universal_role(normal);
    CHECK(is_u_free(*r.ontology_out));
    INFO(print_ontology(normal));
    CHECK(sat(goal, normal, bounds(DesignationMode::Partial)) ==
          sat(goal, *r.ontology_out, bounds(DesignationMode::Partial)));
  }
}

TEST_CASE("nominals to descriptions and back") {
  Ontology o = parse_ontology("{a} [= A");
  ReductionResult r = nominals_to_iota(o);
  CHECK(print_ci(r.ontology_out->cis[0]) == "{iota N_a} [= A");

  Ontology plain = parse_ontology("A [= B");
  CHECK(print_ontology(*nominals_to_iota(plain).ontology_out) == print_ontology(plain));

  Ontology housing = parse_ontology("Ai [= {iota B}\n{iota B} [= Ai");
  ReductionResult r2 = iota_to_nominals_ontology(housing);
  REQUIRE(r2.ontology_out->cis.size() == 2);
  CHECK(print_ci(r2.ontology_out->cis[0]) == "Ai [= (B and {a_B})");
  CHECK(print_ci(r2.ontology_out->cis[1]) ==
        "(B and only u. (B => {a_B})) [= Ai");
  CHECK(is_iota_free(*r2.ontology_out));

  CHECK_THROWS_AS(iota_to_nominals_ontology(parse_ontology("A [= dia1 {iota B}")),
                  NotNormalFormError);
}

TEST_CASE("nominals_to_iota is oracle-equivalent in partial mode") {
  std::mt19937_64 rng(67);
  testgen::GenOptions opts;
  opts.modalities = 1;
  opts.closure_cap = 6;
  opts.individual_names = {"a"};
  Concept goal = make_name("A");
  for (int i = 0; i < 12; ++i) {
    Ontology o = testgen::random_ontology(rng, opts, 2);
    ReductionResult r = nominals_to_iota(o);
    INFO(print_ontology(o));
    CHECK(sat(goal, o, bounds(DesignationMode::Partial)) ==
          sat(goal, *r.ontology_out, bounds(DesignationMode::Partial)));
  }
}

TEST_CASE("iota elimination pipeline is oracle-equisatisfiable") {
  std::mt19937_64 rng(71);
  testgen::GenOptions opts;
  opts.modalities = 1;
  opts.closure_cap = 6;
  opts.allow_iota = true;
  opts.individual_names = {};
  opts.allow_nominals = false;
  for (int i = 0; i < 10; ++i) {
    Concept c = testgen::random_concept(rng, opts);
    NormalFormConcept nf = normalize_concept(c);
    ReductionResult r = iota_to_nominals_concept(nf);
    CHECK(is_iota_free(*r.concept_out));
    INFO(print_concept(c));
    CHECK(sat(c, bounds(DesignationMode::Total)) ==
          sat(*r.concept_out, bounds(DesignationMode::Total)));
  }
}

TEST_CASE("relativization to constant domains") {
  SatBundle b{parse_concept("some r. A"), Ontology{{}, 1}};
  ReductionResult r = relativize_to_constant(b);
  Concept ex = make_name("Ex");
  Concept expect = make_and(
      make_and(ex, make_exists("r", make_and(ex, make_name("A")))),
      make_forall_u(make_implies(ex, make_box(1, ex))));
  CHECK(*r.concept_out == expect);

  std::mt19937_64 rng(73);
  testgen::GenOptions opts;
  opts.modalities = 1;
  opts.closure_cap = 6;
  for (int i = 0; i < 10; ++i) {
    Concept c = testgen::random_concept(rng, opts);
    SatBundle in{c, Ontology{{}, 1}};
    ReductionResult rr = relativize_to_constant(in);
    bool lhs = sat(c, bounds(DesignationMode::Total, false, DomainMode::Expanding));
    bool rhs = sat(*rr.concept_out, bounds(DesignationMode::Total));
    INFO(print_concept(c));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("ELO disjunction elimination emits the four future CIs") {
  Ontology o = parse_ontology("top [= B1 or B2");
  ReductionResult r = eliminate_disjunction_elo(o, FlowKind::Infinite);
  REQUIRE(r.ontology_out->cis.size() == 4);
  CHECK(print_ci(r.ontology_out->cis[0]) == "top [= some q. (dia2 X1 and dia2 X2)");
  CHECK(print_ci(r.ontology_out->cis[1]) == "some q. dia2 (X1 and dia2 X2) [= B1");
  CHECK(print_ci(r.ontology_out->cis[2]) == "some q. dia2 (X1 and X2) [= B1");
  CHECK(print_ci(r.ontology_out->cis[3]) == "some q. dia2 (X2 and dia2 X1) [= B2");

  Ontology plain = parse_ontology("B1 [= some s. B2");
  CHECK(print_ontology(*eliminate_disjunction_elo(plain, FlowKind::Infinite).ontology_out) ==
        print_ontology(plain));

  ReductionResult guarded = eliminate_disjunction_elo(plain, FlowKind::Finite);
  CHECK(print_ci(guarded.ontology_out->cis[0]) == "(dia2 dia2 top and B1) [= some s. B2");
}

TEST_CASE("ELO bottom elimination") {
  Ontology o = parse_ontology("B1 and B2 [= bot\nB1 [= some s. B2");
  ReductionResult r = eliminate_bot_elo(o);
  const Ontology& out = *r.ontology_out;
  REQUIRE(out.cis.size() == 4);
  CHECK(print_ci(out.cis[0]) == "(B1 and B2) [= L");
  CHECK(print_ci(out.cis[2]) == "some s. L [= L");
  CHECK(print_ci(out.cis[3]) == "dia2 L [= L");

  Ontology nobot = parse_ontology("B1 [= some s. B2");
  ReductionResult r2 = eliminate_bot_elo(nobot);
  CHECK(r2.ontology_out->cis.size() == 3);  // original + s-propagation + future-propagation

  CHECK_THROWS_AS(eliminate_bot_elo(parse_ontology("bot [= B1")), ShapeError);
}
