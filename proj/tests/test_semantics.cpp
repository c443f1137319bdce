#include "doctest.h"

#include <random>

#include "freedl/model.hpp"
#include "freedl/oracle.hpp"
#include "freedl/parser.hpp"
#include "support/gen.hpp"

using namespace freedl;

namespace {

// Two worlds 0 -R1-> 1, two elements, a = d0 at world 0 and d1 at world 1.
Interpretation shifting_model() {
  Interpretation m;
  m.frame = Frame(2, 1);
  m.frame.add_edge(1, 0, 1);
  m.pool_size = 2;
  m.domain = {3u, 3u};
  m.concept_ext["A"] = {1u, 2u};
  m.individuals["a"] = {0, 1};
  return m;
}

Interpretation single_world_total() {
  Interpretation m;
  m.frame = Frame(1, 1);
  m.pool_size = 1;
  m.domain = {1u};
  m.concept_ext["A"] = {1u};
  m.individuals["a"] = {0};
  return m;
}

}  // namespace

TEST_CASE("term values") {
  Interpretation m = single_world_total();
  CHECK(term_value(m, 0, Term::iota(make_name("A"))) == 0);
  CHECK(term_value(m, 0, Term::ind("missing")) == std::nullopt);

  Interpretation two;
  two.frame = Frame(1, 1);
  two.pool_size = 2;
  two.domain = {3u};
  two.concept_ext["A"] = {3u};  // two elements: not a singleton
  CHECK(term_value(two, 0, Term::iota(make_name("A"))) == std::nullopt);
}

TEST_CASE("nominal extension is empty when the name does not designate") {
  Interpretation m = single_world_total();
  m.individuals["a"] = {-1};
  CHECK(extension(m, 0, make_nominal("a")) == 0u);
  CHECK(extension(m, 0, make_not(make_name("A"))) == (m.domain[0] & ~m.concept_ext["A"][0]));
}

TEST_CASE("next is empty at the last instant of a finite flow") {
  // Flow [0,1]: modality 1 = successor, 2 = strict order.
  Interpretation m;
  m.frame = Frame(2, 2);
  m.frame.add_edge(1, 0, 1);
  m.frame.add_edge(2, 0, 1);
  m.pool_size = 1;
  m.domain = {1u, 1u};
  m.concept_ext["A"] = {1u, 1u};
  Concept next_a = make_dia(1, make_name("A"));
  CHECK(extension(m, 0, next_a) == 1u);
  CHECK(extension(m, 1, next_a) == 0u);
}

TEST_CASE("concept inclusions") {
  Interpretation m = single_world_total();
  CHECK(satisfies_ci(m, CI{make_top(), make_top()}));
  CHECK(!satisfies_ci(m, CI{make_name("A"), make_bot()}));

  Interpretation shift = shifting_model();
  Concept nom = make_nominal("a");
  CHECK(!satisfies_ci(shift, CI{nom, make_box(1, nom)}));
}

TEST_CASE("model properties") {
  ModelProperties p1 = model_properties(single_world_total());
  CHECK(p1.is_total);
  CHECK(p1.is_rda);
  CHECK(p1.is_constant_domain);

  Interpretation ghost = single_world_total();
  ghost.individuals["a"] = {-1};
  CHECK(model_properties(ghost).is_rda);  // vacuously rigid
  CHECK(!model_properties(ghost).is_total);

  CHECK(!model_properties(shifting_model()).is_rda);
}

TEST_CASE("enumeration counts and modes") {
  Signature sig;
  sig.concept_names.insert("A");
  sig.individual_names.insert("a");
  ModelBounds b;
  b.max_worlds = 1;
  b.max_domain = 1;
  b.designation_mode = DesignationMode::Total;
  // Over the single reflexive S5 frame: two extensions of A, one total
  // assignment of a.  K additionally has the irreflexive one-world frame.
  b.frame_class = FrameClass::s5n(1);
  int count = 0;
  enumerate_models(sig, b, [&](const Interpretation&) {
    ++count;
    return true;
  });
  CHECK(count == 2);
  b.frame_class = FrameClass::kn(1);
  count = 0;
  enumerate_models(sig, b, [&](const Interpretation&) {
    ++count;
    return true;
  });
  CHECK(count == 4);

  b.designation_mode = DesignationMode::Partial;
  bool saw_empty_map = false;
  enumerate_models(sig, b, [&](const Interpretation& m) {
    if (m.individuals.at("a")[0] < 0) saw_empty_map = true;
    return true;
  });
  CHECK(saw_empty_map);

  ModelBounds s5;
  s5.max_worlds = 3;
  s5.max_domain = 1;
  s5.frame_class = FrameClass::s5n(1);
  Signature tiny;
  tiny.concept_names.insert("A");
  enumerate_models(tiny, s5, [&](const Interpretation& m) {
    CHECK(model_properties(m).in_s5);
    return true;
  });
}

TEST_CASE("semantic De Morgan and world-local universal role on random models") {
  Signature sig;
  sig.concept_names = {"A", "B"};
  ModelBounds b;
  b.max_worlds = 2;
  b.max_domain = 2;
  int seen = 0;
  enumerate_models(sig, b, [&](const Interpretation& m) {
    for (int w = 0; w < m.world_count(); ++w) {
      Concept a = make_name("A"), bb = make_name("B");
      std::uint32_t lhs = extension(m, w, make_not(make_and(a, bb)));
      std::uint32_t rhs = extension(m, w, make_not(a)) | extension(m, w, make_not(bb));
      CHECK(lhs == rhs);
      bool nonempty = extension(m, w, a) != 0;
      std::uint32_t eu = extension(m, w, make_exists_u(a));
      CHECK((eu != 0) == nonempty);
      if (nonempty) CHECK(eu == m.domain[static_cast<size_t>(w)]);
    }
    return ++seen < 400;
  });
  CHECK(seen > 0);
}

TEST_CASE("RDA-enforcing CIs give edge rigidity on enumerated models") {
  Signature sig;
  sig.individual_names.insert("a");
  sig.concept_names.insert("A");
  ModelBounds b;
  b.max_worlds = 2;
  b.max_domain = 2;
  Ontology rda = parse_ontology("{a} [= box1 {a}");
  int checked = 0;
  enumerate_models(sig, b, [&](const Interpretation& m) {
    if (!satisfies_ontology(m, rda)) return true;
    const auto& vals = m.individuals.at("a");
    for (int w = 0; w < m.world_count(); ++w)
      for (int v = 0; v < m.world_count(); ++v)
        if (m.frame.edge(1, w, v) && vals[static_cast<size_t>(w)] >= 0) {
          CHECK(vals[static_cast<size_t>(v)] == vals[static_cast<size_t>(w)]);
        }
    return ++checked < 500;
  });
  CHECK(checked > 0);
}
