#include "doctest.h"

#include <random>

#include "freedl/ast.hpp"
#include "freedl/printer.hpp"
#include "freedl/syntax.hpp"
#include "support/gen.hpp"

using namespace freedl;

namespace {
Concept A() { return make_name("A"); }
Concept B() { return make_name("B"); }
}  // namespace

TEST_CASE("subconcepts base and recursive clauses") {
  CHECK(subconcepts(A()) == std::set<Concept>{A()});

  Concept na = make_not(A());
  CHECK(subconcepts(na) == std::set<Concept>{na, A()});

  Concept body = make_and(A(), B());
  Concept iota = make_iota(body);
  std::set<Concept> expect{iota, body, A(), B()};
  CHECK(subconcepts(iota) == expect);
}

TEST_CASE("subconcepts is idempotent") {
  std::mt19937_64 rng(7);
  testgen::GenOptions opts;
  opts.allow_iota = true;
  for (int i = 0; i < 200; ++i) {
    Concept c = testgen::random_concept(rng, opts);
    std::set<Concept> sub = subconcepts(c);
    std::set<Concept> uni;
    for (Concept d : sub) {
      auto s = subconcepts(d);
      uni.insert(s.begin(), s.end());
    }
    CHECK(sub == uni);
  }
}

TEST_CASE("modal depth") {
  CHECK(modal_depth(A()) == 0);
  CHECK(modal_depth(make_dia(1, make_dia(2, A()))) == 2);
  Concept c = make_and(make_iota(make_dia(1, A())), B());
  CHECK(modal_depth(c) == 1);
}

TEST_CASE("closure under single negation") {
  Concept a = A();
  std::set<Concept> cl = closure(a);
  CHECK(cl == std::set<Concept>{a, make_not(a)});

  Concept ab = make_and(a, B());
  std::set<Concept> cl2 = closure(ab);
  std::set<Concept> expect{ab, make_not(ab), a, make_not(a), B(), make_not(B())};
  CHECK(cl2 == expect);

  // Single negation only: no double negations are added.
  std::set<Concept> cl3 = closure(make_not(a));
  CHECK(cl3 == std::set<Concept>{make_not(a), a});
}

TEST_CASE("relevant paths: the worked example") {
  // D = dia1 not A and dia2 dia3 A
  Concept d = make_and(make_dia(1, make_not(A())), make_dia(2, make_dia(3, A())));
  CHECK(relevant_paths(d, A()) == std::set<ModalPath>{{1}, {2, 3}});
  CHECK(relevant_paths(d, make_not(A())) == std::set<ModalPath>{{1}});
  CHECK(relevant_paths(A(), A()) == std::set<ModalPath>{{}});
  CHECK(relevant_paths(d, make_name("Z")).empty());
}

TEST_CASE("relevant path inclusion laws on random concepts") {
  std::mt19937_64 rng(11);
  testgen::GenOptions opts;
  opts.allow_iota = true;
  opts.modalities = 2;
  auto subset = [](const std::set<ModalPath>& x, const std::set<ModalPath>& y) {
    for (const auto& p : x)
      if (!y.count(p)) return false;
    return true;
  };
  for (int i = 0; i < 300; ++i) {
    Concept c = testgen::random_concept(rng, opts);
    for (Concept b : subconcepts(c)) {
      auto rpb = relevant_paths(c, b);
      CHECK(subset(relevant_paths(c, make_iota(b)), rpb));
      CHECK(subset(relevant_paths(c, make_not(b)), rpb));
      CHECK(subset(relevant_paths(c, make_exists("r", b)), rpb));
      CHECK(subset(relevant_paths(c, make_exists_u(b)), rpb));
      for (int m = 1; m <= 2; ++m) {
        // rp(C, dia_m B) is included in the de-lifted rp(C, B).
        for (const auto& p : relevant_paths(c, make_dia(m, b))) {
          ModalPath q = p;
          q.push_back(m);
          CHECK(rpb.count(q) == 1);
        }
      }
      for (Concept d2 : {A(), B()}) {
        auto meet = relevant_paths(c, make_and(b, d2));
        CHECK(subset(meet, rpb));
        CHECK(subset(meet, relevant_paths(c, d2)));
      }
      int md = modal_depth(c);
      for (const auto& p : rpb) CHECK(static_cast<int>(p.size()) <= md);
    }
  }
}

TEST_CASE("box_path") {
  CHECK(box_path({}, A()) == A());
  CHECK(box_path({1, 2}, A()) == make_box(1, make_box(2, A())));
  Concept e = make_forall_u(make_iff(A(), B()));
  CHECK(box_path({2}, e) == make_box(2, e));
}

TEST_CASE("substitute") {
  CHECK(substitute(make_dia(1, B()), B(), A()) == make_dia(1, A()));
  CHECK(substitute(make_and(B(), make_not(B())), B(), A()) == make_and(A(), make_not(A())));
  Concept ap = make_name("Ap");
  CHECK(substitute(ap, B(), A()) == ap);
}

TEST_CASE("substitute round trips when the replacement name is absent") {
  std::mt19937_64 rng(23);
  testgen::GenOptions opts;
  for (int i = 0; i < 200; ++i) {
    Concept d = testgen::random_concept(rng, opts);
    Concept c = make_and(A(), B());
    Concept fresh = make_name("Zfresh");
    Concept once = substitute(d, c, fresh);
    CHECK(substitute(once, fresh, c) == d);
  }
}

TEST_CASE("assertion desugaring") {
  Concept busy = make_name("Busy");
  Concept got = desugar_concept_assertion(Term::ind("pierre"), busy);
  CHECK(got == make_exists_u(make_and(make_nominal("pierre"), busy)));

  Concept got2 = desugar_role_assertion("isGenChair", Term::ind("pierre"), Term::ind("kr24"));
  CHECK(got2 == make_exists_u(make_and(make_nominal("pierre"),
                                       make_exists("isGenChair", make_nominal("kr24")))));

  Concept got3 = desugar_concept_assertion(Term::ind("a"), make_top());
  CHECK(got3 == make_exists_u(make_and(make_nominal("a"), make_top())));
}

TEST_CASE("fresh names are deterministic and collision free") {
  Signature sig;
  CHECK(fresh_name("N_a", sig) == "N_a");
  sig.concept_names.insert("N_a");
  CHECK(fresh_name("N_a", sig) == "N_a_1");
  sig.concept_names.insert("N_a_1");
  CHECK(fresh_name("N_a", sig) == "N_a_2");
}

TEST_CASE("sugar constructors expand to the core") {
  CHECK(is_bot(make_bot()));
  CHECK(is_top(make_top()));
  CHECK(make_or(A(), B()) == make_not(make_and(make_not(A()), make_not(B()))));
  CHECK(make_box(1, A()) == make_not(make_dia(1, make_not(A()))));
  CHECK(match_box(make_box(3, A())).value() == std::make_pair(3, A()));
  CHECK(match_iff(make_iff(A(), B())).has_value());
  CHECK(!match_iff(make_and(A(), B())).has_value());
}

TEST_CASE("signatures exclude the reserved bottom name") {
  Concept c = make_and(make_bot(), make_exists("r", make_nominal("a")));
  Signature sig = signature_of(c);
  CHECK(sig.concept_names.empty());
  CHECK(sig.role_names == std::set<std::string>{"r"});
  CHECK(sig.individual_names == std::set<std::string>{"a"});
}
