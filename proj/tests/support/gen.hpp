// Shared random generators for property and acceptance tests.  Everything is
// seeded explicitly so failures reproduce.

#ifndef FREEDL_TESTS_GEN_HPP
#define FREEDL_TESTS_GEN_HPP

#include <random>
#include <string>
#include <vector>

#include "freedl/ast.hpp"
#include "freedl/syntax.hpp"

namespace freedl::testgen {

struct GenOptions {
  int modalities = 2;
  std::vector<std::string> concept_names = {"A", "B"};
  std::vector<std::string> role_names = {"r"};
  std::vector<std::string> individual_names = {"a", "b"};
  bool allow_iota = false;
  bool allow_u = true;
  bool allow_nominals = true;
  bool allow_roles = true;
  bool allow_diff = false;
  int max_depth = 3;
  int closure_cap = 8;
  int max_modal_depth = 2;
};

inline Concept random_concept_raw(std::mt19937_64& rng, const GenOptions& o, int depth,
                                  int modal_budget) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  auto leaf = [&]() -> Concept {
    bool nom = o.allow_nominals && !o.individual_names.empty() && pick(3) == 0;
    if (nom) return make_nominal(o.individual_names[static_cast<size_t>(pick(
        static_cast<int>(o.individual_names.size())))]);
    return make_name(
        o.concept_names[static_cast<size_t>(pick(static_cast<int>(o.concept_names.size())))]);
  };
  if (depth <= 0) return leaf();
  int r = pick(10);
  switch (r) {
    case 0:
    case 1:
      return leaf();
    case 2:
      return make_not(random_concept_raw(rng, o, depth - 1, modal_budget));
    case 3:
    case 4:
      return make_and(random_concept_raw(rng, o, depth - 1, modal_budget),
                      random_concept_raw(rng, o, depth - 1, modal_budget));
    case 5:
      if (o.allow_roles && !o.role_names.empty())
        return make_exists(
            o.role_names[static_cast<size_t>(pick(static_cast<int>(o.role_names.size())))],
            random_concept_raw(rng, o, depth - 1, modal_budget));
      return leaf();
    case 6:
      if (o.allow_u) return make_exists_u(random_concept_raw(rng, o, depth - 1, modal_budget));
      return leaf();
    case 7:
      if (o.allow_diff)
        return make_exists_neq_u(random_concept_raw(rng, o, depth - 1, modal_budget));
      if (o.allow_iota)
        return make_iota(random_concept_raw(rng, o, depth - 1, modal_budget));
      return leaf();
    case 8:
      if (o.allow_iota) return make_iota(random_concept_raw(rng, o, depth - 1, modal_budget));
      return make_not(random_concept_raw(rng, o, depth - 1, modal_budget));
    default:
      if (modal_budget > 0)
        return make_dia(1 + pick(o.modalities),
                        random_concept_raw(rng, o, depth - 1, modal_budget - 1));
      return leaf();
  }
}

inline Concept random_concept(std::mt19937_64& rng, const GenOptions& o) {
  for (;;) {
    Concept c = random_concept_raw(rng, o, o.max_depth, o.max_modal_depth);
    if (static_cast<int>(closure(c).size()) <= o.closure_cap &&
        modal_depth(c) <= o.max_modal_depth)
      return c;
  }
}

inline Ontology random_ontology(std::mt19937_64& rng, const GenOptions& o, int max_cis) {
  for (;;) {
    Ontology onto;
    onto.modality_count = o.modalities;
    int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_cis));
    GenOptions shallow = o;
    shallow.max_depth = 2;
    for (int i = 0; i < k; ++i) {
      Concept lhs = random_concept_raw(rng, shallow, shallow.max_depth, o.max_modal_depth);
      Concept rhs = random_concept_raw(rng, shallow, shallow.max_depth, o.max_modal_depth);
      onto.cis.push_back(CI{lhs, rhs});
    }
    if (static_cast<int>(closure(onto).size()) <= o.closure_cap &&
        modal_depth(onto) <= o.max_modal_depth)
      return onto;
  }
}

}  // namespace freedl::testgen

#endif
