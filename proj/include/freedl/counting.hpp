// freedl/counting.hpp — the Diff fragment (elsewhere/counting quantifiers
// over the universal role) and the two reductions linking it to the nominal
// language: witness-nominal replacement of the elsewhere quantifier, and the
// quasistate-description abstraction in the converse direction.

#ifndef FREEDL_COUNTING_HPP
#define FREEDL_COUNTING_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "freedl/ast.hpp"
#include "freedl/decide.hpp"
#include "freedl/model.hpp"
#include "freedl/reductions.hpp"

namespace freedl {

// Extension of a Diff-fragment concept (rejects non-fragment input).
std::uint32_t diff_extension(const Interpretation& m, int w, Concept c);

// The description of a quasistate: only u.(t1 or ... or tk) and some u.t for
// every member type, with types rendered as member conjunctions.
Concept quasistate_description(const TypeUniverse& u, const std::vector<int>& type_indices);

// Diff -> nominal language: replaces every some!= u. B (bodies surrogated to
// names first) with the witness-nominal pattern and emits the witness CIs;
// some=1 is rewritten through its elsewhere definition up front.
ReductionResult mldiff_to_mlalcou_ontology(const Ontology& o);
ReductionResult mldiff_to_mlalcou_concept(Concept d);

// Nominal language -> Diff: the quasistate-description construction.  The
// satisfiable quasistates are found by modal abstraction + ALCOu type
// elimination; candidate types pair the goal with the Diff ontology.
struct CountingBridge {
  Ontology odiff;
  std::vector<Concept> candidate_types;  // sharp-mapped type conjunctions containing the goal
  std::map<std::string, std::string> fresh;
  int quasistate_count = 0;  // satisfiable quasistates found
  int type_count = 0;
};

CountingBridge mlalcou_to_mldiff(const std::string& goal, const Ontology& o,
                                 int closure_cap = 12,
                                 const DecideLimits& limits = {});

}  // namespace freedl

#endif  // FREEDL_COUNTING_HPP
