// freedl/reductions.hpp — satisfiability-preserving transformations between
// semantic modes and fragments: RDA enforcement, total/partial designation,
// ontology and concept normal forms, spy-point elimination of the universal
// role, nominal/description interchange, expanding-to-constant domain
// relativisation, and the temporal ELO disjunction/bottom eliminations.
//
// Every operation returns the transformed object together with a provenance
// map for the fresh names it introduced and notes on the mode change.

#ifndef FREEDL_REDUCTIONS_HPP
#define FREEDL_REDUCTIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freedl/ast.hpp"
#include "freedl/errors.hpp"
#include "freedl/model.hpp"
#include "freedl/syntax.hpp"

namespace freedl {

struct ReductionResult {
  std::optional<Concept> concept_out;
  std::optional<Ontology> ontology_out;
  std::map<std::string, std::string> fresh;  // fresh name -> origin
  std::vector<std::string> notes;            // mode deltas consumed/produced
};

// Deterministic fresh-name source seeded with a signature; names never clash
// with it or with each other.
class FreshNamer {
 public:
  explicit FreshNamer(Signature sig) : sig_(std::move(sig)) {}
  // Exact base if free, else base_1, base_2, ...
  std::string concept_name(const std::string& base);
  std::string role_name(const std::string& base);
  std::string individual_name(const std::string& base);
  // base1, base2, ... (always suffixed; used for surrogate chains).
  std::string numbered_concept(const std::string& base);

 private:
  Signature sig_;
  std::map<std::string, int> counters_;
};

// --- RDA -------------------------------------------------------------------

// Adds {a} [= box_i {a} for every modality and every individual name in o.
ReductionResult enforce_rda_ontology(const Ontology& o);

// Concept-level RDA enforcement; sound for total interpretations only and
// refused otherwise (see the counterexample guard in the tests).
Concept enforce_rda_concept_total(Concept c, DesignationMode mode);

// --- total <-> partial designation ------------------------------------------

ReductionResult totalize_ontology(const Ontology& o);
ReductionResult totalize_concept(Concept c);
ReductionResult partialize_ontology(const Ontology& o);
ReductionResult partialize_concept(Concept c);

// --- normal forms ------------------------------------------------------------

// A CI is in normal form when one side is a concept name and the other is a
// name or a single constructor applied to names.
bool is_normal_form_ci(const CI& ci);
bool is_normal_form(const Ontology& o);
ReductionResult normalize_ontology(const Ontology& o);

// Concept normal form: a head concept name plus conjuncts
// box^pi only u.(C <=> A) with C a single constructor over names.
struct NormalFormStep {
  Concept lhs;            // the surrogated constructor (depth one over names)
  std::string surrogate;  // its fresh name A
  std::vector<ModalPath> paths;
};
struct NormalFormConcept {
  std::string head;
  std::vector<NormalFormStep> steps;
  std::map<std::string, std::string> fresh;
  Concept to_concept() const;
};
NormalFormConcept normalize_concept(Concept d);
// Recognize an already-assembled normal-form concept (inverse of to_concept).
std::optional<NormalFormConcept> match_normal_form_concept(Concept c);

// Single Lemma-8 step on a standalone concept: d
// becomes d[c/A] and box^pi only u.(c <=> A) for pi in rp(d, c).
Concept surrogate_step(Concept d, Concept c, const std::string& surrogate);

// --- universal role ----------------------------------------------------------

// Spy-point elimination; input must be in normal form.  Positive u-CIs get a
// fresh role, negative ones the four spy-point CIs.
ReductionResult eliminate_universal_role(const Ontology& o);

// --- nominals <-> definite descriptions --------------------------------------

ReductionResult nominals_to_iota(const Ontology& o);
ReductionResult nominals_to_iota_concept(Concept c);
// Requires iota applied to concept names housed in A [= {iota B} / {iota B} [= A
// CIs (ontology case) or in normal-form conjuncts (concept case); total mode.
ReductionResult iota_to_nominals_ontology(const Ontology& o);
ReductionResult iota_to_nominals_concept(const NormalFormConcept& nf);

// --- expanding -> constant domains --------------------------------------------

struct SatBundle {
  Concept goal;
  Ontology ontology;
};
ReductionResult relativize_to_constant(const SatBundle& bundle);

// --- temporal ELO tricks -------------------------------------------------------

enum class FlowKind { Finite, Infinite };
// Replaces top [= B1 or B2 CIs (and negation shapes) by the four future-role
// CIs; finite flows first guard every input CI with dia2 dia2 top.
ReductionResult eliminate_disjunction_elo(const Ontology& o, FlowKind flow);
// Replaces bot by a fresh sink L and adds the L-propagation CIs.
ReductionResult eliminate_bot_elo(const Ontology& o);

}  // namespace freedl

#endif  // FREEDL_REDUCTIONS_HPP
