// freedl/syntax.hpp — structural measures and path machinery: subconcepts,
// modal depth, closure under single negation, relevant paths, box-prefixed
// concepts, substitution, assertion desugaring and fresh-name generation.

#ifndef FREEDL_SYNTAX_HPP
#define FREEDL_SYNTAX_HPP

#include <set>
#include <string>
#include <vector>

#include "freedl/ast.hpp"

namespace freedl {

// A sequence of modality indices, the carrier of relevant paths and box^pi.
using ModalPath = std::vector<int>;

std::set<Concept> subconcepts(Concept c);
std::set<Concept> subconcepts(const Ontology& o);

int modal_depth(Concept c);
int modal_depth(const CI& ci);
int modal_depth(const Ontology& o);

// Closure under single negation: every subconcept, and for each member that
// is not itself a negation, its negation.  No double negations introduced.
std::set<Concept> closure(Concept c);
std::set<Concept> closure(const Ontology& o);

// The set of b-relevant paths in d: the sequences of dia operators under
// which b occurs in d (empty set when b does not occur).
std::set<ModalPath> relevant_paths(Concept d, Concept b);

// Union of relevant_paths(d, b) over all subconcepts b of d.  Prefix-closed
// and always contains the empty path.
std::set<ModalPath> all_dia_paths(Concept d);

// Prefix closure of a path set (includes the empty path when input nonempty).
std::set<ModalPath> prefix_closure(const std::set<ModalPath>& paths);

// box^pi E: box_{i1} ... box_{ik} E for pi = (i1..ik); box^eps E = E.
Concept box_path(const ModalPath& pi, Concept e);

// Replace every occurrence of c in d by a (structural equality on the core).
Concept substitute(Concept d, Concept c, Concept a);

// Assertion sugar: C(tau) and r(tau1, tau2).
Concept desugar_concept_assertion(const Term& tau, Concept c);
Concept desugar_role_assertion(const std::string& role, const Term& tau1, const Term& tau2);

// Deterministic collision-free name: base itself if unused, else base_1,
// base_2, ... against all three name sets of sig.
std::string fresh_name(const std::string& base, const Signature& sig);

// Concepts of a set in the deterministic structural order.
std::vector<Concept> sorted(const std::set<Concept>& s);

}  // namespace freedl

#endif  // FREEDL_SYNTAX_HPP
