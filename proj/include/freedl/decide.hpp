// freedl/decide.hpp — decision procedures: ALCOu type elimination, S5^n/K^n
// tree-shaped quasimodel search, the LTL next-fragment run-elimination
// subroutine, and a budgeted Kf*n vector-quasimodel search.
//
// All procedures decide total-designation satisfiability (S5/K/ALCOu over
// constant domains, Kf*n over expanding domains); the CLI composes the
// reduction pipeline to reach these modes from other ones.

#ifndef FREEDL_DECIDE_HPP
#define FREEDL_DECIDE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freedl/ast.hpp"
#include "freedl/model.hpp"
#include "freedl/reductions.hpp"
#include "freedl/syntax.hpp"

namespace freedl {

// The closure of an input under single negation, with the maximal consistent
// subsets (types) enumerated as bitsets.  Type conditions: negation (C1),
// conjunction (C2), universal-role closure, and for S5 the reflexive diamond
// closure.
class TypeUniverse {
 public:
  struct DiaMember { int modality; int self; int body; };       // dia_i C
  struct RoleMember { std::string role; int self; int body; };  // some r. C
  struct UMember { int self; int body; };                       // some u. C
  struct NomMember { std::string name; int self; };             // {a}

  static TypeUniverse build(const std::vector<Concept>& seeds, bool reflexive_dia,
                            int member_cap = 24, int type_cap = 64);

  int member_count() const { return static_cast<int>(members_.size()); }
  int type_count() const { return static_cast<int>(types_.size()); }
  const std::vector<Concept>& members() const { return members_; }
  const std::vector<std::uint64_t>& types() const { return types_; }
  int index_of(Concept c) const;            // -1 when absent
  bool has(int type, int member) const {
    return (types_[static_cast<size_t>(type)] >> member) & 1ull;
  }
  const std::vector<DiaMember>& dia_members() const { return dias_; }
  const std::vector<RoleMember>& role_members() const { return roles_; }
  const std::vector<UMember>& u_members() const { return us_; }
  const std::vector<NomMember>& nominal_members() const { return noms_; }
  bool type_has_nominal(int type) const;
  std::string type_description(int type) const;
  // The conjunction of a type's members, optionally mapped through f.
  Concept type_concept(int type) const;

  // Q2 witness compatibility within one world: every negative some-r
  // constraint of t carried to t2, and body in t2.
  bool role_witness_ok(const RoleMember& rm, int t, int t2) const;
  // Run compatibility along an r-edge between elements: C in t2 implies
  // some r. C in t, for all some r. C members.
  bool role_edge_compatible(const std::string& role, int t, int t2) const;

 private:
  std::vector<Concept> members_;
  std::map<ConceptId, int> index_;
  std::vector<std::uint64_t> types_;
  std::vector<DiaMember> dias_;
  std::vector<RoleMember> roles_;
  std::vector<UMember> us_;
  std::vector<NomMember> noms_;
};

// Exactly the C1/C2-consistent subsets of closure(c0), in bitset order.
std::vector<std::uint64_t> enumerate_types(Concept c0, int member_cap = 24, int type_cap = 64);

struct DecideLimits {
  int closure_cap = 20;
  int type_cap = 64;
  std::int64_t work_cap = 4'000'000;
};

// --- ALCOu type elimination ------------------------------------------------------

// Satisfiability of a modality-free ALCOu concept under an ALCOu ontology
// (partial designation, single world).
bool alcou_sat(Concept c, const Ontology& o, const DecideLimits& limits = {});

// --- S5^n / K^n tree-shaped quasimodels --------------------------------------------

struct QuasimodelNode {
  int parent = -1;        // -1 at the root
  int incoming = 0;       // edge label from the parent (0 at the root)
  std::uint64_t state = 0;  // quasistate as a set of type indices
};

struct TreeQuasimodel {
  bool s5 = false;
  int modality_count = 1;
  std::vector<QuasimodelNode> nodes;
  // Every run assigns a type index to every node; runs[r][x].
  std::vector<std::vector<int>> runs;
};

enum class DecideVerdict { Sat, Unsat };

struct ModalSatResult {
  DecideVerdict verdict = DecideVerdict::Unsat;
  std::optional<TreeQuasimodel> witness;
};

// Total-designation constant-domain concept satisfiability over S5^n / K^n.
ModalSatResult s5n_sat(Concept c0, int modality_count, const DecideLimits& limits = {});
ModalSatResult kn_sat(Concept c0, int modality_count, const DecideLimits& limits = {});

// Independent validation of a quasimodel against the raw conditions
// (Q1-Q3, B1, R1-R2, M1-M2); fills `why` on failure.
bool check_quasimodel(const TreeQuasimodel& q, Concept c0, std::string* why = nullptr);

// Model extraction: domain = runs, roles by type compatibility, nominals by
// the unique nominal run.
Interpretation quasimodel_to_model(const TreeQuasimodel& q, Concept c0);

// --- LTL next-fragment (run elimination) ---------------------------------------------

struct LtlRunSystem {
  int m0 = 0;
  std::vector<std::vector<int>> runs;        // surviving runs as type tuples
  std::vector<std::vector<int>> nominal_runs;  // the chosen nominal system
};

struct LtlSatResult {
  DecideVerdict verdict = DecideVerdict::Unsat;
  std::optional<LtlRunSystem> witness;
};

// Total-designation constant-domain satisfiability at instant 0 of a flow for
// next-only concepts (roles, nominals and the universal role allowed).
LtlSatResult ltl_next_sat(Concept c0, FlowKind flow, const DecideLimits& limits = {});

Interpretation ltl_runs_to_model(Concept c0, const LtlRunSystem& rs);

// --- Kf*n budgeted vector quasimodels ---------------------------------------------------

struct KfnBudget {
  int max_worlds = 3;
  int max_multiplicity = 3;
};

enum class KfnVerdict { Sat, UnsatWithinBudget };

struct KfnTreeNode {
  int parent = -1;
  int incoming = 0;  // 1..n edge label
};

struct KfnWitness {
  std::vector<KfnTreeNode> nodes;
  // Rooted runs: type index per node, -1 outside the run's (descendant-
  // closed) domain.
  std::vector<std::vector<int>> runs;
};

struct KfnResult {
  KfnVerdict verdict = KfnVerdict::UnsatWithinBudget;
  bool multiplicity_capped = false;  // the CAP stood in for unbounded counts
  std::optional<KfnWitness> witness;
};

// Expanding-domain total-designation satisfiability over Kf*n frames; the
// last modality (base+1) is the transitive closure of the others.  Complete
// within the budget.
KfnResult kfn_sat_budgeted(Concept c0, int base_modalities, const KfnBudget& budget,
                           const DecideLimits& limits = {});

bool check_kfn_witness(const KfnWitness& w, Concept c0, int base_modalities,
                       std::string* why = nullptr);
Interpretation kfn_witness_to_model(Concept c0, int base_modalities, const KfnWitness& w);

}  // namespace freedl

#endif  // FREEDL_DECIDE_HPP
