// freedl/ast.hpp — interned abstract syntax for modal free description logic
// concepts, terms, concept inclusions and ontologies.
//
// Concepts are nodes in an interned DAG: two structurally identical concepts
// share the same id, so equality is O(1) and sets of concepts can be held as
// id sets.  The store is append-only and process-global (single-threaded).
//
// The core constructors are:
//   Name A | Nominal {a} | Nominal {iota C} | not C | (C and D)
//   | some r. C | some u. C | dia<i> C
// plus the two counting quantifiers of the Diff fragment:
//   some!= u. C | some=1 u. C
// Everything else (top, bot, or, =>, <=>, only, box) is sugar and is expanded
// at construction time.  bot is the reserved conjunction `Bot0 and not Bot0`.

#ifndef FREEDL_AST_HPP
#define FREEDL_AST_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace freedl {

enum class Kind : std::uint8_t {
  Name,       // concept name, sym
  NomInd,     // {a}, sym = individual name
  NomIota,    // {iota C}, a = body
  Not,        // a
  And,        // a, b
  ExistsRole, // some r. C, sym = role, a = body
  ExistsU,    // some u. C, a
  ExistsNeq,  // some!= u. C, a   (Diff fragment only)
  ExistsEq1,  // some=1 u. C, a   (Diff fragment only)
  Dia,        // dia<i> C, mod = i (1-based), a
};

using ConceptId = std::int32_t;
inline constexpr ConceptId kNoConcept = -1;

// Reserved concept name realizing bot = Bot0 and not Bot0.  Rejected by the
// parser and excluded from signatures.
inline constexpr const char* kReservedBotName = "Bot0";

struct Node {
  Kind kind;
  std::uint16_t mod = 0;  // Dia only
  std::int32_t sym = -1;  // Name/NomInd/ExistsRole: index into the string pool
  ConceptId a = kNoConcept;
  ConceptId b = kNoConcept;
  bool operator==(const Node& o) const {
    return kind == o.kind && mod == o.mod && sym == o.sym && a == o.a && b == o.b;
  }
};

class ConceptStore {
 public:
  static ConceptStore& instance();

  ConceptId intern(Node n);
  const Node& node(ConceptId id) const { return nodes_[static_cast<size_t>(id)]; }
  std::int32_t intern_string(const std::string& s);
  const std::string& string(std::int32_t sym) const { return strings_[static_cast<size_t>(sym)]; }
  std::size_t size() const { return nodes_.size(); }

 private:
  ConceptStore() = default;
  struct NodeHash {
    std::size_t operator()(const Node& n) const;
  };
  std::vector<Node> nodes_;
  std::unordered_map<Node, ConceptId, NodeHash> node_ids_;
  std::vector<std::string> strings_;
  std::unordered_map<std::string, std::int32_t> string_ids_;
};

// Value handle for concepts.  Cheap to copy; equality is structural.
struct Concept {
  ConceptId id = kNoConcept;
  Concept() = default;
  explicit Concept(ConceptId i) : id(i) {}
  bool valid() const { return id != kNoConcept; }
  bool operator==(const Concept& o) const { return id == o.id; }
  bool operator!=(const Concept& o) const { return id != o.id; }
  bool operator<(const Concept& o) const { return id < o.id; }

  const Node& node() const { return ConceptStore::instance().node(id); }
  Kind kind() const { return node().kind; }
  Concept child() const { return Concept(node().a); }
  Concept left() const { return Concept(node().a); }
  Concept right() const { return Concept(node().b); }
  int modality() const { return node().mod; }
  const std::string& symbol() const { return ConceptStore::instance().string(node().sym); }
};

// A term is an individual name or a definite description body.
struct Term {
  bool is_name = true;
  std::string name;    // when is_name
  Concept body;        // when !is_name
  static Term ind(std::string a) { return Term{true, std::move(a), Concept()}; }
  static Term iota(Concept c) { return Term{false, {}, c}; }
  bool operator==(const Term& o) const {
    return is_name == o.is_name && (is_name ? name == o.name : body == o.body);
  }
};

struct CI {
  Concept lhs, rhs;
  bool operator==(const CI& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

struct Ontology {
  std::vector<CI> cis;
  int modality_count = 1;
};

struct Signature {
  std::set<std::string> concept_names;
  std::set<std::string> role_names;
  std::set<std::string> individual_names;

  bool contains(const std::string& s) const {
    return concept_names.count(s) || role_names.count(s) || individual_names.count(s);
  }
  void merge(const Signature& o) {
    concept_names.insert(o.concept_names.begin(), o.concept_names.end());
    role_names.insert(o.role_names.begin(), o.role_names.end());
    individual_names.insert(o.individual_names.begin(), o.individual_names.end());
  }
};

// Core constructors.
Concept make_name(const std::string& a);
Concept make_nominal(const std::string& ind);
Concept make_iota(Concept body);
Concept make_nominal(const Term& t);
Concept make_not(Concept c);
Concept make_and(Concept a, Concept b);
Concept make_exists(const std::string& role, Concept c);
Concept make_exists_u(Concept c);
Concept make_exists_neq_u(Concept c);
Concept make_exists_eq1_u(Concept c);
Concept make_dia(int i, Concept c);

// Sugar, expanded immediately.
Concept make_bot();
Concept make_top();
Concept make_or(Concept a, Concept b);
Concept make_implies(Concept a, Concept b);
Concept make_iff(Concept a, Concept b);
Concept make_forall(const std::string& role, Concept c);
Concept make_forall_u(Concept c);
Concept make_box(int i, Concept c);
Concept make_and_all(const std::vector<Concept>& cs);  // right fold; empty -> top
Concept make_or_all(const std::vector<Concept>& cs);   // right fold; empty -> bot

// Sugar recognizers (exact inverses of the constructors above).
bool is_bot(Concept c);
bool is_top(Concept c);
std::optional<std::pair<Concept, Concept>> match_or(Concept c);
std::optional<std::pair<Concept, Concept>> match_implies(Concept c);
std::optional<std::pair<Concept, Concept>> match_iff(Concept c);
std::optional<std::pair<std::string, Concept>> match_forall(Concept c);
std::optional<Concept> match_forall_u(Concept c);
std::optional<std::pair<int, Concept>> match_box(Concept c);

// Fragment predicates (syntactic checks on the sugar-free core).
bool is_concept_name(Concept c);
bool is_iota_free(Concept c);
bool is_iota_free(const Ontology& o);
bool is_u_free(Concept c);
bool is_u_free(const Ontology& o);
bool is_modality_free(Concept c);
bool is_diff_free(Concept c);           // no some!=/some=1
bool is_diff_free(const Ontology& o);
bool is_mldiff(Concept c);              // names, not, and, some u, some!= u, some=1 u, dia only
bool is_mldiff(const Ontology& o);
bool is_el_positive(Concept c);         // top, names, nominals, and, some r/u, dia

// Signature of a concept / CI / ontology (reserved bot name excluded).
Signature signature_of(Concept c);
Signature signature_of(const Ontology& o);

// Deterministic structural order, independent of interning order.
bool structural_less(Concept a, Concept b);

}  // namespace freedl

#endif  // FREEDL_AST_HPP
