#include "freedl/ast.hpp"

#include <functional>
#include <stdexcept>

namespace freedl {

ConceptStore& ConceptStore::instance() {
  static ConceptStore store;
  return store;
}

std::size_t ConceptStore::NodeHash::operator()(const Node& n) const {
  std::size_t h = static_cast<std::size_t>(n.kind);
  h = h * 1000003u + n.mod;
  h = h * 1000003u + static_cast<std::size_t>(n.sym + 1);
  h = h * 1000003u + static_cast<std::size_t>(n.a + 1);
  h = h * 1000003u + static_cast<std::size_t>(n.b + 1);
  return h;
}

ConceptId ConceptStore::intern(Node n) {
  auto it = node_ids_.find(n);
  if (it != node_ids_.end()) return it->second;
  ConceptId id = static_cast<ConceptId>(nodes_.size());
  nodes_.push_back(n);
  node_ids_.emplace(n, id);
  return id;
}

std::int32_t ConceptStore::intern_string(const std::string& s) {
  auto it = string_ids_.find(s);
  if (it != string_ids_.end()) return it->second;
  std::int32_t id = static_cast<std::int32_t>(strings_.size());
  strings_.push_back(s);
  string_ids_.emplace(s, id);
  return id;
}

namespace {
ConceptId intern_node(Kind k, int mod, std::int32_t sym, ConceptId a, ConceptId b) {
  Node n;
  n.kind = k;
  n.mod = static_cast<std::uint16_t>(mod);
  n.sym = sym;
  n.a = a;
  n.b = b;
  return ConceptStore::instance().intern(n);
}
std::int32_t sym(const std::string& s) { return ConceptStore::instance().intern_string(s); }
}  // namespace

Concept make_name(const std::string& a) {
  return Concept(intern_node(Kind::Name, 0, sym(a), kNoConcept, kNoConcept));
}
Concept make_nominal(const std::string& ind) {
  return Concept(intern_node(Kind::NomInd, 0, sym(ind), kNoConcept, kNoConcept));
}
Concept make_iota(Concept body) {
  return Concept(intern_node(Kind::NomIota, 0, -1, body.id, kNoConcept));
}
Concept make_nominal(const Term& t) {
  return t.is_name ? make_nominal(t.name) : make_iota(t.body);
}
Concept make_not(Concept c) {
  return Concept(intern_node(Kind::Not, 0, -1, c.id, kNoConcept));
}
Concept make_and(Concept a, Concept b) {
  return Concept(intern_node(Kind::And, 0, -1, a.id, b.id));
}
Concept make_exists(const std::string& role, Concept c) {
  return Concept(intern_node(Kind::ExistsRole, 0, sym(role), c.id, kNoConcept));
}
Concept make_exists_u(Concept c) {
  return Concept(intern_node(Kind::ExistsU, 0, -1, c.id, kNoConcept));
}
Concept make_exists_neq_u(Concept c) {
  return Concept(intern_node(Kind::ExistsNeq, 0, -1, c.id, kNoConcept));
}
Concept make_exists_eq1_u(Concept c) {
  return Concept(intern_node(Kind::ExistsEq1, 0, -1, c.id, kNoConcept));
}
Concept make_dia(int i, Concept c) {
  if (i < 1) throw std::invalid_argument("modality index must be >= 1");
  return Concept(intern_node(Kind::Dia, i, -1, c.id, kNoConcept));
}

Concept make_bot() {
  Concept a0 = make_name(kReservedBotName);
  return make_and(a0, make_not(a0));
}
Concept make_top() { return make_not(make_bot()); }
Concept make_or(Concept a, Concept b) {
  return make_not(make_and(make_not(a), make_not(b)));
}
Concept make_implies(Concept a, Concept b) {
  return make_not(make_and(a, make_not(b)));
}
Concept make_iff(Concept a, Concept b) {
  return make_and(make_implies(a, b), make_implies(b, a));
}
Concept make_forall(const std::string& role, Concept c) {
  return make_not(make_exists(role, make_not(c)));
}
Concept make_forall_u(Concept c) {
  return make_not(make_exists_u(make_not(c)));
}
Concept make_box(int i, Concept c) {
  return make_not(make_dia(i, make_not(c)));
}
Concept make_and_all(const std::vector<Concept>& cs) {
  if (cs.empty()) return make_top();
  Concept acc = cs.back();
  for (size_t i = cs.size() - 1; i-- > 0;) acc = make_and(cs[i], acc);
  return acc;
}
Concept make_or_all(const std::vector<Concept>& cs) {
  if (cs.empty()) return make_bot();
  Concept acc = cs.back();
  for (size_t i = cs.size() - 1; i-- > 0;) acc = make_or(cs[i], acc);
  return acc;
}

bool is_bot(Concept c) {
  static const ConceptId bot_id = make_bot().id;
  return c.id == bot_id;
}
bool is_top(Concept c) {
  static const ConceptId top_id = make_top().id;
  return c.id == top_id;
}

std::optional<std::pair<Concept, Concept>> match_or(Concept c) {
  // not (not A and not B)
  if (c.kind() != Kind::Not) return std::nullopt;
  Concept inner = c.child();
  if (inner.kind() != Kind::And) return std::nullopt;
  Concept l = inner.left(), r = inner.right();
  if (l.kind() != Kind::Not || r.kind() != Kind::Not) return std::nullopt;
  return std::make_pair(l.child(), r.child());
}
std::optional<std::pair<Concept, Concept>> match_implies(Concept c) {
  // not (A and not B)
  if (c.kind() != Kind::Not) return std::nullopt;
  Concept inner = c.child();
  if (inner.kind() != Kind::And) return std::nullopt;
  Concept l = inner.left(), r = inner.right();
  if (r.kind() != Kind::Not) return std::nullopt;
  return std::make_pair(l, r.child());
}
std::optional<std::pair<Concept, Concept>> match_iff(Concept c) {
  if (c.kind() != Kind::And) return std::nullopt;
  auto fwd = match_implies(c.left());
  auto bwd = match_implies(c.right());
  if (!fwd || !bwd) return std::nullopt;
  if (fwd->first == bwd->second && fwd->second == bwd->first)
    return std::make_pair(fwd->first, fwd->second);
  return std::nullopt;
}
std::optional<std::pair<std::string, Concept>> match_forall(Concept c) {
  if (c.kind() != Kind::Not) return std::nullopt;
  Concept inner = c.child();
  if (inner.kind() != Kind::ExistsRole) return std::nullopt;
  Concept body = inner.child();
  if (body.kind() != Kind::Not) return std::nullopt;
  return std::make_pair(inner.symbol(), body.child());
}
std::optional<Concept> match_forall_u(Concept c) {
  if (c.kind() != Kind::Not) return std::nullopt;
  Concept inner = c.child();
  if (inner.kind() != Kind::ExistsU) return std::nullopt;
  Concept body = inner.child();
  if (body.kind() != Kind::Not) return std::nullopt;
  return body.child();
}
std::optional<std::pair<int, Concept>> match_box(Concept c) {
  if (c.kind() != Kind::Not) return std::nullopt;
  Concept inner = c.child();
  if (inner.kind() != Kind::Dia) return std::nullopt;
  Concept body = inner.child();
  if (body.kind() != Kind::Not) return std::nullopt;
  return std::make_pair(inner.modality(), body.child());
}

namespace {
// Generic check over all nodes of a concept tree.
bool all_nodes(Concept c, const std::function<bool(Concept)>& pred) {
  if (!pred(c)) return false;
  switch (c.kind()) {
    case Kind::Name:
    case Kind::NomInd:
      return true;
    case Kind::And:
      return all_nodes(c.left(), pred) && all_nodes(c.right(), pred);
    default:
      return all_nodes(c.child(), pred);
  }
}
}  // namespace

bool is_concept_name(Concept c) { return c.kind() == Kind::Name; }

bool is_iota_free(Concept c) {
  return all_nodes(c, [](Concept x) { return x.kind() != Kind::NomIota; });
}
bool is_iota_free(const Ontology& o) {
  for (const CI& ci : o.cis)
    if (!is_iota_free(ci.lhs) || !is_iota_free(ci.rhs)) return false;
  return true;
}
bool is_u_free(Concept c) {
  return all_nodes(c, [](Concept x) {
    return x.kind() != Kind::ExistsU && x.kind() != Kind::ExistsNeq && x.kind() != Kind::ExistsEq1;
  });
}
bool is_u_free(const Ontology& o) {
  for (const CI& ci : o.cis)
    if (!is_u_free(ci.lhs) || !is_u_free(ci.rhs)) return false;
  return true;
}
bool is_modality_free(Concept c) {
  return all_nodes(c, [](Concept x) { return x.kind() != Kind::Dia; });
}
bool is_diff_free(Concept c) {
  return all_nodes(c, [](Concept x) {
    return x.kind() != Kind::ExistsNeq && x.kind() != Kind::ExistsEq1;
  });
}
bool is_diff_free(const Ontology& o) {
  for (const CI& ci : o.cis)
    if (!is_diff_free(ci.lhs) || !is_diff_free(ci.rhs)) return false;
  return true;
}
bool is_mldiff(Concept c) {
  return all_nodes(c, [](Concept x) {
    switch (x.kind()) {
      case Kind::Name:
      case Kind::Not:
      case Kind::And:
      case Kind::ExistsU:
      case Kind::ExistsNeq:
      case Kind::ExistsEq1:
      case Kind::Dia:
        return true;
      default:
        return false;
    }
  });
}
bool is_mldiff(const Ontology& o) {
  for (const CI& ci : o.cis)
    if (!is_mldiff(ci.lhs) || !is_mldiff(ci.rhs)) return false;
  return true;
}
bool is_el_positive(Concept c) {
  if (is_top(c)) return true;
  switch (c.kind()) {
    case Kind::Name:
      return true;
    case Kind::NomInd:
      return true;
    case Kind::NomIota:
      return is_el_positive(c.child());
    case Kind::And:
      return is_el_positive(c.left()) && is_el_positive(c.right());
    case Kind::ExistsRole:
    case Kind::ExistsU:
    case Kind::Dia:
      return is_el_positive(c.child());
    default:
      return false;
  }
}

namespace {
void collect_signature(Concept c, Signature& sig) {
  switch (c.kind()) {
    case Kind::Name:
      if (c.symbol() != kReservedBotName) sig.concept_names.insert(c.symbol());
      return;
    case Kind::NomInd:
      sig.individual_names.insert(c.symbol());
      return;
    case Kind::ExistsRole:
      sig.role_names.insert(c.symbol());
      collect_signature(c.child(), sig);
      return;
    case Kind::And:
      collect_signature(c.left(), sig);
      collect_signature(c.right(), sig);
      return;
    case Kind::NomIota:
    case Kind::Not:
    case Kind::ExistsU:
    case Kind::ExistsNeq:
    case Kind::ExistsEq1:
    case Kind::Dia:
      collect_signature(c.child(), sig);
      return;
  }
}
}  // namespace

Signature signature_of(Concept c) {
  Signature sig;
  collect_signature(c, sig);
  return sig;
}
Signature signature_of(const Ontology& o) {
  Signature sig;
  for (const CI& ci : o.cis) {
    collect_signature(ci.lhs, sig);
    collect_signature(ci.rhs, sig);
  }
  return sig;
}

bool structural_less(Concept a, Concept b) {
  if (a == b) return false;
  const Node& na = a.node();
  const Node& nb = b.node();
  if (na.kind != nb.kind) return na.kind < nb.kind;
  if (na.mod != nb.mod) return na.mod < nb.mod;
  if (na.sym != nb.sym) {
    if (na.sym < 0 || nb.sym < 0) return na.sym < nb.sym;
    return ConceptStore::instance().string(na.sym) < ConceptStore::instance().string(nb.sym);
  }
  if (na.a != nb.a) {
    if (na.a < 0 || nb.a < 0) return na.a < nb.a;
    if (structural_less(Concept(na.a), Concept(nb.a))) return true;
    if (structural_less(Concept(nb.a), Concept(na.a))) return false;
  }
  if (na.b != nb.b) {
    if (na.b < 0 || nb.b < 0) return na.b < nb.b;
    return structural_less(Concept(na.b), Concept(nb.b));
  }
  return false;
}

}  // namespace freedl
