#include "freedl/syntax.hpp"

#include <algorithm>
#include <unordered_map>

namespace freedl {

namespace {
void collect_sub(Concept c, std::set<Concept>& out) {
  if (!out.insert(c).second) return;
  switch (c.kind()) {
    case Kind::Name:
    case Kind::NomInd:
      return;
    case Kind::And:
      collect_sub(c.left(), out);
      collect_sub(c.right(), out);
      return;
    default:
      collect_sub(c.child(), out);
      return;
  }
}
}  // namespace

std::set<Concept> subconcepts(Concept c) {
  std::set<Concept> out;
  collect_sub(c, out);
  return out;
}

std::set<Concept> subconcepts(const Ontology& o) {
  std::set<Concept> out;
  for (const CI& ci : o.cis) {
    collect_sub(ci.lhs, out);
    collect_sub(ci.rhs, out);
  }
  return out;
}

int modal_depth(Concept c) {
  switch (c.kind()) {
    case Kind::Name:
    case Kind::NomInd:
      return 0;
    case Kind::And:
      return std::max(modal_depth(c.left()), modal_depth(c.right()));
    case Kind::Dia:
      return modal_depth(c.child()) + 1;
    default:
      return modal_depth(c.child());
  }
}
int modal_depth(const CI& ci) { return std::max(modal_depth(ci.lhs), modal_depth(ci.rhs)); }
int modal_depth(const Ontology& o) {
  int d = 0;
  for (const CI& ci : o.cis) d = std::max(d, modal_depth(ci));
  return d;
}

namespace {
std::set<Concept> close_under_single_negation(const std::set<Concept>& subs) {
  std::set<Concept> out = subs;
  for (Concept c : subs) {
    if (c.kind() != Kind::Not) out.insert(make_not(c));
  }
  return out;
}
}  // namespace

std::set<Concept> closure(Concept c) { return close_under_single_negation(subconcepts(c)); }
std::set<Concept> closure(const Ontology& o) { return close_under_single_negation(subconcepts(o)); }

namespace {
void collect_rp(Concept d, Concept b, ModalPath& prefix, std::set<ModalPath>& out) {
  if (d == b) {
    out.insert(prefix);
    return;
  }
  switch (d.kind()) {
    case Kind::Name:
    case Kind::NomInd:
      return;
    case Kind::And:
      collect_rp(d.left(), b, prefix, out);
      collect_rp(d.right(), b, prefix, out);
      return;
    case Kind::Dia:
      prefix.push_back(d.modality());
      collect_rp(d.child(), b, prefix, out);
      prefix.pop_back();
      return;
    default:
      collect_rp(d.child(), b, prefix, out);
      return;
  }
}

void collect_all_paths(Concept d, ModalPath& prefix, std::set<ModalPath>& out) {
  out.insert(prefix);
  switch (d.kind()) {
    case Kind::Name:
    case Kind::NomInd:
      return;
    case Kind::And:
      collect_all_paths(d.left(), prefix, out);
      collect_all_paths(d.right(), prefix, out);
      return;
    case Kind::Dia:
      prefix.push_back(d.modality());
      collect_all_paths(d.child(), prefix, out);
      prefix.pop_back();
      return;
    default:
      collect_all_paths(d.child(), prefix, out);
      return;
  }
}
}  // namespace

std::set<ModalPath> relevant_paths(Concept d, Concept b) {
  std::set<ModalPath> out;
  ModalPath prefix;
  collect_rp(d, b, prefix, out);
  return out;
}

std::set<ModalPath> all_dia_paths(Concept d) {
  std::set<ModalPath> out;
  ModalPath prefix;
  collect_all_paths(d, prefix, out);
  return out;
}

std::set<ModalPath> prefix_closure(const std::set<ModalPath>& paths) {
  std::set<ModalPath> out;
  for (const ModalPath& p : paths) {
    for (std::size_t len = 0; len <= p.size(); ++len)
      out.insert(ModalPath(p.begin(), p.begin() + static_cast<long>(len)));
  }
  return out;
}

Concept box_path(const ModalPath& pi, Concept e) {
  Concept acc = e;
  for (std::size_t i = pi.size(); i-- > 0;) acc = make_box(pi[i], acc);
  return acc;
}

namespace {
Concept substitute_memo(Concept d, Concept c, Concept a,
                        std::unordered_map<ConceptId, ConceptId>& memo) {
  if (d == c) return a;
  auto it = memo.find(d.id);
  if (it != memo.end()) return Concept(it->second);
  Concept out = d;
  switch (d.kind()) {
    case Kind::Name:
    case Kind::NomInd:
      break;
    case Kind::NomIota:
      out = make_iota(substitute_memo(d.child(), c, a, memo));
      break;
    case Kind::Not:
      out = make_not(substitute_memo(d.child(), c, a, memo));
      break;
    case Kind::And:
      out = make_and(substitute_memo(d.left(), c, a, memo),
                     substitute_memo(d.right(), c, a, memo));
      break;
    case Kind::ExistsRole:
      out = make_exists(d.symbol(), substitute_memo(d.child(), c, a, memo));
      break;
    case Kind::ExistsU:
      out = make_exists_u(substitute_memo(d.child(), c, a, memo));
      break;
    case Kind::ExistsNeq:
      out = make_exists_neq_u(substitute_memo(d.child(), c, a, memo));
      break;
    case Kind::ExistsEq1:
      out = make_exists_eq1_u(substitute_memo(d.child(), c, a, memo));
      break;
    case Kind::Dia:
      out = make_dia(d.modality(), substitute_memo(d.child(), c, a, memo));
      break;
  }
  memo.emplace(d.id, out.id);
  return out;
}
}  // namespace

Concept substitute(Concept d, Concept c, Concept a) {
  std::unordered_map<ConceptId, ConceptId> memo;
  return substitute_memo(d, c, a, memo);
}

Concept desugar_concept_assertion(const Term& tau, Concept c) {
  return make_exists_u(make_and(make_nominal(tau), c));
}
Concept desugar_role_assertion(const std::string& role, const Term& tau1, const Term& tau2) {
  return make_exists_u(make_and(make_nominal(tau1), make_exists(role, make_nominal(tau2))));
}

std::string fresh_name(const std::string& base, const Signature& sig) {
  if (!sig.contains(base) && base != kReservedBotName) return base;
  for (int k = 1;; ++k) {
    std::string cand = base + "_" + std::to_string(k);
    if (!sig.contains(cand)) return cand;
  }
}

std::vector<Concept> sorted(const std::set<Concept>& s) {
  std::vector<Concept> out(s.begin(), s.end());
  std::sort(out.begin(), out.end(), structural_less);
  return out;
}

}  // namespace freedl
