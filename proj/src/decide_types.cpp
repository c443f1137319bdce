#include <algorithm>
#include <functional>

#include "freedl/decide.hpp"
#include "freedl/errors.hpp"
#include "freedl/printer.hpp"

namespace freedl {

TypeUniverse TypeUniverse::build(const std::vector<Concept>& seeds, bool reflexive_dia,
                                 int member_cap, int type_cap) {
  TypeUniverse u;
  std::set<Concept> cl;
  for (Concept s : seeds) {
    std::set<Concept> c = closure(s);
    cl.insert(c.begin(), c.end());
  }
  u.members_ = sorted(cl);
  if (static_cast<int>(u.members_.size()) > member_cap)
    throw ResourceError("closure has " + std::to_string(u.members_.size()) +
                        " members, above the cap of " + std::to_string(member_cap));
  if (u.members_.size() > 63) throw ResourceError("closure too large for bitset types");
  for (std::size_t i = 0; i < u.members_.size(); ++i) u.index_[u.members_[i].id] = static_cast<int>(i);

  int k = static_cast<int>(u.members_.size());
  std::vector<int> positives;  // members that are not negations
  for (int i = 0; i < k; ++i)
    if (u.members_[static_cast<size_t>(i)].kind() != Kind::Not) positives.push_back(i);

  // Negations ordered innermost-first so C1 chains (not not A) resolve.
  std::function<int(Concept)> tree_size = [&](Concept c) -> int {
    switch (c.kind()) {
      case Kind::Name:
      case Kind::NomInd:
        return 1;
      case Kind::And:
        return 1 + tree_size(c.left()) + tree_size(c.right());
      default:
        return 1 + tree_size(c.child());
    }
  };
  std::vector<int> negs;
  for (int i = 0; i < k; ++i)
    if (u.members_[static_cast<size_t>(i)].kind() == Kind::Not) negs.push_back(i);
  std::stable_sort(negs.begin(), negs.end(), [&](int a, int b) {
    return tree_size(u.members_[static_cast<size_t>(a)]) < tree_size(u.members_[static_cast<size_t>(b)]);
  });

  for (std::uint64_t code = 0; code < (1ull << positives.size()); ++code) {
    std::uint64_t t = 0;
    for (std::size_t p = 0; p < positives.size(); ++p)
      if ((code >> p) & 1ull) t |= (1ull << positives[p]);
    // Negated members by C1, innermost first.
    bool ok = true;
    for (int i : negs) {
      Concept m = u.members_[static_cast<size_t>(i)];
      auto it = u.index_.find(m.child().id);
      if (it == u.index_.end()) { ok = false; break; }
      bool body = (t >> it->second) & 1ull;
      if (!body) t |= (1ull << i);
    }
    // C2, universal-role closure and (for S5) reflexive-diamond closure.
    for (int i = 0; i < k && ok; ++i) {
      Concept m = u.members_[static_cast<size_t>(i)];
      bool in = (t >> i) & 1ull;
      if (m.kind() == Kind::And) {
        auto l = u.index_.find(m.left().id);
        auto r = u.index_.find(m.right().id);
        if (l == u.index_.end() || r == u.index_.end()) { ok = false; break; }
        bool both = ((t >> l->second) & 1ull) && ((t >> r->second) & 1ull);
        if (in != both) ok = false;
      } else if (m.kind() == Kind::ExistsU) {
        auto b = u.index_.find(m.child().id);
        if (b != u.index_.end() && ((t >> b->second) & 1ull) && !in) ok = false;
      } else if (reflexive_dia && m.kind() == Kind::Dia) {
        auto b = u.index_.find(m.child().id);
        if (b != u.index_.end() && ((t >> b->second) & 1ull) && !in) ok = false;
      }
    }
    if (ok) u.types_.push_back(t);
  }
  std::sort(u.types_.begin(), u.types_.end());
  if (static_cast<int>(u.types_.size()) > type_cap)
    throw ResourceError("type universe has " + std::to_string(u.types_.size()) +
                        " types, above the cap of " + std::to_string(type_cap));

  for (int i = 0; i < k; ++i) {
    Concept m = u.members_[static_cast<size_t>(i)];
    switch (m.kind()) {
      case Kind::Dia:
        u.dias_.push_back({m.modality(), i, u.index_.at(m.child().id)});
        break;
      case Kind::ExistsRole:
        u.roles_.push_back({m.symbol(), i, u.index_.at(m.child().id)});
        break;
      case Kind::ExistsU:
        u.us_.push_back({i, u.index_.at(m.child().id)});
        break;
      case Kind::NomInd:
        u.noms_.push_back({m.symbol(), i});
        break;
      default:
        break;
    }
  }
  return u;
}

int TypeUniverse::index_of(Concept c) const {
  auto it = index_.find(c.id);
  return it == index_.end() ? -1 : it->second;
}

bool TypeUniverse::type_has_nominal(int type) const {
  for (const NomMember& nm : noms_)
    if (has(type, nm.self)) return true;
  return false;
}

std::string TypeUniverse::type_description(int type) const {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < member_count(); ++i)
    if (has(type, i)) {
      if (!first) s += ", ";
      s += print_concept(members_[static_cast<size_t>(i)]);
      first = false;
    }
  return s + "}";
}

Concept TypeUniverse::type_concept(int type) const {
  std::vector<Concept> parts;
  for (int i = 0; i < member_count(); ++i)
    if (has(type, i)) parts.push_back(members_[static_cast<size_t>(i)]);
  return make_and_all(parts);
}

bool TypeUniverse::role_witness_ok(const RoleMember& rm, int t, int t2) const {
  if (!has(t2, rm.body)) return false;
  for (const RoleMember& other : roles_) {
    if (other.role != rm.role) continue;
    // not some r. D in t forces not D in t2.
    if (!has(t, other.self) && has(t2, other.body)) return false;
  }
  return true;
}

bool TypeUniverse::role_edge_compatible(const std::string& role, int t, int t2) const {
  for (const RoleMember& rm : roles_) {
    if (rm.role != role) continue;
    if (has(t2, rm.body) && !has(t, rm.self)) return false;
  }
  return true;
}

std::vector<std::uint64_t> enumerate_types(Concept c0, int member_cap, int type_cap) {
  return TypeUniverse::build({c0}, false, member_cap, type_cap).types();
}

}  // namespace freedl
