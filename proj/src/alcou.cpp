#include <functional>

#include "freedl/decide.hpp"
#include "freedl/errors.hpp"

namespace freedl {

namespace {

// Greatest-fixpoint elimination over a candidate type set (bitset over type
// indices): drop types whose role or universal-role witnesses are gone.
std::uint64_t eliminate(const TypeUniverse& u, std::uint64_t live) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t < u.type_count(); ++t) {
      if (!((live >> t) & 1ull)) continue;
      bool ok = true;
      for (const TypeUniverse::RoleMember& rm : u.role_members()) {
        if (!u.has(t, rm.self)) continue;
        bool found = false;
        for (int t2 = 0; t2 < u.type_count() && !found; ++t2)
          if (((live >> t2) & 1ull) && u.role_witness_ok(rm, t, t2)) found = true;
        if (!found) { ok = false; break; }
      }
      if (ok) {
        for (const TypeUniverse::UMember& um : u.u_members()) {
          if (!u.has(t, um.self)) continue;
          bool found = false;
          for (int t2 = 0; t2 < u.type_count() && !found; ++t2)
            if (((live >> t2) & 1ull) && u.has(t2, um.body)) found = true;
          if (!found) { ok = false; break; }
        }
      }
      if (!ok) {
        live &= ~(1ull << t);
        changed = true;
      }
    }
  }
  return live;
}

}  // namespace

bool alcou_sat(Concept c, const Ontology& o, const DecideLimits& limits) {
  std::vector<Concept> seeds{c};
  for (const CI& ci : o.cis) {
    seeds.push_back(ci.lhs);
    seeds.push_back(ci.rhs);
  }
  for (Concept s : seeds) {
    if (!is_modality_free(s)) throw FragmentError("alcou_sat expects modality-free input");
    if (!is_iota_free(s)) throw FragmentError("alcou_sat expects iota-free input");
    if (!is_diff_free(s)) throw FragmentError("alcou_sat expects counting-free input");
  }
  TypeUniverse u = TypeUniverse::build(seeds, false, limits.closure_cap, limits.type_cap);

  int goal = u.index_of(c);
  std::vector<std::pair<int, int>> ci_pairs;  // (lhs idx, rhs idx)
  for (const CI& ci : o.cis) ci_pairs.emplace_back(u.index_of(ci.lhs), u.index_of(ci.rhs));

  // Types violating a CI can never be realized.
  std::uint64_t base = 0;
  for (int t = 0; t < u.type_count(); ++t) {
    bool ok = true;
    for (auto [l, r] : ci_pairs)
      if (u.has(t, l) && !u.has(t, r)) { ok = false; break; }
    if (ok) base |= (1ull << t);
  }

  const auto& ums = u.u_members();
  const auto& noms = u.nominal_members();
  std::int64_t work = 0;

  for (std::uint64_t umask = 0; umask < (1ull << ums.size()); ++umask) {
    // Keep types that agree with the guessed global u-type.
    std::uint64_t cand = 0;
    for (int t = 0; t < u.type_count(); ++t) {
      if (!((base >> t) & 1ull)) continue;
      bool agree = true;
      for (std::size_t j = 0; j < ums.size(); ++j)
        if (u.has(t, ums[j].self) != (((umask >> j) & 1ull) != 0)) { agree = false; break; }
      if (agree) cand |= (1ull << t);
    }
    if (!cand) continue;

    // Nominal selections: for each nominal, keep no type containing it
    // (undesignating) or exactly one.
    std::function<bool(std::size_t, std::uint64_t)> select = [&](std::size_t ni,
                                                                 std::uint64_t live) -> bool {
      if (++work > limits.work_cap) throw ResourceError("alcou_sat work cap exceeded");
      if (ni == noms.size()) {
        std::uint64_t fixed = eliminate(u, live);
        if (!fixed) return false;
        if (goal >= 0) {
          bool realized = false;
          for (int t = 0; t < u.type_count(); ++t)
            if (((fixed >> t) & 1ull) && u.has(t, goal)) { realized = true; break; }
          if (!realized) return false;
        }
        // The elimination may have dropped a chosen nominal type; then this
        // selection fails (the pattern is no longer exact).
        for (const TypeUniverse::NomMember& nm : noms) {
          int cnt = 0;
          for (int t = 0; t < u.type_count(); ++t)
            if (((fixed >> t) & 1ull) && u.has(t, nm.self)) ++cnt;
          if (cnt > 1) return false;
          bool chosen = false;
          for (int t = 0; t < u.type_count(); ++t)
            if (((live >> t) & 1ull) && u.has(t, nm.self)) chosen = true;
          if (chosen && cnt == 0) return false;
        }
        return true;
      }
      const TypeUniverse::NomMember& nm = noms[ni];
      std::uint64_t with_nom = 0;
      for (int t = 0; t < u.type_count(); ++t)
        if (((live >> t) & 1ull) && u.has(t, nm.self)) with_nom |= (1ull << t);
      // Option: a does not designate here.
      if (select(ni + 1, live & ~with_nom)) return true;
      // Or exactly one chosen type carries it.
      for (int t = 0; t < u.type_count(); ++t)
        if ((with_nom >> t) & 1ull) {
          std::uint64_t keep = (live & ~with_nom) | (1ull << t);
          if (select(ni + 1, keep)) return true;
        }
      return false;
    };
    if (select(0, cand)) return true;
  }
  return false;
}

}  // namespace freedl
