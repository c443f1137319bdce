#include <algorithm>
#include <functional>

#include "freedl/decide.hpp"
#include "freedl/errors.hpp"

namespace freedl {

namespace {

struct LtlContext {
  const TypeUniverse* u = nullptr;
  int m0 = 0;
  std::vector<std::vector<int>> runs;         // candidate runs (type tuples)
  std::vector<bool> has_nominal_somewhere;    // per run
  std::int64_t* work = nullptr;
  std::int64_t work_cap = 0;
};

void tick(LtlContext& ctx) {
  if (++*ctx.work > ctx.work_cap) throw ResourceError("ltl_next_sat work cap exceeded");
}

// All next-coherent runs: next-members chain forward/backward, and nothing
// asserts a next at the last instant.
void build_coherent_runs(LtlContext& ctx) {
  const TypeUniverse& u = *ctx.u;
  std::vector<const TypeUniverse::DiaMember*> nexts;
  for (const auto& dm : u.dia_members())
    if (dm.modality == 1) nexts.push_back(&dm);

  // succ[t] = types t2 with: next C in t iff C in t2, for all next-members.
  std::vector<std::vector<int>> succ(static_cast<size_t>(u.type_count()));
  for (int t = 0; t < u.type_count(); ++t)
    for (int t2 = 0; t2 < u.type_count(); ++t2) {
      bool ok = true;
      for (const auto* dm : nexts)
        if (u.has(t, dm->self) != u.has(t2, dm->body)) { ok = false; break; }
      if (ok) succ[static_cast<size_t>(t)].push_back(t2);
    }

  std::vector<int> tuple;
  std::function<void(int)> extend = [&](int i) {
    tick(ctx);
    if (i > ctx.m0) {
      // No next-assertions at the horizon.
      for (const auto* dm : nexts)
        if (u.has(tuple.back(), dm->self)) return;
      ctx.runs.push_back(tuple);
      bool nom = false;
      for (int idx : tuple)
        if (u.type_has_nominal(idx)) nom = true;
      ctx.has_nominal_somewhere.push_back(nom);
      return;
    }
    if (i == 0) {
      for (int t = 0; t < u.type_count(); ++t) {
        tuple.push_back(t);
        extend(1);
        tuple.pop_back();
      }
    } else {
      for (int t2 : succ[static_cast<size_t>(tuple.back())]) {
        tuple.push_back(t2);
        extend(i + 1);
        tuple.pop_back();
      }
    }
  };
  extend(0);
}

// Exhaustive application of the universal-role and role witness elimination
// rules over a run subset (given by indices into ctx.runs).
std::vector<int> eliminate_runs(const LtlContext& ctx, std::vector<int> live) {
  const TypeUniverse& u = *ctx.u;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t li = 0; li < live.size();) {
      const std::vector<int>& rho = ctx.runs[static_cast<size_t>(live[li])];
      bool ok = true;
      for (int i = 0; i <= ctx.m0 && ok; ++i) {
        int t = rho[static_cast<size_t>(i)];
        for (const TypeUniverse::UMember& um : u.u_members()) {
          if (!u.has(t, um.self)) continue;
          bool found = false;
          for (int other : live)
            if (u.has(ctx.runs[static_cast<size_t>(other)][static_cast<size_t>(i)], um.body)) {
              found = true;
              break;
            }
          if (!found) { ok = false; break; }
        }
        if (!ok) break;
        for (const TypeUniverse::RoleMember& rm : u.role_members()) {
          if (!u.has(t, rm.self)) continue;
          bool found = false;
          for (int other : live) {
            int t2 = ctx.runs[static_cast<size_t>(other)][static_cast<size_t>(i)];
            bool compat = u.has(t2, rm.body);
            if (compat) {
              // rho ->_{r,i} other: C in other(i) implies some r. C in rho(i).
              for (const TypeUniverse::RoleMember& any : u.role_members()) {
                if (any.role != rm.role) continue;
                if (u.has(t2, any.body) && !u.has(t, any.self)) { compat = false; break; }
              }
            }
            if (compat) { found = true; break; }
          }
          if (!found) { ok = false; break; }
        }
      }
      if (!ok) {
        live.erase(live.begin() + static_cast<long>(li));
        changed = true;
      } else {
        ++li;
      }
    }
  }
  return live;
}

}  // namespace

LtlSatResult ltl_next_sat(Concept c0, FlowKind flow, const DecideLimits& limits) {
  if (!is_iota_free(c0))
    throw FragmentError("ltl_next_sat expects iota-free input (eliminate first)");
  if (!is_diff_free(c0)) throw FragmentError("ltl_next_sat expects counting-free input");
  for (Concept s : subconcepts(c0))
    if (s.kind() == Kind::Dia && s.modality() != 1)
      throw FragmentError("ltl_next_sat covers the next-only fragment; 'dia2'/'F' found");

  TypeUniverse u = TypeUniverse::build({c0}, false, limits.closure_cap, limits.type_cap);
  int goal = u.index_of(c0);
  int d = modal_depth(c0);
  std::int64_t work = 0;
  std::optional<LtlRunSystem> found;

  std::vector<int> depths;
  if (flow == FlowKind::Finite) {
    for (int m = 0; m <= d; ++m) depths.push_back(m);
  } else {
    depths.push_back(d);
  }

  for (int m0 : depths) {
    LtlContext ctx;
    ctx.u = &u;
    ctx.m0 = m0;
    ctx.work = &work;
    ctx.work_cap = limits.work_cap;
    build_coherent_runs(ctx);
    if (ctx.runs.empty()) continue;

    const auto& ums = u.u_members();
    const auto& noms = u.nominal_members();
    int instants = m0 + 1;

    // u-type tuple: per instant, a subset of the some-u members.
    std::vector<std::uint64_t> utuple(static_cast<size_t>(instants), 0);
    std::uint64_t ucard = 1ull << ums.size();
    std::vector<std::uint64_t> ucode(static_cast<size_t>(instants), 0);
    for (;;) {
      for (int i = 0; i < instants; ++i) utuple[static_cast<size_t>(i)] = ucode[static_cast<size_t>(i)];
      // Runs consistent with the u-tuple at every instant.
      std::vector<int> consistent;
      for (std::size_t r = 0; r < ctx.runs.size(); ++r) {
        bool ok = true;
        for (int i = 0; i <= m0 && ok; ++i) {
          int t = ctx.runs[r][static_cast<size_t>(i)];
          for (std::size_t j = 0; j < ums.size(); ++j)
            if (u.has(t, ums[j].self) != (((utuple[static_cast<size_t>(i)] >> j) & 1ull) != 0)) {
              ok = false;
              break;
            }
        }
        if (ok) consistent.push_back(static_cast<int>(r));
      }

      std::vector<int> plain, nomruns;
      for (int r : consistent)
        (ctx.has_nominal_somewhere[static_cast<size_t>(r)] ? nomruns : plain).push_back(r);

      // Enumerate nominal systems: per (instant, nominal) exactly one run.
      int slot_count = instants * static_cast<int>(noms.size());
      std::vector<int> slot_run(static_cast<size_t>(slot_count), -1);
      std::vector<int> chosen;

      std::function<bool(int)> assign = [&](int slot) -> bool {
        tick(ctx);
        if (slot == slot_count) {
          std::vector<int> live = plain;
          live.insert(live.end(), chosen.begin(), chosen.end());
          std::sort(live.begin(), live.end());
          std::vector<int> fixed = eliminate_runs(ctx, live);
          // The nominal system must survive and the goal must start a run.
          for (int c : chosen)
            if (!std::binary_search(fixed.begin(), fixed.end(), c)) return false;
          int goal_run = -1;
          for (int r : fixed)
            if (u.has(ctx.runs[static_cast<size_t>(r)][0], goal)) { goal_run = r; break; }
          if (goal_run < 0) return false;
          // Trim to the witness closure: the nominal system, a goal run, and
          // enough witnesses to keep every run's demands satisfied inside.
          std::vector<int> keep = chosen;
          if (std::find(keep.begin(), keep.end(), goal_run) == keep.end())
            keep.push_back(goal_run);
          for (std::size_t qi = 0; qi < keep.size(); ++qi) {
            const std::vector<int>& rho = ctx.runs[static_cast<size_t>(keep[qi])];
            for (int i = 0; i <= m0; ++i) {
              int t = rho[static_cast<size_t>(i)];
              auto ensure = [&](const std::function<bool(int)>& pred) {
                for (int r2 : keep)
                  if (pred(ctx.runs[static_cast<size_t>(r2)][static_cast<size_t>(i)])) return;
                for (int r2 : fixed)
                  if (pred(ctx.runs[static_cast<size_t>(r2)][static_cast<size_t>(i)])) {
                    if (std::find(keep.begin(), keep.end(), r2) == keep.end()) keep.push_back(r2);
                    return;
                  }
              };
              for (const TypeUniverse::UMember& um : u.u_members())
                if (u.has(t, um.self))
                  ensure([&](int t2) { return u.has(t2, um.body); });
              for (const TypeUniverse::RoleMember& rm : u.role_members())
                if (u.has(t, rm.self))
                  ensure([&](int t2) { return u.role_witness_ok(rm, t, t2); });
            }
          }
          std::sort(keep.begin(), keep.end());
          LtlRunSystem rs;
          rs.m0 = m0;
          for (int r : keep) rs.runs.push_back(ctx.runs[static_cast<size_t>(r)]);
          for (int c : chosen) rs.nominal_runs.push_back(ctx.runs[static_cast<size_t>(c)]);
          found = rs;
          return true;
        }
        if (slot_run[static_cast<size_t>(slot)] >= 0) return assign(slot + 1);
        int i = slot / static_cast<int>(noms.size());
        int j = slot % static_cast<int>(noms.size());
        for (int r : nomruns) {
          const std::vector<int>& rho = ctx.runs[static_cast<size_t>(r)];
          if (!u.has(rho[static_cast<size_t>(i)], noms[static_cast<size_t>(j)].self)) continue;
          // Adding r claims every slot its trace covers; reject on conflicts.
          bool conflict = false;
          std::vector<int> claimed;
          for (int i2 = 0; i2 <= m0 && !conflict; ++i2)
            for (std::size_t j2 = 0; j2 < noms.size(); ++j2) {
              if (!u.has(rho[static_cast<size_t>(i2)], noms[j2].self)) continue;
              int s2 = i2 * static_cast<int>(noms.size()) + static_cast<int>(j2);
              if (slot_run[static_cast<size_t>(s2)] >= 0) { conflict = true; break; }
              claimed.push_back(s2);
            }
          if (conflict) continue;
          for (int s2 : claimed) slot_run[static_cast<size_t>(s2)] = r;
          chosen.push_back(r);
          if (assign(slot + 1)) return true;
          chosen.pop_back();
          for (int s2 : claimed) slot_run[static_cast<size_t>(s2)] = -1;
        }
        return false;
      };

      if (assign(0)) {
        LtlSatResult out;
        out.verdict = DecideVerdict::Sat;
        out.witness = found;
        return out;
      }

      int i = 0;
      while (i < instants) {
        if (++ucode[static_cast<size_t>(i)] < ucard) break;
        ucode[static_cast<size_t>(i)] = 0;
        ++i;
      }
      if (i == instants) break;
    }
  }
  return LtlSatResult{};
}

Interpretation ltl_runs_to_model(Concept c0, const LtlRunSystem& rs) {
  TypeUniverse u = TypeUniverse::build({c0}, false, 64, 4096);
  int W = rs.m0 + 1;
  int N = static_cast<int>(rs.runs.size());
  if (N > 31) throw ResourceError("run system too large to extract a bitmask model");
  Interpretation m;
  m.frame = Frame(W, 2);
  for (int t = 0; t + 1 < W; ++t) m.frame.add_edge(1, t, t + 1);
  for (int t = 0; t < W; ++t)
    for (int t2 = t + 1; t2 < W; ++t2) m.frame.add_edge(2, t, t2);
  m.pool_size = N;
  m.domain.assign(static_cast<size_t>(W), (1u << N) - 1);

  Signature sig;
  for (Concept c : subconcepts(c0)) sig.merge(signature_of(c));
  for (const std::string& a : sig.concept_names) m.concept_ext[a].assign(static_cast<size_t>(W), 0);
  for (const std::string& r : sig.role_names) {
    m.role_ext[r].assign(static_cast<size_t>(W), {});
    for (int w = 0; w < W; ++w)
      m.role_ext[r][static_cast<size_t>(w)].assign(static_cast<size_t>(N), 0);
  }
  for (const std::string& a : sig.individual_names) m.individuals[a].assign(static_cast<size_t>(W), -1);

  for (int r = 0; r < N; ++r)
    for (int w = 0; w < W; ++w) {
      int t = rs.runs[static_cast<size_t>(r)][static_cast<size_t>(w)];
      for (const std::string& a : sig.concept_names) {
        int idx = u.index_of(make_name(a));
        if (idx >= 0 && u.has(t, idx)) m.concept_ext[a][static_cast<size_t>(w)] |= (1u << r);
      }
      for (const TypeUniverse::NomMember& nm : u.nominal_members())
        if (u.has(t, nm.self)) m.individuals[nm.name][static_cast<size_t>(w)] = r;
    }
  for (const std::string& role : sig.role_names)
    for (int w = 0; w < W; ++w)
      for (int r = 0; r < N; ++r)
        for (int r2 = 0; r2 < N; ++r2) {
          int t = rs.runs[static_cast<size_t>(r)][static_cast<size_t>(w)];
          int t2 = rs.runs[static_cast<size_t>(r2)][static_cast<size_t>(w)];
          if (u.role_edge_compatible(role, t, t2))
            m.role_ext[role][static_cast<size_t>(w)][static_cast<size_t>(r)] |= (1u << r2);
        }
  return m;
}

}  // namespace freedl
