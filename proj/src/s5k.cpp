// S5^n / K^n concept satisfiability via tree-shaped quasimodel search.
//
// The search space follows the exponential-quasimodel normalization: trees of
// depth <= md(C0) where every node spawns exactly one designated witness
// child per (type, dia_i C) demand, and every run through the demanding type
// finds its witness at that child.  Runs only interact through the nominal
// counting condition M2, so the search splits into
//   (1) a DFS over trees and quasistates with per-edge continuation and
//       coverage conditions (sufficient for M1), and
//   (2) a slot-claiming system assigning one run to each (node, nominal
//       type) slot, with nominal-free runs covering the remaining slots.

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "freedl/decide.hpp"
#include "freedl/errors.hpp"

namespace freedl {

namespace {

struct Demand {
  int type;      // demanding type index
  int modality;  // i of dia_i C
  int body;      // member index of C
  int self;      // member index of dia_i C
  bool operator<(const Demand& o) const {
    return std::tie(type, modality, body) < std::tie(o.type, o.modality, o.body);
  }
};

struct SearchNode {
  int parent = -1;
  int incoming = 0;
  int state = -1;             // index into the quasistate list
  std::vector<Demand> demands;
  std::vector<int> children;  // node indices, aligned with demands
};

class S5KSearch {
 public:
  S5KSearch(Concept c0, int n, bool s5, const DecideLimits& limits)
      : u_(TypeUniverse::build({c0}, s5, limits.closure_cap, limits.type_cap)),
        c0_(c0),
        n_(n),
        s5_(s5),
        limits_(limits) {
    if (u_.type_count() > 22)
      throw ResourceError("too many types for quasistate enumeration");
    depth_ = modal_depth(c0);
    build_relations();
    build_quasistates();
  }

  ModalSatResult run() {
    ModalSatResult res;
    int goal = u_.index_of(c0_);
    for (std::size_t qs = 0; qs < states_.size(); ++qs) {
      bool b1 = false;
      for (int t = 0; t < u_.type_count(); ++t)
        if (((states_[qs] >> t) & 1ull) && u_.has(t, goal)) { b1 = true; break; }
      if (!b1) continue;
      if (!locally_good(static_cast<int>(qs), 0, depth_)) continue;
      nodes_.clear();
      nodes_.push_back(SearchNode{-1, 0, static_cast<int>(qs), demands_of(states_[qs], 0), {}});
      if (expand_all(0, depth_)) {
        res.verdict = DecideVerdict::Sat;
        res.witness = witness_;
        return res;
      }
    }
    return res;
  }

 private:
  void tick() {
    if (++work_ > limits_.work_cap) throw ResourceError("quasimodel search work cap exceeded");
  }

  void build_relations() {
    int k = u_.type_count();
    rel_.assign(static_cast<size_t>(n_) + 1, {});
    for (int i = 1; i <= n_; ++i) {
      auto& r = rel_[static_cast<size_t>(i)];
      r.assign(static_cast<size_t>(k), std::vector<char>(static_cast<size_t>(k), 1));
      for (int t = 0; t < k; ++t)
        for (int t2 = 0; t2 < k; ++t2) {
          bool ok = true;
          for (const auto& dm : u_.dia_members()) {
            if (dm.modality != i) continue;
            if (s5_) {
              if (u_.has(t, dm.self) != u_.has(t2, dm.self)) { ok = false; break; }
            } else {
              if (u_.has(t2, dm.body) && !u_.has(t, dm.self)) { ok = false; break; }
            }
          }
          r[static_cast<size_t>(t)][static_cast<size_t>(t2)] = ok ? 1 : 0;
        }
    }
  }

  void build_quasistates() {
    int k = u_.type_count();
    for (std::uint64_t s = 1; s < (1ull << k); ++s) {
      bool ok = true;
      for (const auto& nm : u_.nominal_members()) {
        int cnt = 0;
        for (int t = 0; t < k && cnt <= 1; ++t)
          if (((s >> t) & 1ull) && u_.has(t, nm.self)) ++cnt;
        if (cnt != 1) { ok = false; break; }
      }
      for (int t = 0; t < k && ok; ++t) {
        if (!((s >> t) & 1ull)) continue;
        for (const auto& rm : u_.role_members()) {
          if (!u_.has(t, rm.self)) continue;
          bool found = false;
          for (int t2 = 0; t2 < k && !found; ++t2)
            if (((s >> t2) & 1ull) && u_.role_witness_ok(rm, t, t2)) found = true;
          if (!found) { ok = false; break; }
        }
        if (!ok) break;
        for (const auto& um : u_.u_members()) {
          bool some = false;
          for (int t2 = 0; t2 < k && !some; ++t2)
            if (((s >> t2) & 1ull) && u_.has(t2, um.body)) some = true;
          if (u_.has(t, um.self) != some) { ok = false; break; }
        }
        if (!ok) break;
      }
      if (ok) states_.push_back(s);
    }
    if (states_.empty()) return;
  }

  std::vector<Demand> demands_of(std::uint64_t state, int incoming) const {
    std::vector<Demand> out;
    for (int t = 0; t < u_.type_count(); ++t) {
      if (!((state >> t) & 1ull)) continue;
      for (const auto& dm : u_.dia_members()) {
        if (!u_.has(t, dm.self)) continue;
        if (s5_) {
          if (dm.modality == incoming) continue;   // served inside the parent clique
          if (u_.has(t, dm.body)) continue;        // reflexive self-witness
        }
        out.push_back(Demand{t, dm.modality, dm.body, dm.self});
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Demand& a, const Demand& b) {
                            return a.type == b.type && a.modality == b.modality && a.body == b.body;
                          }),
              out.end());
    return out;
  }

  bool edge_allowed(const Demand& d, int t, int s) const {
    if (!rel_[static_cast<size_t>(d.modality)][static_cast<size_t>(t)][static_cast<size_t>(s)])
      return false;
    return t != d.type || u_.has(s, d.body);
  }

  // (a') every parent type continues; (b) every child type is reachable.
  bool edge_ok(std::uint64_t parent, const Demand& d, std::uint64_t child) const {
    int k = u_.type_count();
    for (int t = 0; t < k; ++t) {
      if (!((parent >> t) & 1ull)) continue;
      bool some = false;
      for (int s = 0; s < k && !some; ++s)
        if (((child >> s) & 1ull) && edge_allowed(d, t, s)) some = true;
      if (!some) return false;
    }
    for (int s = 0; s < k; ++s) {
      if (!((child >> s) & 1ull)) continue;
      bool some = false;
      for (int t = 0; t < k && !some; ++t)
        if (((parent >> t) & 1ull) && edge_allowed(d, t, s)) some = true;
      if (!some) return false;
    }
    return true;
  }

  // Subtree plausibility, ignoring the global nominal conditions.
  bool locally_good(int state_idx, int incoming, int depth) {
    auto key = std::make_tuple(state_idx, incoming, depth);
    auto it = good_memo_.find(key);
    if (it != good_memo_.end()) return it->second;
    tick();
    std::vector<Demand> ds = demands_of(states_[static_cast<size_t>(state_idx)], incoming);
    bool ok;
    if (depth == 0) {
      ok = ds.empty();
    } else {
      ok = true;
      for (const Demand& d : ds) {
        bool some = false;
        for (std::size_t c = 0; c < states_.size() && !some; ++c)
          if (edge_ok(states_[static_cast<size_t>(state_idx)], d, states_[c]) &&
              locally_good(static_cast<int>(c), d.modality, depth - 1))
            some = true;
        if (!some) { ok = false; break; }
      }
    }
    good_memo_[key] = ok;
    return ok;
  }

  // DFS over the full tree; `frontier` holds nodes awaiting expansion.
  bool expand_all(int node_idx, int depth) {
    tick();
    SearchNode& node = nodes_[static_cast<size_t>(node_idx)];
    if (depth == 0 || node.demands.empty()) {
      // Nothing to spawn here; move to the next unexpanded node or finish.
      int next = node_idx + 1;
      if (next == static_cast<int>(nodes_.size())) return global_check();
      return expand_all(next, depth_for(next));
    }
    return expand_demand(node_idx, 0, depth);
  }

  int depth_for(int node_idx) const {
    int d = 0;
    for (int x = node_idx; nodes_[static_cast<size_t>(x)].parent >= 0;
         x = nodes_[static_cast<size_t>(x)].parent)
      ++d;
    return depth_ - d;
  }

  bool expand_demand(int node_idx, std::size_t di, int depth) {
    if (di == nodes_[static_cast<size_t>(node_idx)].demands.size()) {
      int next = node_idx + 1;
      if (next == static_cast<int>(nodes_.size())) return global_check();
      return expand_all(next, depth_for(next));
    }
    Demand d = nodes_[static_cast<size_t>(node_idx)].demands[di];
    std::uint64_t parent_state = states_[static_cast<size_t>(nodes_[static_cast<size_t>(node_idx)].state)];
    for (std::size_t c = 0; c < states_.size(); ++c) {
      if (!edge_ok(parent_state, d, states_[c])) continue;
      if (!locally_good(static_cast<int>(c), d.modality, depth - 1)) continue;
      tick();
      SearchNode child;
      child.parent = node_idx;
      child.incoming = d.modality;
      child.state = static_cast<int>(c);
      child.demands = demands_of(states_[c], d.modality);
      nodes_.push_back(child);
      nodes_[static_cast<size_t>(node_idx)].children.push_back(static_cast<int>(nodes_.size()) - 1);
      if (expand_demand(node_idx, di + 1, depth)) return true;
      nodes_.pop_back();
      nodes_[static_cast<size_t>(node_idx)].children.pop_back();
    }
    return false;
  }

  // ---- global run system (M1, M2, nominal avoidance) --------------------------

  bool state_has(int node, int t) const {
    return (states_[static_cast<size_t>(nodes_[static_cast<size_t>(node)].state)] >> t) & 1ull;
  }

  // Is there a full-tree run with rho(x) = t, never entering a banned
  // (node, type) pair?  `banned` is indexed [node][type].
  bool run_exists(int x, int t, const std::vector<std::vector<char>>& banned,
                  std::vector<int>* out) {
    std::vector<int> assign(nodes_.size(), -1);
    if (!place_down(x, t, banned, assign)) return false;
    if (!place_up(x, banned, assign)) return false;
    if (out) *out = assign;
    return true;
  }

  bool allowed_on_edge(int child_node, int t_parent, int s_child) const {
    const SearchNode& cn = nodes_[static_cast<size_t>(child_node)];
    const SearchNode& pn = nodes_[static_cast<size_t>(cn.parent)];
    std::size_t di = 0;
    for (std::size_t i = 0; i < pn.children.size(); ++i)
      if (pn.children[i] == child_node) { di = i; break; }
    return edge_allowed(pn.demands[di], t_parent, s_child);
  }

  bool place_down(int x, int t, const std::vector<std::vector<char>>& banned,
                  std::vector<int>& assign) {
    tick();
    if (banned[static_cast<size_t>(x)][static_cast<size_t>(t)] || !state_has(x, t)) return false;
    assign[static_cast<size_t>(x)] = t;
    for (int c : nodes_[static_cast<size_t>(x)].children) {
      bool placed = false;
      for (int s = 0; s < u_.type_count() && !placed; ++s) {
        if (!state_has(c, s) || !allowed_on_edge(c, t, s)) continue;
        if (place_down(c, s, banned, assign)) placed = true;
      }
      if (!placed) {
        assign[static_cast<size_t>(x)] = -1;
        return false;
      }
    }
    return true;
  }

  bool place_up(int x, const std::vector<std::vector<char>>& banned, std::vector<int>& assign) {
    int p = nodes_[static_cast<size_t>(x)].parent;
    if (p < 0) return true;
    for (int tp = 0; tp < u_.type_count(); ++tp) {
      if (!state_has(p, tp) || banned[static_cast<size_t>(p)][static_cast<size_t>(tp)]) continue;
      if (!allowed_on_edge(x, tp, assign[static_cast<size_t>(x)])) continue;
      assign[static_cast<size_t>(p)] = tp;
      bool ok = true;
      for (int sib : nodes_[static_cast<size_t>(p)].children) {
        if (sib == x) continue;
        bool placed = false;
        for (int s = 0; s < u_.type_count() && !placed; ++s) {
          if (!state_has(sib, s) || !allowed_on_edge(sib, tp, s)) continue;
          if (place_down(sib, s, banned, assign)) placed = true;
        }
        if (!placed) { ok = false; break; }
      }
      if (ok && place_up(p, banned, assign)) return true;
      assign[static_cast<size_t>(p)] = -1;
    }
    return false;
  }

  bool global_check() {
    tick();
    int nn = static_cast<int>(nodes_.size());
    int k = u_.type_count();
    // Nominal slots: (node, type) pairs whose type carries a nominal.
    std::vector<std::pair<int, int>> slots;
    for (int x = 0; x < nn; ++x)
      for (int t = 0; t < k; ++t)
        if (state_has(x, t) && u_.type_has_nominal(t)) slots.emplace_back(x, t);

    std::vector<std::vector<char>> nominal_banned(static_cast<size_t>(nn),
                                                  std::vector<char>(static_cast<size_t>(k), 0));
    for (auto [x, t] : slots) nominal_banned[static_cast<size_t>(x)][static_cast<size_t>(t)] = 1;

    std::vector<std::vector<int>> tracked;
    std::vector<char> claimed(slots.size(), 0);

    std::function<bool()> claim = [&]() -> bool {
      std::size_t next = slots.size();
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (!claimed[i]) { next = i; break; }
      if (next == slots.size()) {
        // All nominal slots owned; remaining slots need nominal-free runs.
        for (int x = 0; x < nn; ++x)
          for (int t = 0; t < k; ++t) {
            if (!state_has(x, t) || u_.type_has_nominal(t)) continue;
            bool covered = false;
            for (const auto& run : tracked)
              if (run[static_cast<size_t>(x)] == t) { covered = true; break; }
            if (covered) continue;
            if (!run_exists(x, t, nominal_banned, nullptr)) return false;
          }
        return true;
      }
      auto [sx, st] = slots[next];
      // A claiming run passes (sx, st), avoids already-claimed slots, and
      // takes ownership of every nominal slot on its trace.
      std::vector<std::vector<char>> banned(static_cast<size_t>(nn),
                                            std::vector<char>(static_cast<size_t>(k), 0));
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (claimed[i])
          banned[static_cast<size_t>(slots[i].first)][static_cast<size_t>(slots[i].second)] = 1;
      // Enumerate candidate runs through (sx, st) by backtracking over
      // whole-tree assignments.
      std::function<bool(std::vector<int>&)> try_run = [&](std::vector<int>& run) -> bool {
        std::vector<std::size_t> newly;
        for (std::size_t i = 0; i < slots.size(); ++i) {
          if (claimed[i]) continue;
          if (run[static_cast<size_t>(slots[i].first)] == slots[i].second) {
            claimed[i] = 1;
            newly.push_back(i);
          }
        }
        tracked.push_back(run);
        if (claim()) return true;
        tracked.pop_back();
        for (std::size_t i : newly) claimed[i] = 0;
        return false;
      };
      return enumerate_runs_through(sx, st, banned, try_run);
    };

    if (!claim()) return false;

    // Assemble the witness: tracked runs plus one nominal-free run per
    // uncovered slot.
    TreeQuasimodel q;
    q.s5 = s5_;
    q.modality_count = n_;
    for (const SearchNode& nd : nodes_)
      q.nodes.push_back(QuasimodelNode{nd.parent, nd.incoming, states_[static_cast<size_t>(nd.state)]});
    q.runs = tracked;
    for (int x = 0; x < nn; ++x)
      for (int t = 0; t < k; ++t) {
        if (!state_has(x, t)) continue;
        bool covered = false;
        for (const auto& run : q.runs)
          if (run[static_cast<size_t>(x)] == t) { covered = true; break; }
        if (covered) continue;
        std::vector<int> run;
        if (!run_exists(x, t, nominal_banned, &run)) return false;  // cannot happen
        q.runs.push_back(run);
      }
    witness_ = q;
    return true;
  }

  // Backtracking enumeration of runs through (sx, st); calls sink on each
  // candidate until it returns true.
  bool enumerate_runs_through(int sx, int st, const std::vector<std::vector<char>>& banned,
                              const std::function<bool(std::vector<int>&)>& sink) {
    std::vector<int> assign(nodes_.size(), -1);
    // Assign node types in index order (parents precede children).
    std::function<bool(int)> go = [&](int x) -> bool {
      tick();
      if (x == static_cast<int>(nodes_.size())) return sink(assign);
      const SearchNode& nd = nodes_[static_cast<size_t>(x)];
      if (x == sx) {
        if (banned[static_cast<size_t>(x)][static_cast<size_t>(st)] || !state_has(x, st))
          return false;
        if (nd.parent >= 0 &&
            !allowed_on_edge(x, assign[static_cast<size_t>(nd.parent)], st))
          return false;
        assign[static_cast<size_t>(x)] = st;
        if (go(x + 1)) return true;
        assign[static_cast<size_t>(x)] = -1;
        return false;
      }
      for (int t = 0; t < u_.type_count(); ++t) {
        if (!state_has(x, t) || banned[static_cast<size_t>(x)][static_cast<size_t>(t)]) continue;
        if (nd.parent >= 0 && !allowed_on_edge(x, assign[static_cast<size_t>(nd.parent)], t))
          continue;
        assign[static_cast<size_t>(x)] = t;
        if (go(x + 1)) return true;
        assign[static_cast<size_t>(x)] = -1;
      }
      return false;
    };
    return go(0);
  }

  TypeUniverse u_;
  Concept c0_;
  int n_;
  bool s5_;
  DecideLimits limits_;
  int depth_ = 0;
  std::int64_t work_ = 0;
  std::vector<std::vector<std::vector<char>>> rel_;  // [modality][t][t2]
  std::vector<std::uint64_t> states_;
  std::vector<SearchNode> nodes_;
  std::map<std::tuple<int, int, int>, bool> good_memo_;
  std::optional<TreeQuasimodel> witness_;
};

void check_fragment(Concept c0, int n) {
  if (!is_iota_free(c0)) throw FragmentError("modal quasimodel search expects iota-free input");
  if (!is_diff_free(c0)) throw FragmentError("modal quasimodel search expects counting-free input");
  for (Concept s : subconcepts(c0))
    if (s.kind() == Kind::Dia && s.modality() > n)
      throw FragmentError("modality index exceeds the declared count");
}

}  // namespace

ModalSatResult s5n_sat(Concept c0, int modality_count, const DecideLimits& limits) {
  check_fragment(c0, modality_count);
  return S5KSearch(c0, modality_count, true, limits).run();
}

ModalSatResult kn_sat(Concept c0, int modality_count, const DecideLimits& limits) {
  check_fragment(c0, modality_count);
  return S5KSearch(c0, modality_count, false, limits).run();
}

namespace {
Frame quasimodel_frame(const TreeQuasimodel& q) {
  int W = static_cast<int>(q.nodes.size());
  Frame f(W, q.modality_count);
  for (int x = 0; x < W; ++x) {
    int p = q.nodes[static_cast<size_t>(x)].parent;
    if (p >= 0) f.add_edge(q.nodes[static_cast<size_t>(x)].incoming, p, x);
  }
  if (q.s5) {
    // Close each relation into an equivalence relation.
    for (int i = 1; i <= q.modality_count; ++i) {
      for (int w = 0; w < W; ++w) f.add_edge(i, w, w);
      bool changed = true;
      while (changed) {
        changed = false;
        for (int w = 0; w < W; ++w)
          for (int v = 0; v < W; ++v)
            if (f.edge(i, w, v)) {
              if (!f.edge(i, v, w)) { f.add_edge(i, v, w); changed = true; }
              for (int z = 0; z < W; ++z)
                if (f.edge(i, v, z) && !f.edge(i, w, z)) { f.add_edge(i, w, z); changed = true; }
            }
      }
    }
  }
  return f;
}
}  // namespace

bool check_quasimodel(const TreeQuasimodel& q, Concept c0, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  TypeUniverse u = TypeUniverse::build({c0}, q.s5, 64, 4096);
  int W = static_cast<int>(q.nodes.size());
  if (W == 0) return fail("empty tree");
  Frame f = quasimodel_frame(q);

  for (int x = 0; x < W; ++x) {
    std::uint64_t s = q.nodes[static_cast<size_t>(x)].state;
    if (!s) return fail("empty quasistate");
    for (const auto& nm : u.nominal_members()) {
      int cnt = 0;
      for (int t = 0; t < u.type_count(); ++t)
        if (((s >> t) & 1ull) && u.has(t, nm.self)) ++cnt;
      if (cnt != 1) return fail("Q1 fails for " + nm.name);
    }
    for (int t = 0; t < u.type_count(); ++t) {
      if (!((s >> t) & 1ull)) continue;
      for (const auto& rm : u.role_members()) {
        if (!u.has(t, rm.self)) continue;
        bool found = false;
        for (int t2 = 0; t2 < u.type_count() && !found; ++t2)
          if (((s >> t2) & 1ull) && u.role_witness_ok(rm, t, t2)) found = true;
        if (!found) return fail("Q2 fails");
      }
      for (const auto& um : u.u_members()) {
        bool some = false;
        for (int t2 = 0; t2 < u.type_count() && !some; ++t2)
          if (((s >> t2) & 1ull) && u.has(t2, um.body)) some = true;
        if (u.has(t, um.self) != some) return fail("Q3 fails");
      }
    }
  }

  int goal = u.index_of(c0);
  bool b1 = false;
  for (int t = 0; t < u.type_count(); ++t)
    if (((q.nodes[0].state >> t) & 1ull) && u.has(t, goal)) b1 = true;
  if (!b1) return fail("B1 fails at the root");

  for (const auto& run : q.runs) {
    if (static_cast<int>(run.size()) != W) return fail("run arity mismatch");
    for (int x = 0; x < W; ++x)
      if (!((q.nodes[static_cast<size_t>(x)].state >> run[static_cast<size_t>(x)]) & 1ull))
        return fail("run leaves its quasistate");
    for (int x = 0; x < W; ++x)
      for (const auto& dm : u.dia_members()) {
        bool asserted = u.has(run[static_cast<size_t>(x)], dm.self);
        bool witnessed = false;
        for (int v = 0; v < W && !witnessed; ++v)
          if (f.edge(dm.modality, x, v) && u.has(run[static_cast<size_t>(v)], dm.body))
            witnessed = true;
        if (witnessed && !asserted) return fail("R1 fails");
        if (asserted && !witnessed) return fail("R2 fails");
      }
  }

  for (int x = 0; x < W; ++x) {
    std::uint64_t s = q.nodes[static_cast<size_t>(x)].state;
    for (int t = 0; t < u.type_count(); ++t) {
      if (!((s >> t) & 1ull)) continue;
      bool realized = false;
      for (const auto& run : q.runs)
        if (run[static_cast<size_t>(x)] == t) { realized = true; break; }
      if (!realized) return fail("M1 fails");
    }
    for (const auto& nm : u.nominal_members()) {
      int cnt = 0;
      for (const auto& run : q.runs)
        if (u.has(run[static_cast<size_t>(x)], nm.self)) ++cnt;
      if (cnt != 1) return fail("M2 fails for " + nm.name);
    }
  }
  return true;
}

Interpretation quasimodel_to_model(const TreeQuasimodel& q, Concept c0) {
  TypeUniverse u = TypeUniverse::build({c0}, q.s5, 64, 4096);
  int W = static_cast<int>(q.nodes.size());
  int N = static_cast<int>(q.runs.size());
  if (N > 31) throw ResourceError("run set too large to extract a bitmask model");
  Interpretation m;
  m.frame = quasimodel_frame(q);
  m.pool_size = std::max(1, N);
  m.domain.assign(static_cast<size_t>(W), N == 0 ? 1u : ((1u << N) - 1));

  Signature sig = signature_of(c0);
  for (const std::string& a : sig.concept_names) m.concept_ext[a].assign(static_cast<size_t>(W), 0);
  for (const std::string& r : sig.role_names) {
    m.role_ext[r].assign(static_cast<size_t>(W), {});
    for (int w = 0; w < W; ++w)
      m.role_ext[r][static_cast<size_t>(w)].assign(static_cast<size_t>(m.pool_size), 0);
  }
  for (const std::string& a : sig.individual_names)
    m.individuals[a].assign(static_cast<size_t>(W), -1);

  for (int r = 0; r < N; ++r)
    for (int w = 0; w < W; ++w) {
      int t = q.runs[static_cast<size_t>(r)][static_cast<size_t>(w)];
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
        for (int r2 = 0; r2 < N; ++r2)
          if (u.role_edge_compatible(role, q.runs[static_cast<size_t>(r)][static_cast<size_t>(w)],
                                     q.runs[static_cast<size_t>(r2)][static_cast<size_t>(w)]))
            m.role_ext[role][static_cast<size_t>(w)][static_cast<size_t>(r)] |= (1u << r2);
  return m;
}

}  // namespace freedl
