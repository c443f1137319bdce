// Budgeted Kf*n satisfiability: finite tree-shaped frames whose last
// modality is the transitive closure of the base relations, and expanding
// domains realized by descendant-closed rooted runs.
//
// Quasistate count vectors only influence satisfiability through their
// support and the nominal counting condition, so the search enumerates
// labeled trees and per-node support sets, then solves for a run system the
// same way as the S5/K search: one claiming run per (node, nominal type)
// slot, nominal-free runs for the remaining slots.  The worlds budget bounds
// the tree; the multiplicity budget is reported back via the CAP flag when a
// witness stacks more runs on a slot than the budget allows.

#include <algorithm>
#include <functional>

#include "freedl/decide.hpp"
#include "freedl/errors.hpp"

namespace freedl {

namespace {

struct KfnTree {
  std::vector<int> parent;
  std::vector<int> label;
  std::vector<std::vector<int>> children;
  std::vector<std::vector<int>> descendants;  // strict
  std::vector<std::vector<int>> ancestors;    // strict, nearest first
};

KfnTree finish_tree(const std::vector<int>& parent, const std::vector<int>& label) {
  KfnTree t;
  t.parent = parent;
  t.label = label;
  int n = static_cast<int>(parent.size());
  t.children.assign(static_cast<size_t>(n), {});
  t.descendants.assign(static_cast<size_t>(n), {});
  t.ancestors.assign(static_cast<size_t>(n), {});
  for (int i = 1; i < n; ++i)
    t.children[static_cast<size_t>(parent[static_cast<size_t>(i)])].push_back(i);
  for (int i = n - 1; i >= 0; --i)
    for (int c : t.children[static_cast<size_t>(i)]) {
      t.descendants[static_cast<size_t>(i)].push_back(c);
      for (int d : t.descendants[static_cast<size_t>(c)])
        t.descendants[static_cast<size_t>(i)].push_back(d);
    }
  for (int i = 0; i < n; ++i)
    for (int a = parent[static_cast<size_t>(i)]; a >= 0; a = parent[static_cast<size_t>(a)])
      t.ancestors[static_cast<size_t>(i)].push_back(a);
  return t;
}

class KfnSearch {
 public:
  KfnSearch(const TypeUniverse& u, int n_base, const KfnBudget& budget,
            const DecideLimits& limits)
      : u_(u), n_base_(n_base), budget_(budget), limits_(limits) {
    build_supports();
  }

  bool capped() const { return capped_; }

  std::optional<KfnWitness> search_tree(const KfnTree& tree, int goal) {
    tree_ = &tree;
    int nn = static_cast<int>(tree.parent.size());
    support_.assign(static_cast<size_t>(nn), 0);
    goal_ = goal;
    found_.reset();
    assign_support(0);
    return found_;
  }

 private:
  void tick() {
    if (++work_ > limits_.work_cap) throw ResourceError("kfn search work cap exceeded");
  }

  // Node-local support conditions: nonempty, one nominal type per nominal,
  // role witnesses inside, universal-role coherence.
  void build_supports() {
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
      if (ok) supports_.push_back(s);
    }
  }

  // Necessary pairwise condition for a run crossing the edge into `child`
  // (label i): members of the child type force assertions at the parent,
  // both for the edge modality and the transitive closure.
  bool can_reach(int t_parent, int s_child, int label) const {
    for (const auto& dm : u_.dia_members()) {
      if (dm.modality == label || dm.modality == n_base_ + 1) {
        if (u_.has(s_child, dm.body) && !u_.has(t_parent, dm.self)) return false;
      }
      // A closure assertion downstream forces one upstream.
      if (dm.modality == n_base_ + 1 && u_.has(s_child, dm.self) && !u_.has(t_parent, dm.self))
        return false;
    }
    return true;
  }

  bool edge_ok(std::uint64_t sp, std::uint64_t sc, int label) const {
    int k = u_.type_count();
    for (int t = 0; t < k; ++t) {
      if (!((sp >> t) & 1ull)) continue;
      bool some = false;
      for (int s = 0; s < k && !some; ++s)
        if (((sc >> s) & 1ull) && can_reach(t, s, label)) some = true;
      if (!some) return false;
    }
    return true;
  }

  bool assign_support(int node) {
    tick();
    int nn = static_cast<int>(tree_->parent.size());
    if (node == nn) return solve_runs();
    for (std::uint64_t s : supports_) {
      if (node == 0) {
        bool b1 = false;
        for (int t = 0; t < u_.type_count(); ++t)
          if (((s >> t) & 1ull) && u_.has(t, goal_)) { b1 = true; break; }
        if (!b1) continue;
      } else {
        int p = tree_->parent[static_cast<size_t>(node)];
        if (!edge_ok(support_[static_cast<size_t>(p)], s,
                     tree_->label[static_cast<size_t>(node)]))
          continue;
      }
      support_[static_cast<size_t>(node)] = s;
      if (assign_support(node + 1)) return true;
    }
    support_[static_cast<size_t>(node)] = 0;
    return false;
  }

  bool in_support(int x, int t) const {
    return (support_[static_cast<size_t>(x)] >> t) & 1ull;
  }

  // Enumerate rooted runs through (x, t) that avoid banned (node, type)
  // pairs; call sink until it returns true.  A run rooted at `a` assigns a
  // type to every node of subtree(a) and -1 elsewhere.
  bool enumerate_runs_through(int x, int t, const std::vector<std::vector<char>>& banned,
                              const std::function<bool(std::vector<int>&)>& sink) {
    const KfnTree& tree = *tree_;
    std::vector<int> roots{x};
    for (int a : tree.ancestors[static_cast<size_t>(x)]) roots.push_back(a);
    for (int root : roots) {
      std::vector<int> sub{root};
      for (int d : tree.descendants[static_cast<size_t>(root)]) sub.push_back(d);
      std::sort(sub.begin(), sub.end());
      std::vector<int> assign(tree.parent.size(), -1);
      std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        tick();
        if (i == sub.size()) {
          if (!run_valid(sub, assign)) return false;
          return sink(assign);
        }
        int y = sub[i];
        if (y == x) {
          if (!in_support(y, t) || banned[static_cast<size_t>(y)][static_cast<size_t>(t)])
            return false;
          assign[static_cast<size_t>(y)] = t;
          if (go(i + 1)) return true;
          assign[static_cast<size_t>(y)] = -1;
          return false;
        }
        for (int ty = 0; ty < u_.type_count(); ++ty) {
          if (!in_support(y, ty) || banned[static_cast<size_t>(y)][static_cast<size_t>(ty)])
            continue;
          assign[static_cast<size_t>(y)] = ty;
          if (go(i + 1)) return true;
          assign[static_cast<size_t>(y)] = -1;
        }
        return false;
      };
      if (go(0)) return true;
    }
    return false;
  }

  // Per-run diamond conditions over the assigned subtree.
  bool run_valid(const std::vector<int>& sub, const std::vector<int>& assign) const {
    const KfnTree& tree = *tree_;
    for (int y : sub) {
      int t = assign[static_cast<size_t>(y)];
      for (const auto& dm : u_.dia_members()) {
        bool asserted = u_.has(t, dm.self);
        bool witnessed = false;
        if (dm.modality <= n_base_) {
          for (int c : tree.children[static_cast<size_t>(y)])
            if (tree.label[static_cast<size_t>(c)] == dm.modality &&
                assign[static_cast<size_t>(c)] >= 0 &&
                u_.has(assign[static_cast<size_t>(c)], dm.body)) {
              witnessed = true;
              break;
            }
        } else {
          for (int d : tree.descendants[static_cast<size_t>(y)])
            if (assign[static_cast<size_t>(d)] >= 0 &&
                u_.has(assign[static_cast<size_t>(d)], dm.body)) {
              witnessed = true;
              break;
            }
        }
        if (asserted != witnessed) return false;
      }
    }
    return true;
  }

  bool solve_runs() {
    tick();
    const KfnTree& tree = *tree_;
    int nn = static_cast<int>(tree.parent.size());
    int k = u_.type_count();
    std::vector<std::pair<int, int>> slots;
    for (int x = 0; x < nn; ++x)
      for (int t = 0; t < k; ++t)
        if (in_support(x, t) && u_.type_has_nominal(t)) slots.emplace_back(x, t);

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
        for (int x = 0; x < nn; ++x)
          for (int t = 0; t < k; ++t) {
            if (!in_support(x, t) || u_.type_has_nominal(t)) continue;
            bool covered = false;
            for (const auto& run : tracked)
              if (run[static_cast<size_t>(x)] == t) { covered = true; break; }
            if (covered) continue;
            if (!enumerate_runs_through(x, t, nominal_banned,
                                        [](std::vector<int>&) { return true; }))
              return false;
          }
        return true;
      }
      auto [sx, st] = slots[next];
      std::vector<std::vector<char>> banned(static_cast<size_t>(nn),
                                            std::vector<char>(static_cast<size_t>(k), 0));
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (claimed[i])
          banned[static_cast<size_t>(slots[i].first)][static_cast<size_t>(slots[i].second)] = 1;
      return enumerate_runs_through(sx, st, banned, [&](std::vector<int>& run) -> bool {
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
      });
    };

    if (!claim()) return false;

    KfnWitness w;
    for (int x = 0; x < nn; ++x)
      w.nodes.push_back(
          KfnTreeNode{tree.parent[static_cast<size_t>(x)], tree.label[static_cast<size_t>(x)]});
    w.runs = tracked;
    for (int x = 0; x < nn; ++x)
      for (int t = 0; t < k; ++t) {
        if (!in_support(x, t)) continue;
        bool covered = false;
        for (const auto& run : w.runs)
          if (run[static_cast<size_t>(x)] == t) { covered = true; break; }
        if (covered) continue;
        bool added = enumerate_runs_through(x, t, nominal_banned, [&](std::vector<int>& run) {
          w.runs.push_back(run);
          return true;
        });
        if (!added) return false;
      }
    // Report when the assembled system exceeds the multiplicity budget.
    for (int x = 0; x < nn && !capped_; ++x)
      for (int t = 0; t < k; ++t) {
        int c = 0;
        for (const auto& run : w.runs)
          if (run[static_cast<size_t>(x)] == t) ++c;
        if (c > budget_.max_multiplicity) { capped_ = true; break; }
      }
    found_ = w;
    return true;
  }

  const TypeUniverse& u_;
  int n_base_;
  KfnBudget budget_;
  DecideLimits limits_;
  const KfnTree* tree_ = nullptr;
  std::int64_t work_ = 0;
  bool capped_ = false;
  int goal_ = 0;
  std::vector<std::uint64_t> supports_;
  std::vector<std::uint64_t> support_;
  std::optional<KfnWitness> found_;
};

Frame kfn_frame(const std::vector<KfnTreeNode>& nodes, int n_base) {
  int W = static_cast<int>(nodes.size());
  Frame f(W, n_base + 1);
  for (int x = 0; x < W; ++x)
    if (nodes[static_cast<size_t>(x)].parent >= 0)
      f.add_edge(nodes[static_cast<size_t>(x)].incoming, nodes[static_cast<size_t>(x)].parent, x);
  for (int x = 0; x < W; ++x)
    for (int y = x; nodes[static_cast<size_t>(y)].parent >= 0;) {
      y = nodes[static_cast<size_t>(y)].parent;
      f.add_edge(n_base + 1, y, x);
    }
  return f;
}

}  // namespace

KfnResult kfn_sat_budgeted(Concept c0, int base_modalities, const KfnBudget& budget,
                           const DecideLimits& limits) {
  if (!is_iota_free(c0)) throw FragmentError("kfn_sat_budgeted expects iota-free input");
  if (!is_diff_free(c0)) throw FragmentError("kfn_sat_budgeted expects counting-free input");
  for (Concept s : subconcepts(c0))
    if (s.kind() == Kind::Dia && s.modality() > base_modalities + 1)
      throw FragmentError("modality index exceeds base count + closure");

  TypeUniverse u = TypeUniverse::build({c0}, false, limits.closure_cap, limits.type_cap);
  if (u.type_count() > 20) throw ResourceError("too many types for the kfn search");
  int goal = u.index_of(c0);

  KfnSearch search(u, base_modalities, budget, limits);
  KfnResult res;

  for (int nn = 1; nn <= budget.max_worlds; ++nn) {
    std::vector<int> parent(static_cast<size_t>(nn), -1);
    std::vector<int> label(static_cast<size_t>(nn), 0);
    bool done = false;
    std::function<bool(int)> trees = [&](int i) -> bool {
      if (i == nn) {
        KfnTree t = finish_tree(parent, label);
        if (auto w = search.search_tree(t, goal)) {
          res.verdict = KfnVerdict::Sat;
          res.witness = w;
          return true;
        }
        return false;
      }
      for (int p = 0; p < i; ++p)
        for (int l = 1; l <= base_modalities; ++l) {
          parent[static_cast<size_t>(i)] = p;
          label[static_cast<size_t>(i)] = l;
          if (trees(i + 1)) return true;
        }
      return false;
    };
    done = trees(1);
    if (done) {
      res.multiplicity_capped = search.capped();
      return res;
    }
  }
  res.verdict = KfnVerdict::UnsatWithinBudget;
  res.multiplicity_capped = search.capped();
  return res;
}

bool check_kfn_witness(const KfnWitness& w, Concept c0, int base_modalities, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  TypeUniverse u = TypeUniverse::build({c0}, false, 64, 4096);
  int W = static_cast<int>(w.nodes.size());
  if (W == 0) return fail("empty tree");
  Frame f = kfn_frame(w.nodes, base_modalities);
  int k = u.type_count();

  std::vector<std::vector<int>> cnt(static_cast<size_t>(W),
                                    std::vector<int>(static_cast<size_t>(k), 0));
  for (const auto& run : w.runs) {
    if (static_cast<int>(run.size()) != W) return fail("run arity mismatch");
    for (int x = 0; x < W; ++x) {
      int p = w.nodes[static_cast<size_t>(x)].parent;
      if (p >= 0 && run[static_cast<size_t>(p)] >= 0 && run[static_cast<size_t>(x)] < 0)
        return fail("run domain is not descendant-closed");
    }
    bool nonempty = false;
    for (int x = 0; x < W; ++x)
      if (run[static_cast<size_t>(x)] >= 0) {
        nonempty = true;
        ++cnt[static_cast<size_t>(x)][static_cast<size_t>(run[static_cast<size_t>(x)])];
      }
    if (!nonempty) return fail("empty run");
    for (int x = 0; x < W; ++x) {
      if (run[static_cast<size_t>(x)] < 0) continue;
      for (const auto& dm : u.dia_members()) {
        bool asserted = u.has(run[static_cast<size_t>(x)], dm.self);
        bool witnessed = false;
        for (int v = 0; v < W && !witnessed; ++v)
          if (f.edge(dm.modality, x, v) && run[static_cast<size_t>(v)] >= 0 &&
              u.has(run[static_cast<size_t>(v)], dm.body))
            witnessed = true;
        if (asserted != witnessed) return fail(asserted ? "R2 fails" : "R1 fails");
      }
    }
  }

  for (int x = 0; x < W; ++x) {
    int total = 0;
    for (int t = 0; t < k; ++t) total += cnt[static_cast<size_t>(x)][static_cast<size_t>(t)];
    if (total == 0) return fail("empty quasistate");
    for (const auto& nm : u.nominal_members()) {
      int c = 0;
      for (int t = 0; t < k; ++t)
        if (u.has(t, nm.self)) c += cnt[static_cast<size_t>(x)][static_cast<size_t>(t)];
      if (c != 1) return fail("vector Q1 fails for " + nm.name);
    }
    for (int t = 0; t < k; ++t) {
      if (cnt[static_cast<size_t>(x)][static_cast<size_t>(t)] == 0) continue;
      for (const auto& rm : u.role_members()) {
        if (!u.has(t, rm.self)) continue;
        bool foundw = false;
        for (int t2 = 0; t2 < k && !foundw; ++t2)
          if (cnt[static_cast<size_t>(x)][static_cast<size_t>(t2)] > 0 &&
              u.role_witness_ok(rm, t, t2))
            foundw = true;
        if (!foundw) return fail("vector Q2 fails");
      }
      for (const auto& um : u.u_members()) {
        bool some = false;
        for (int t2 = 0; t2 < k && !some; ++t2)
          if (cnt[static_cast<size_t>(x)][static_cast<size_t>(t2)] > 0 && u.has(t2, um.body))
            some = true;
        if (u.has(t, um.self) != some) return fail("vector Q3 fails");
      }
    }
  }
  int goal = u.index_of(c0);
  for (int t = 0; t < k; ++t)
    if (cnt[0][static_cast<size_t>(t)] > 0 && u.has(t, goal)) return true;
  return fail("B1 fails at the root");
}

Interpretation kfn_witness_to_model(Concept c0, int base_modalities, const KfnWitness& w) {
  TypeUniverse u = TypeUniverse::build({c0}, false, 64, 4096);
  int W = static_cast<int>(w.nodes.size());
  int N = static_cast<int>(w.runs.size());
  if (N > 31) throw ResourceError("run set too large to extract a bitmask model");
  Interpretation m;
  m.frame = kfn_frame(w.nodes, base_modalities);
  m.pool_size = std::max(1, N);
  m.domain.assign(static_cast<size_t>(W), 0);
  for (int x = 0; x < W; ++x) {
    for (int r = 0; r < N; ++r)
      if (w.runs[static_cast<size_t>(r)][static_cast<size_t>(x)] >= 0)
        m.domain[static_cast<size_t>(x)] |= (1u << r);
    if (!m.domain[static_cast<size_t>(x)]) m.domain[static_cast<size_t>(x)] = 1;
  }

  Signature sig = signature_of(c0);
  for (const std::string& a : sig.concept_names) m.concept_ext[a].assign(static_cast<size_t>(W), 0);
  for (const std::string& r : sig.role_names) {
    m.role_ext[r].assign(static_cast<size_t>(W), {});
    for (int x = 0; x < W; ++x)
      m.role_ext[r][static_cast<size_t>(x)].assign(static_cast<size_t>(m.pool_size), 0);
  }
  for (const std::string& a : sig.individual_names)
    m.individuals[a].assign(static_cast<size_t>(W), -1);

  for (int r = 0; r < N; ++r)
    for (int x = 0; x < W; ++x) {
      int t = w.runs[static_cast<size_t>(r)][static_cast<size_t>(x)];
      if (t < 0) continue;
      for (const std::string& a : sig.concept_names) {
        int idx = u.index_of(make_name(a));
        if (idx >= 0 && u.has(t, idx)) m.concept_ext[a][static_cast<size_t>(x)] |= (1u << r);
      }
      for (const TypeUniverse::NomMember& nm : u.nominal_members())
        if (u.has(t, nm.self)) m.individuals[nm.name][static_cast<size_t>(x)] = r;
    }
  for (const std::string& role : sig.role_names)
    for (int x = 0; x < W; ++x)
      for (int r = 0; r < N; ++r)
        for (int r2 = 0; r2 < N; ++r2) {
          int t = w.runs[static_cast<size_t>(r)][static_cast<size_t>(x)];
          int t2 = w.runs[static_cast<size_t>(r2)][static_cast<size_t>(x)];
          if (t >= 0 && t2 >= 0 && u.role_edge_compatible(role, t, t2))
            m.role_ext[role][static_cast<size_t>(x)][static_cast<size_t>(r)] |= (1u << r2);
        }
  return m;
}

}  // namespace freedl
