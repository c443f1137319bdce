#include "freedl/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "freedl/errors.hpp"
#include "freedl/printer.hpp"
#include "freedl/syntax.hpp"
#include "sat_core.hpp"

namespace freedl {

std::int64_t env_work_cap(std::int64_t fallback) {
  const char* env = std::getenv("FREEDL_WORK_CAP");
  if (!env) return fallback;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  return v > 0 ? static_cast<std::int64_t>(v) : fallback;
}

namespace {

using sat::Solver;

// Encodes "some interpretation with exactly W worlds over an element pool of
// size D satisfies the ontology and realizes the goal" as CNF.
class BoundedModelEncoder {
 public:
  BoundedModelEncoder(Concept goal, const Ontology& onto, const Signature& sig,
                      const ModelBounds& bounds, int W, int D)
      : goal_(goal), onto_(onto), sig_(sig), bounds_(bounds), W_(W), D_(D) {
    nrel_ = bounds.frame_class.relation_count();
    expanding_ = bounds.domain_mode == DomainMode::Expanding;
    true_lit_ = sat::pos(s_.new_var());
    s_.add_unit(true_lit_);
    build_frame_vars();
    build_domain_vars();
    build_individual_vars();
    build_constraints();
  }

  sat::SolveResult solve(std::int64_t budget) { return s_.solve(budget); }
  Interpretation decode() const;

 private:
  int false_lit() const { return sat::lit_negate(true_lit_); }
  bool fixed_frame() const {
    return bounds_.frame_class.tag == FrameClassTag::LTLFinite ||
           bounds_.frame_class.tag == FrameClassTag::LTLInfinitePrefix;
  }

  // 1-based relation index.
  int edge_lit(int i, int w, int v) const {
    if (fixed_frame()) {
      bool on = i == 1 ? v == w + 1 : v > w;
      return on ? true_lit_ : false_lit();
    }
    return edge_[static_cast<size_t>(i - 1)][static_cast<size_t>(w)][static_cast<size_t>(v)];
  }
  int dom_lit(int w, int d) const {
    return expanding_ ? dom_[static_cast<size_t>(w)][static_cast<size_t>(d)] : true_lit_;
  }

  void build_frame_vars() {
    if (fixed_frame()) return;
    int base = bounds_.frame_class.base_modalities;
    edge_.assign(static_cast<size_t>(nrel_), {});
    for (int i = 0; i < base; ++i) {
      edge_[static_cast<size_t>(i)].assign(static_cast<size_t>(W_),
                                           std::vector<int>(static_cast<size_t>(W_), 0));
      for (int w = 0; w < W_; ++w)
        for (int v = 0; v < W_; ++v)
          edge_[static_cast<size_t>(i)][static_cast<size_t>(w)][static_cast<size_t>(v)] =
              sat::pos(s_.new_var());
    }
    FrameClassTag tag = bounds_.frame_class.tag;
    if (tag == FrameClassTag::S5n) {
      for (int i = 1; i <= base; ++i) {
        for (int w = 0; w < W_; ++w) s_.add_unit(edge_lit(i, w, w));
        for (int w = 0; w < W_; ++w)
          for (int v = 0; v < W_; ++v) {
            s_.add_binary(sat::lit_negate(edge_lit(i, w, v)), edge_lit(i, v, w));
            for (int z = 0; z < W_; ++z)
              s_.add_ternary(sat::lit_negate(edge_lit(i, w, v)),
                             sat::lit_negate(edge_lit(i, v, z)), edge_lit(i, w, z));
          }
      }
    }
    if (tag == FrameClassTag::KStarN || tag == FrameClassTag::KfStarN) {
      // Relation base+1 is the transitive closure of the union: reachability
      // by paths of length 1..W.
      std::vector<std::vector<int>> uni(static_cast<size_t>(W_),
                                        std::vector<int>(static_cast<size_t>(W_)));
      for (int w = 0; w < W_; ++w)
        for (int v = 0; v < W_; ++v) {
          std::vector<int> lits;
          for (int i = 1; i <= base; ++i) lits.push_back(edge_lit(i, w, v));
          uni[static_cast<size_t>(w)][static_cast<size_t>(v)] = sat::pos(s_.def_or(lits));
        }
      std::vector<std::vector<std::vector<int>>> path(
          static_cast<size_t>(W_),
          std::vector<std::vector<int>>(static_cast<size_t>(W_), std::vector<int>(static_cast<size_t>(W_))));
      for (int w = 0; w < W_; ++w)
        for (int v = 0; v < W_; ++v) path[0][static_cast<size_t>(w)][static_cast<size_t>(v)] = uni[static_cast<size_t>(w)][static_cast<size_t>(v)];
      for (int k = 1; k < W_; ++k)
        for (int w = 0; w < W_; ++w)
          for (int v = 0; v < W_; ++v) {
            std::vector<int> lits;
            for (int z = 0; z < W_; ++z)
              lits.push_back(sat::pos(s_.def_and(
                  {path[static_cast<size_t>(k - 1)][static_cast<size_t>(w)][static_cast<size_t>(z)], uni[static_cast<size_t>(z)][static_cast<size_t>(v)]})));
            path[static_cast<size_t>(k)][static_cast<size_t>(w)][static_cast<size_t>(v)] = sat::pos(s_.def_or(lits));
          }
      edge_[static_cast<size_t>(base)].assign(static_cast<size_t>(W_),
                                              std::vector<int>(static_cast<size_t>(W_), 0));
      for (int w = 0; w < W_; ++w)
        for (int v = 0; v < W_; ++v) {
          std::vector<int> lits;
          for (int k = 0; k < W_; ++k) lits.push_back(path[static_cast<size_t>(k)][static_cast<size_t>(w)][static_cast<size_t>(v)]);
          int r = sat::pos(s_.def_or(lits));
          edge_[static_cast<size_t>(base)][static_cast<size_t>(w)][static_cast<size_t>(v)] = r;
          if (tag == FrameClassTag::KfStarN && w == v) s_.add_unit(sat::lit_negate(r));
        }
    }
  }

  void build_domain_vars() {
    if (!expanding_) return;
    dom_.assign(static_cast<size_t>(W_), std::vector<int>(static_cast<size_t>(D_)));
    for (int w = 0; w < W_; ++w)
      for (int d = 0; d < D_; ++d) dom_[static_cast<size_t>(w)][static_cast<size_t>(d)] = sat::pos(s_.new_var());
    for (int w = 0; w < W_; ++w) {
      std::vector<int> nonempty;
      for (int d = 0; d < D_; ++d) nonempty.push_back(dom_lit(w, d));
      s_.add_clause(nonempty);
      for (int i = 1; i <= nrel_; ++i)
        for (int v = 0; v < W_; ++v)
          for (int d = 0; d < D_; ++d)
            s_.add_ternary(sat::lit_negate(edge_lit(i, w, v)), sat::lit_negate(dom_lit(w, d)),
                           dom_lit(v, d));
    }
  }

  void build_individual_vars() {
    for (const std::string& a : sig_.individual_names) {
      auto& tbl = ind_[a];
      tbl.assign(static_cast<size_t>(W_), std::vector<int>(static_cast<size_t>(D_)));
      for (int w = 0; w < W_; ++w) {
        for (int d = 0; d < D_; ++d) tbl[static_cast<size_t>(w)][static_cast<size_t>(d)] = sat::pos(s_.new_var());
        for (int d = 0; d < D_; ++d)
          for (int e = d + 1; e < D_; ++e)
            s_.add_binary(sat::lit_negate(tbl[static_cast<size_t>(w)][static_cast<size_t>(d)]),
                          sat::lit_negate(tbl[static_cast<size_t>(w)][static_cast<size_t>(e)]));
        if (expanding_)
          for (int d = 0; d < D_; ++d)
            s_.add_binary(sat::lit_negate(tbl[static_cast<size_t>(w)][static_cast<size_t>(d)]), dom_lit(w, d));
        if (bounds_.designation_mode == DesignationMode::Total) {
          std::vector<int> some;
          for (int d = 0; d < D_; ++d) some.push_back(tbl[static_cast<size_t>(w)][static_cast<size_t>(d)]);
          s_.add_clause(some);
        }
      }
      if (bounds_.rda) {
        for (int i = 1; i <= nrel_; ++i)
          for (int w = 0; w < W_; ++w)
            for (int v = 0; v < W_; ++v)
              for (int d = 0; d < D_; ++d)
                s_.add_ternary(sat::lit_negate(edge_lit(i, w, v)),
                               sat::lit_negate(tbl[static_cast<size_t>(w)][static_cast<size_t>(d)]),
                               tbl[static_cast<size_t>(v)][static_cast<size_t>(d)]);
      }
    }
  }

  int concept_bit(const std::string& name, int w, int d) {
    auto it = cvar_.find(name);
    if (it == cvar_.end()) {
      auto& tbl = cvar_[name];
      tbl.assign(static_cast<size_t>(W_), std::vector<int>(static_cast<size_t>(D_)));
      for (int ww = 0; ww < W_; ++ww)
        for (int dd = 0; dd < D_; ++dd) {
          int lit = sat::pos(s_.new_var());
          tbl[static_cast<size_t>(ww)][static_cast<size_t>(dd)] = lit;
          if (expanding_) s_.add_binary(sat::lit_negate(lit), dom_lit(ww, dd));
        }
      it = cvar_.find(name);
    }
    return it->second[static_cast<size_t>(w)][static_cast<size_t>(d)];
  }

  int role_bit(const std::string& name, int w, int d, int e) {
    auto it = rvar_.find(name);
    if (it == rvar_.end()) {
      auto& tbl = rvar_[name];
      tbl.assign(static_cast<size_t>(W_), std::vector<int>(static_cast<size_t>(D_ * D_)));
      for (int ww = 0; ww < W_; ++ww)
        for (int p = 0; p < D_ * D_; ++p) {
          int lit = sat::pos(s_.new_var());
          tbl[static_cast<size_t>(ww)][static_cast<size_t>(p)] = lit;
          if (expanding_) {
            s_.add_binary(sat::lit_negate(lit), dom_lit(ww, p / D_));
            s_.add_binary(sat::lit_negate(lit), dom_lit(ww, p % D_));
          }
        }
      it = rvar_.find(name);
    }
    return it->second[static_cast<size_t>(w)][static_cast<size_t>(d * D_ + e)];
  }

  // Literal meaning "d is in the extension of c at w".
  int xlit(Concept c, int w, int d) {
    auto key = std::make_pair(c.id, w);
    auto it = x_.find(key);
    if (it != x_.end() && it->second[static_cast<size_t>(d)] != 0) return it->second[static_cast<size_t>(d)];
    if (it == x_.end()) it = x_.emplace(key, std::vector<int>(static_cast<size_t>(D_), 0)).first;

    int lit = 0;
    switch (c.kind()) {
      case Kind::Name:
        lit = concept_bit(c.symbol(), w, d);
        break;
      case Kind::NomInd:
        lit = ind_.at(c.symbol())[static_cast<size_t>(w)][static_cast<size_t>(d)];
        break;
      case Kind::NomIota: {
        std::vector<int> conj{xlit(c.child(), w, d)};
        for (int e = 0; e < D_; ++e)
          if (e != d) conj.push_back(sat::lit_negate(xlit(c.child(), w, e)));
        lit = sat::pos(s_.def_and(conj));
        break;
      }
      case Kind::Not:
        lit = sat::pos(s_.def_and({dom_lit(w, d), sat::lit_negate(xlit(c.child(), w, d))}));
        break;
      case Kind::And:
        lit = sat::pos(s_.def_and({xlit(c.left(), w, d), xlit(c.right(), w, d)}));
        break;
      case Kind::ExistsRole: {
        std::vector<int> alts;
        for (int e = 0; e < D_; ++e)
          alts.push_back(sat::pos(s_.def_and({role_bit(c.symbol(), w, d, e), xlit(c.child(), w, e)})));
        lit = sat::pos(s_.def_or(alts));
        break;
      }
      case Kind::ExistsU: {
        std::vector<int> alts;
        for (int e = 0; e < D_; ++e) alts.push_back(xlit(c.child(), w, e));
        int some = sat::pos(s_.def_or(alts));
        lit = expanding_ ? sat::pos(s_.def_and({dom_lit(w, d), some})) : some;
        break;
      }
      case Kind::ExistsNeq: {
        std::vector<int> alts;
        for (int e = 0; e < D_; ++e)
          if (e != d) alts.push_back(xlit(c.child(), w, e));
        int some = alts.empty() ? false_lit() : sat::pos(s_.def_or(alts));
        lit = sat::pos(s_.def_and({dom_lit(w, d), some}));
        break;
      }
      case Kind::ExistsEq1: {
        std::vector<int> ones;
        for (int e = 0; e < D_; ++e) {
          std::vector<int> conj{xlit(c.child(), w, e)};
          for (int f = 0; f < D_; ++f)
            if (f != e) conj.push_back(sat::lit_negate(xlit(c.child(), w, f)));
          ones.push_back(sat::pos(s_.def_and(conj)));
        }
        int one = sat::pos(s_.def_or(ones));
        lit = sat::pos(s_.def_and({dom_lit(w, d), one}));
        break;
      }
      case Kind::Dia: {
        int i = c.modality();
        std::vector<int> alts;
        for (int v = 0; v < W_; ++v) {
          int el = edge_lit(i, w, v);
          if (el == false_lit()) continue;
          alts.push_back(sat::pos(s_.def_and({el, xlit(c.child(), v, d)})));
        }
        int some = alts.empty() ? false_lit() : sat::pos(s_.def_or(alts));
        lit = expanding_ ? sat::pos(s_.def_and({dom_lit(w, d), some})) : some;
        break;
      }
    }
    x_[key][static_cast<size_t>(d)] = lit;
    return lit;
  }

  // In LTLInfinitePrefix mode, truths about instant t are only meaningful
  // when the probe depth stays inside the prefix: t + md <= L.
  bool instant_usable(int t, int md) const {
    if (bounds_.frame_class.tag != FrameClassTag::LTLInfinitePrefix) return true;
    return t + md <= W_ - 1;
  }

  void build_constraints() {
    for (const CI& ci : onto_.cis) {
      int md = modal_depth(ci);
      for (int w = 0; w < W_; ++w) {
        if (!instant_usable(w, md)) continue;
        for (int d = 0; d < D_; ++d)
          s_.add_binary(sat::lit_negate(xlit(ci.lhs, w, d)), xlit(ci.rhs, w, d));
      }
    }
    std::vector<int> goal_lits;
    int gmd = modal_depth(goal_);
    for (int w = 0; w < W_; ++w) {
      if (!instant_usable(w, gmd)) continue;
      for (int d = 0; d < D_; ++d) goal_lits.push_back(xlit(goal_, w, d));
    }
    s_.add_clause(goal_lits);
  }

  Concept goal_;
  const Ontology& onto_;
  const Signature& sig_;
  const ModelBounds& bounds_;
  int W_, D_, nrel_ = 1;
  bool expanding_ = false;
  Solver s_;
  int true_lit_ = 0;
  std::vector<std::vector<std::vector<int>>> edge_;
  std::vector<std::vector<int>> dom_;
  std::map<std::string, std::vector<std::vector<int>>> cvar_;
  std::map<std::string, std::vector<std::vector<int>>> rvar_;
  std::map<std::string, std::vector<std::vector<int>>> ind_;
  std::map<std::pair<ConceptId, int>, std::vector<int>> x_;
};

Interpretation BoundedModelEncoder::decode() const {
  Interpretation m;
  m.frame = Frame(W_, nrel_);
  auto lit_val = [&](int lit) {
    bool v = s_.model_value(sat::lit_var(lit));
    return sat::lit_sign(lit) ? v : !v;
  };
  for (int i = 1; i <= nrel_; ++i)
    for (int w = 0; w < W_; ++w)
      for (int v = 0; v < W_; ++v)
        if (lit_val(edge_lit(i, w, v))) m.frame.add_edge(i, w, v);
  m.pool_size = D_;
  m.domain.assign(static_cast<size_t>(W_), 0);
  for (int w = 0; w < W_; ++w)
    for (int d = 0; d < D_; ++d)
      if (lit_val(dom_lit(w, d))) m.domain[static_cast<size_t>(w)] |= (1u << d);
  for (const auto& [name, tbl] : cvar_) {
    auto& ext = m.concept_ext[name];
    ext.assign(static_cast<size_t>(W_), 0);
    for (int w = 0; w < W_; ++w)
      for (int d = 0; d < D_; ++d)
        if (lit_val(tbl[static_cast<size_t>(w)][static_cast<size_t>(d)])) ext[static_cast<size_t>(w)] |= (1u << d);
  }
  for (const auto& [name, tbl] : rvar_) {
    auto& ext = m.role_ext[name];
    ext.assign(static_cast<size_t>(W_), std::vector<std::uint32_t>(static_cast<size_t>(D_), 0));
    for (int w = 0; w < W_; ++w)
      for (int p = 0; p < D_ * D_; ++p)
        if (lit_val(tbl[static_cast<size_t>(w)][static_cast<size_t>(p)]))
          ext[static_cast<size_t>(w)][static_cast<size_t>(p / D_)] |= (1u << (p % D_));
  }
  for (const auto& [name, tbl] : ind_) {
    auto& vals = m.individuals[name];
    vals.assign(static_cast<size_t>(W_), -1);
    for (int w = 0; w < W_; ++w)
      for (int d = 0; d < D_; ++d)
        if (lit_val(tbl[static_cast<size_t>(w)][static_cast<size_t>(d)])) vals[static_cast<size_t>(w)] = d;
  }
  return m;
}

void check_prefix_fragment(Concept goal, const Ontology& onto, const ModelBounds& bounds) {
  if (bounds.frame_class.tag != FrameClassTag::LTLInfinitePrefix) return;
  std::set<Concept> subs = subconcepts(goal);
  std::set<Concept> os = subconcepts(onto);
  subs.insert(os.begin(), os.end());
  for (Concept c : subs)
    if (c.kind() == Kind::Dia && c.modality() == 2)
      throw FragmentError(
          "the infinite-prefix oracle supports the next-only fragment; 'dia2'/'F' found");
  if (bounds.frame_class.fixed_ltl_length < modal_depth(goal))
    throw FragmentError("goal modal depth exceeds the infinite-prefix length");
}

}  // namespace

OracleResult oracle_sat(Concept goal, const Ontology& onto, const ModelBounds& bounds,
                        const OracleOptions& opts) {
  Signature sig = signature_of(goal);
  sig.merge(signature_of(onto));
  check_prefix_fragment(goal, onto, bounds);
  std::int64_t budget = env_work_cap(opts.work_cap);

  std::vector<int> world_sizes;
  if (bounds.frame_class.fixed_ltl_length >= 0) {
    world_sizes.push_back(bounds.frame_class.fixed_ltl_length + 1);
  } else {
    for (int w = 1; w <= bounds.max_worlds; ++w) world_sizes.push_back(w);
  }

  OracleResult res;
  res.bounds = bounds;
  for (int W : world_sizes) {
    std::vector<int> domain_sizes;
    if (bounds.domain_mode == DomainMode::Expanding) {
      domain_sizes.push_back(bounds.max_domain);
    } else {
      for (int d = 1; d <= bounds.max_domain; ++d) domain_sizes.push_back(d);
    }
    for (int D : domain_sizes) {
      BoundedModelEncoder enc(goal, onto, sig, bounds, W, D);
      sat::SolveResult r = enc.solve(budget);
      if (r == sat::SolveResult::Capped)
        throw ResourceError("oracle work cap exceeded at " + std::to_string(W) + " worlds, " +
                            std::to_string(D) + " elements");
      if (r == sat::SolveResult::Sat) {
        res.verdict = OracleVerdict::Sat;
        res.witness = enc.decode();
        return res;
      }
    }
  }
  res.verdict = OracleVerdict::UnsatUpToBounds;
  return res;
}

OracleResult oracle_sat(Concept goal, const ModelBounds& bounds, const OracleOptions& opts) {
  Ontology empty;
  empty.modality_count = bounds.frame_class.base_modalities;
  return oracle_sat(goal, empty, bounds, opts);
}

}  // namespace freedl
