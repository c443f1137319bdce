#include "freedl/counting.hpp"

#include <algorithm>
#include <functional>

#include "freedl/errors.hpp"
#include "freedl/printer.hpp"
#include "freedl/syntax.hpp"

namespace freedl {

std::uint32_t diff_extension(const Interpretation& m, int w, Concept c) {
  if (!is_mldiff(c)) throw FragmentError("diff_extension expects a Diff-fragment concept");
  return extension(m, w, c);
}

Concept quasistate_description(const TypeUniverse& u, const std::vector<int>& type_indices) {
  if (type_indices.empty()) throw FragmentError("quasistates are non-empty");
  std::vector<int> ts = type_indices;
  std::sort(ts.begin(), ts.end());
  std::vector<Concept> tcons;
  for (int t : ts) tcons.push_back(u.type_concept(t));
  std::vector<Concept> parts{make_forall_u(make_or_all(tcons))};
  for (Concept t : tcons) parts.push_back(make_exists_u(t));
  return make_and_all(parts);
}

namespace {

// some=1 u. C is definable from the elsewhere quantifier; rewrite it away so
// the witness-nominal replacement only deals with some!=.
Concept expand_eq1(Concept c) {
  switch (c.kind()) {
    case Kind::Name:
    case Kind::NomInd:
      return c;
    case Kind::NomIota:
      return make_iota(expand_eq1(c.child()));
    case Kind::Not:
      return make_not(expand_eq1(c.child()));
    case Kind::And:
      return make_and(expand_eq1(c.left()), expand_eq1(c.right()));
    case Kind::ExistsRole:
      return make_exists(c.symbol(), expand_eq1(c.child()));
    case Kind::ExistsU:
      return make_exists_u(expand_eq1(c.child()));
    case Kind::ExistsNeq:
      return make_exists_neq_u(expand_eq1(c.child()));
    case Kind::ExistsEq1: {
      Concept b = expand_eq1(c.child());
      return make_exists_u(make_and(b, make_not(make_exists_neq_u(b))));
    }
    case Kind::Dia:
      return make_dia(c.modality(), expand_eq1(c.child()));
  }
  return c;
}

// The witness-nominal replacement for some!= u. B with B a concept name.
Concept dagger(Concept b, const std::string& ab) {
  Concept nom = make_nominal(ab);
  return make_and(make_exists_u(b),
                  make_implies(nom, make_exists_u(make_and(make_not(nom), b))));
}

Concept witness_ci_rhs(Concept b, const std::string& ab) {
  return make_exists_u(make_and(make_nominal(ab), b));
}

std::vector<Concept> neq_bodies(Concept c) {
  std::vector<Concept> out;
  for (Concept s : sorted(subconcepts(c)))
    if (s.kind() == Kind::ExistsNeq) out.push_back(s.child());
  return out;
}

}  // namespace

ReductionResult mldiff_to_mlalcou_ontology(const Ontology& o) {
  if (!is_mldiff(o)) throw FragmentError("mldiff_to_mlalcou expects Diff-fragment input");
  ReductionResult res;
  Ontology work;
  work.modality_count = o.modality_count;
  for (const CI& ci : o.cis) work.cis.push_back(CI{expand_eq1(ci.lhs), expand_eq1(ci.rhs)});

  FreshNamer fn(signature_of(work));
  // Surrogate non-name elsewhere bodies first (the fragment's normal form).
  for (;;) {
    Concept target;
    bool found = false;
    for (const CI& ci : work.cis) {
      for (Concept s : sorted(subconcepts(ci.lhs))) {
        if (s.kind() == Kind::ExistsNeq && s.child().kind() != Kind::Name) {
          // innermost first
          for (Concept inner : sorted(subconcepts(s.child())))
            if (inner.kind() == Kind::ExistsNeq && inner.child().kind() != Kind::Name) s = inner;
          target = s.child();
          found = true;
          break;
        }
      }
      if (found) break;
      for (Concept s : sorted(subconcepts(ci.rhs))) {
        if (s.kind() == Kind::ExistsNeq && s.child().kind() != Kind::Name) {
          for (Concept inner : sorted(subconcepts(s.child())))
            if (inner.kind() == Kind::ExistsNeq && inner.child().kind() != Kind::Name) s = inner;
          target = s.child();
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
    std::string name = fn.numbered_concept("A");
    res.fresh[name] = print_concept(target);
    Concept a = make_name(name);
    std::vector<CI> next;
    for (const CI& ci : work.cis)
      next.push_back(CI{substitute(ci.lhs, target, a), substitute(ci.rhs, target, a)});
    next.push_back(CI{a, target});
    next.push_back(CI{target, a});
    work.cis = std::move(next);
  }

  // Replace every some!= u. B and collect the witness CIs per body.
  std::set<std::string> bodies;
  for (const CI& ci : work.cis)
    for (Concept s : subconcepts(ci.lhs)) {
      if (s.kind() == Kind::ExistsNeq) bodies.insert(s.child().symbol());
    }
  for (const CI& ci : work.cis)
    for (Concept s : subconcepts(ci.rhs))
      if (s.kind() == Kind::ExistsNeq) bodies.insert(s.child().symbol());

  Ontology out;
  out.modality_count = work.modality_count;
  std::map<std::string, std::string> witness;
  for (const std::string& bn : bodies) {
    std::string ab = fn.individual_name("a_" + bn);
    res.fresh[ab] = bn;
    witness[bn] = ab;
  }
  for (const CI& ci : work.cis) {
    Concept l = ci.lhs, r = ci.rhs;
    for (const auto& [bn, ab] : witness) {
      Concept pat = make_exists_neq_u(make_name(bn));
      Concept rep = dagger(make_name(bn), ab);
      l = substitute(l, pat, rep);
      r = substitute(r, pat, rep);
    }
    out.cis.push_back(CI{l, r});
  }
  for (const auto& [bn, ab] : witness)
    out.cis.push_back(CI{make_name(bn), witness_ci_rhs(make_name(bn), ab)});
  res.ontology_out = out;
  res.notes.push_back("rda: requires plain (non-RDA) interpretations");
  return res;
}

ReductionResult mldiff_to_mlalcou_concept(Concept d) {
  if (!is_mldiff(d)) throw FragmentError("mldiff_to_mlalcou expects Diff-fragment input");
  ReductionResult res;
  Concept work = expand_eq1(d);
  FreshNamer fn(signature_of(work));

  // Innermost-first surrogation of non-name elsewhere bodies, tracking the
  // paths of the some!= occurrences for the witness conjunct prefixes.
  std::vector<Concept> schema;  // accumulated box^pi only u.(C <=> A) conjuncts
  for (;;) {
    Concept target;
    bool found = false;
    std::function<void(Concept)> find_innermost = [&](Concept c) {
      if (found) return;
      switch (c.kind()) {
        case Kind::Name:
        case Kind::NomInd:
          return;
        case Kind::And:
          find_innermost(c.left());
          find_innermost(c.right());
          return;
        default:
          find_innermost(c.child());
          break;
      }
      if (found) return;
      if (c.kind() == Kind::ExistsNeq && c.child().kind() != Kind::Name) {
        target = c.child();
        found = true;
      }
    };
    find_innermost(work);
    if (!found) break;
    std::string name = fn.numbered_concept("A");
    res.fresh[name] = print_concept(target);
    Concept a = make_name(name);
    for (const ModalPath& p : relevant_paths(work, target))
      schema.push_back(box_path(p, make_forall_u(make_iff(target, a))));
    work = substitute(work, target, a);
  }

  std::vector<Concept> parts;
  std::vector<Concept> wts;
  Concept replaced = work;
  for (Concept body : neq_bodies(work)) {
    std::string ab = fn.individual_name("a_" + body.symbol());
    res.fresh[ab] = body.symbol();
    Concept pat = make_exists_neq_u(body);
    for (const ModalPath& p : relevant_paths(work, pat))
      wts.push_back(box_path(p, make_forall_u(make_implies(body, witness_ci_rhs(body, ab)))));
    replaced = substitute(replaced, pat, dagger(body, ab));
  }
  parts.push_back(replaced);
  parts.insert(parts.end(), schema.begin(), schema.end());
  parts.insert(parts.end(), wts.begin(), wts.end());
  res.concept_out = make_and_all(parts);
  res.notes.push_back("rda: requires plain (non-RDA) interpretations");
  return res;
}

CountingBridge mlalcou_to_mldiff(const std::string& goal, const Ontology& o, int closure_cap,
                                 const DecideLimits& limits) {
  if (!is_iota_free(o)) throw FragmentError("mlalcou_to_mldiff expects iota-free input");
  if (!is_diff_free(o)) throw FragmentError("input already uses counting quantifiers");
  std::vector<Concept> seeds{make_name(goal)};
  for (const CI& ci : o.cis) {
    seeds.push_back(ci.lhs);
    seeds.push_back(ci.rhs);
  }
  {
    std::set<Concept> cl;
    for (Concept s : seeds) {
      auto c = closure(s);
      cl.insert(c.begin(), c.end());
    }
    if (static_cast<int>(cl.size()) > closure_cap)
      throw ResourceError("CLOSURE_TOO_LARGE: " + std::to_string(cl.size()) + " members, cap " +
                          std::to_string(closure_cap));
  }
  TypeUniverse u = TypeUniverse::build(seeds, false, closure_cap, 1 << 14);
  if (u.type_count() > 16)
    throw ResourceError("CLOSURE_TOO_LARGE: " + std::to_string(u.type_count()) + " types");

  CountingBridge out;
  out.type_count = u.type_count();
  Signature sig = signature_of(o);
  sig.concept_names.insert(goal);
  FreshNamer fn(sig);

  // The sharp map: outermost nominals and role restrictions become fresh
  // concept names (shared per replaced concept).
  std::map<ConceptId, Concept> sharp_names;
  auto sharp_name_for = [&](Concept c) {
    auto it = sharp_names.find(c.id);
    if (it != sharp_names.end()) return it->second;
    std::string n = fn.numbered_concept("S");
    out.fresh[n] = print_concept(c);
    Concept a = make_name(n);
    sharp_names.emplace(c.id, a);
    return a;
  };
  std::function<Concept(Concept)> sharp = [&](Concept c) -> Concept {
    switch (c.kind()) {
      case Kind::NomInd:
      case Kind::ExistsRole:
        return sharp_name_for(c);
      case Kind::Name:
        return c;
      case Kind::Not:
        return make_not(sharp(c.child()));
      case Kind::And:
        return make_and(sharp(c.left()), sharp(c.right()));
      case Kind::ExistsU:
        return make_exists_u(sharp(c.child()));
      case Kind::Dia:
        return make_dia(c.modality(), sharp(c.child()));
      default:
        throw FragmentError("unexpected constructor under the sharp map");
    }
  };

  // A quasistate's abstracted description is satisfiable exactly when the
  // set passes the single-world coherence conditions over the base universe:
  // each element realizes one member type (pinning every abstracted closure
  // member), so nominals may sit in at most one type, role witnesses must be
  // found inside the set, and universal-role members must match the set.
  // This is the type-elimination criterion evaluated directly; running the
  // generic eliminator on the assembled description would rebuild the same
  // information from a far larger closure.
  (void)limits;
  auto quasistate_satisfiable = [&](const std::vector<int>& ts) {
    for (const auto& nm : u.nominal_members()) {
      int cnt = 0;
      for (int t : ts)
        if (u.has(t, nm.self)) ++cnt;
      if (cnt > 1) return false;
    }
    for (int t : ts) {
      for (const auto& rm : u.role_members()) {
        if (!u.has(t, rm.self)) continue;
        bool found = false;
        for (int t2 : ts)
          if (u.role_witness_ok(rm, t, t2)) { found = true; break; }
        if (!found) return false;
      }
      for (const auto& um : u.u_members()) {
        bool some = false;
        for (int t2 : ts)
          if (u.has(t2, um.body)) { some = true; break; }
        if (u.has(t, um.self) != some) return false;
      }
    }
    return true;
  };

  std::vector<std::vector<int>> sat_quasistates;
  std::int64_t combos = 1ll << u.type_count();
  for (std::int64_t mask = 1; mask < combos; ++mask) {
    std::vector<int> ts;
    for (int j = 0; j < u.type_count(); ++j)
      if ((mask >> j) & 1ll) ts.push_back(j);
    if (quasistate_satisfiable(ts)) sat_quasistates.push_back(ts);
  }
  out.quasistate_count = static_cast<int>(sat_quasistates.size());

  // O' = sharp(O) + exactly-one CIs for replaced nominals + the quasistate
  // cover CI.
  Ontology odiff;
  odiff.modality_count = o.modality_count;
  for (const CI& ci : o.cis) odiff.cis.push_back(CI{sharp(ci.lhs), sharp(ci.rhs)});
  for (const std::string& a :
       std::vector<std::string>(sig.individual_names.begin(), sig.individual_names.end()))
    odiff.cis.push_back(CI{make_top(), make_exists_eq1_u(sharp(make_nominal(a)))});
  std::vector<Concept> covers;
  for (const auto& ts : sat_quasistates) {
    std::vector<Concept> tcons;
    for (int t : ts) tcons.push_back(sharp(u.type_concept(t)));
    std::vector<Concept> parts{make_forall_u(make_or_all(tcons))};
    for (Concept tc : tcons) parts.push_back(make_exists_u(tc));
    covers.push_back(make_and_all(parts));
  }
  odiff.cis.push_back(CI{make_top(), make_or_all(covers)});
  out.odiff = odiff;

  int goal_idx = u.index_of(make_name(goal));
  for (int t = 0; t < u.type_count(); ++t)
    if (goal_idx >= 0 && u.has(t, goal_idx)) out.candidate_types.push_back(sharp(u.type_concept(t)));
  return out;
}

}  // namespace freedl
