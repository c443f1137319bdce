#include "freedl/reductions.hpp"

#include <algorithm>
#include <functional>

#include "freedl/printer.hpp"

namespace freedl {

std::string FreshNamer::concept_name(const std::string& base) {
  std::string n = fresh_name(base, sig_);
  sig_.concept_names.insert(n);
  return n;
}
std::string FreshNamer::role_name(const std::string& base) {
  std::string n = fresh_name(base, sig_);
  sig_.role_names.insert(n);
  return n;
}
std::string FreshNamer::individual_name(const std::string& base) {
  std::string n = fresh_name(base, sig_);
  sig_.individual_names.insert(n);
  return n;
}
std::string FreshNamer::numbered_concept(const std::string& base) {
  int& k = counters_[base];
  for (;;) {
    std::string cand = base + std::to_string(++k);
    if (!sig_.contains(cand) && cand != kReservedBotName) {
      sig_.concept_names.insert(cand);
      return cand;
    }
  }
}

namespace {
std::vector<std::string> sorted_individuals(const Signature& sig) {
  return {sig.individual_names.begin(), sig.individual_names.end()};
}
}  // namespace

// --- RDA ---------------------------------------------------------------------

ReductionResult enforce_rda_ontology(const Ontology& o) {
  ReductionResult res;
  Ontology out = o;
  for (const std::string& a : sorted_individuals(signature_of(o))) {
    Concept nom = make_nominal(a);
    for (int i = 1; i <= o.modality_count; ++i)
      out.cis.push_back(CI{nom, make_box(i, nom)});
  }
  res.ontology_out = out;
  res.notes.push_back("rda: in=required, out=plain");
  return res;
}

Concept enforce_rda_concept_total(Concept c, DesignationMode mode) {
  if (mode != DesignationMode::Total)
    throw ModeError(
        "concept-level RDA enforcement is only sound for total designation; "
        "partial interpretations admit counterexamples");
  std::vector<Concept> parts{c};
  for (const std::string& a : sorted_individuals(signature_of(c))) {
    Concept nom = make_nominal(a);
    for (const ModalPath& p : prefix_closure(relevant_paths(c, nom))) {
      if (p.empty()) continue;
      ModalPath prefix(p.begin(), p.end() - 1);
      int i = p.back();
      parts.push_back(box_path(prefix, make_forall_u(make_implies(nom, make_box(i, nom)))));
    }
  }
  return make_and_all(parts);
}

// --- total <-> partial ---------------------------------------------------------

ReductionResult totalize_ontology(const Ontology& o) {
  ReductionResult res;
  Ontology out = o;
  for (const std::string& a : sorted_individuals(signature_of(o)))
    out.cis.push_back(CI{make_top(), make_exists_u(make_nominal(a))});
  res.ontology_out = out;
  res.notes.push_back("designation: in=total, out=partial");
  return res;
}

ReductionResult totalize_concept(Concept c) {
  ReductionResult res;
  std::vector<Concept> parts{c};
  for (const std::string& a : sorted_individuals(signature_of(c))) {
    Concept nom = make_nominal(a);
    for (const ModalPath& p : relevant_paths(c, nom))
      parts.push_back(box_path(p, make_exists_u(nom)));
  }
  res.concept_out = make_and_all(parts);
  res.notes.push_back("designation: in=total, out=partial");
  return res;
}

ReductionResult partialize_ontology(const Ontology& o) {
  ReductionResult res;
  FreshNamer fn(signature_of(o));
  Ontology out;
  out.modality_count = o.modality_count;
  std::vector<std::pair<std::string, std::string>> guards;  // (N_a, a)
  std::map<std::string, Concept> repl;
  for (const std::string& a : sorted_individuals(signature_of(o))) {
    std::string na = fn.concept_name("N_" + a);
    res.fresh[na] = a;
    guards.emplace_back(na, a);
    repl[a] = make_name(na);
  }
  for (const CI& ci : o.cis) {
    Concept l = ci.lhs, r = ci.rhs;
    for (const auto& [a, n] : repl) {
      l = substitute(l, make_nominal(a), n);
      r = substitute(r, make_nominal(a), n);
    }
    out.cis.push_back(CI{l, r});
  }
  for (const auto& [na, a] : guards)
    out.cis.push_back(CI{make_name(na), make_nominal(a)});
  res.ontology_out = out;
  res.notes.push_back("designation: in=partial, out=total");
  return res;
}

ReductionResult partialize_concept(Concept c) {
  ReductionResult res;
  FreshNamer fn(signature_of(c));
  Concept body = c;
  std::vector<Concept> conjuncts;
  for (const std::string& a : sorted_individuals(signature_of(c))) {
    Concept nom = make_nominal(a);
    std::string na = fn.concept_name("N_" + a);
    res.fresh[na] = a;
    std::set<ModalPath> paths = relevant_paths(c, nom);
    body = substitute(body, nom, make_name(na));
    for (const ModalPath& p : paths)
      conjuncts.push_back(box_path(p, make_forall_u(make_implies(make_name(na), nom))));
  }
  std::vector<Concept> parts{body};
  parts.insert(parts.end(), conjuncts.begin(), conjuncts.end());
  res.concept_out = make_and_all(parts);
  res.notes.push_back("designation: in=partial, out=total");
  return res;
}

// --- normal forms ----------------------------------------------------------------

namespace {
// A single constructor applied to concept names only.
bool is_depth_one(Concept c) {
  switch (c.kind()) {
    case Kind::Name:
      return false;
    case Kind::NomInd:
      return true;
    case Kind::NomIota:
      return c.child().kind() == Kind::Name;
    case Kind::Not:
    case Kind::ExistsRole:
    case Kind::ExistsU:
    case Kind::ExistsNeq:
    case Kind::ExistsEq1:
    case Kind::Dia:
      return c.child().kind() == Kind::Name;
    case Kind::And:
      return c.left().kind() == Kind::Name && c.right().kind() == Kind::Name;
  }
  return false;
}

// Innermost-leftmost non-name subconcept whose children are all names.
std::optional<Concept> find_surrogatable(Concept c) {
  if (c.kind() == Kind::Name) return std::nullopt;
  switch (c.kind()) {
    case Kind::And: {
      if (auto f = find_surrogatable(c.left())) return f;
      if (auto f = find_surrogatable(c.right())) return f;
      break;
    }
    case Kind::NomInd:
      break;
    default:
      if (auto f = find_surrogatable(c.child())) return f;
      break;
  }
  return c;  // children (if any) are all names
}
}  // namespace

bool is_normal_form_ci(const CI& ci) {
  bool l_name = ci.lhs.kind() == Kind::Name;
  bool r_name = ci.rhs.kind() == Kind::Name;
  if (l_name && r_name) return true;
  if (l_name) return is_depth_one(ci.rhs);
  if (r_name) return is_depth_one(ci.lhs);
  return false;
}

bool is_normal_form(const Ontology& o) {
  for (const CI& ci : o.cis)
    if (!is_normal_form_ci(ci)) return false;
  return true;
}

ReductionResult normalize_ontology(const Ontology& o) {
  ReductionResult res;
  FreshNamer fn(signature_of(o));
  std::vector<CI> cis = o.cis;
  std::vector<CI> defs;

  for (;;) {
    std::size_t idx = cis.size();
    for (std::size_t i = 0; i < cis.size(); ++i)
      if (!is_normal_form_ci(cis[i])) {
        idx = i;
        break;
      }
    if (idx == cis.size()) break;

    Concept target;
    if (auto f = find_surrogatable(cis[idx].lhs)) target = *f;
    else target = *find_surrogatable(cis[idx].rhs);

    std::string name = fn.numbered_concept("A");
    res.fresh[name] = print_concept(target);
    Concept a = make_name(name);
    for (CI& ci : cis) {
      ci.lhs = substitute(ci.lhs, target, a);
      ci.rhs = substitute(ci.rhs, target, a);
    }
    defs.push_back(CI{a, target});
    defs.push_back(CI{target, a});
  }

  Ontology out;
  out.modality_count = o.modality_count;
  out.cis = std::move(cis);
  out.cis.insert(out.cis.end(), defs.begin(), defs.end());
  res.ontology_out = out;
  return res;
}

Concept NormalFormConcept::to_concept() const {
  std::vector<Concept> parts{make_name(head)};
  for (const NormalFormStep& st : steps)
    for (const ModalPath& p : st.paths)
      parts.push_back(box_path(p, make_forall_u(make_iff(st.lhs, make_name(st.surrogate)))));
  return make_and_all(parts);
}

NormalFormConcept normalize_concept(Concept d) {
  NormalFormConcept nf;
  FreshNamer fn(signature_of(d));
  Concept main = d;
  while (main.kind() != Kind::Name) {
    Concept target = *find_surrogatable(main);
    std::string name = fn.numbered_concept("A");
    nf.fresh[name] = print_concept(target);
    std::set<ModalPath> paths = relevant_paths(main, target);
    main = substitute(main, target, make_name(name));
    NormalFormStep st;
    st.lhs = target;
    st.surrogate = name;
    st.paths.assign(paths.begin(), paths.end());
    nf.steps.push_back(std::move(st));
  }
  nf.head = main.symbol();
  return nf;
}

std::optional<NormalFormConcept> match_normal_form_concept(Concept c) {
  std::vector<Concept> parts;
  std::function<void(Concept)> flatten = [&](Concept x) {
    if (x.kind() == Kind::And) {
      flatten(x.left());
      flatten(x.right());
    } else {
      parts.push_back(x);
    }
  };
  flatten(c);
  if (parts.empty() || parts[0].kind() != Kind::Name) return std::nullopt;
  NormalFormConcept nf;
  nf.head = parts[0].symbol();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    ModalPath path;
    Concept cur = parts[i];
    while (auto bx = match_box(cur)) {
      path.push_back(bx->first);
      cur = bx->second;
    }
    auto body = match_forall_u(cur);
    if (!body) return std::nullopt;
    auto iff = match_iff(*body);
    if (!iff) return std::nullopt;
    if (iff->second.kind() != Kind::Name || !is_depth_one(iff->first)) return std::nullopt;
    if (!nf.steps.empty() && nf.steps.back().lhs == iff->first &&
        nf.steps.back().surrogate == iff->second.symbol()) {
      nf.steps.back().paths.push_back(path);
    } else {
      NormalFormStep st;
      st.lhs = iff->first;
      st.surrogate = iff->second.symbol();
      st.paths.push_back(path);
      nf.steps.push_back(std::move(st));
    }
  }
  return nf;
}

Concept surrogate_step(Concept d, Concept c, const std::string& surrogate) {
  Concept a = make_name(surrogate);
  std::vector<Concept> parts{substitute(d, c, a)};
  for (const ModalPath& p : relevant_paths(d, c))
    parts.push_back(box_path(p, make_forall_u(make_iff(c, a))));
  return make_and_all(parts);
}

// --- universal role ----------------------------------------------------------------

ReductionResult eliminate_universal_role(const Ontology& o) {
  if (!is_normal_form(o))
    throw NotNormalFormError("eliminate_universal_role expects a normal-form ontology");
  for (Concept c : subconcepts(o))
    if (c.kind() == Kind::ExistsNeq || c.kind() == Kind::ExistsEq1)
      throw FragmentError("counting quantifiers are outside the spy-point reduction");

  ReductionResult res;
  FreshNamer fn(signature_of(o));
  Ontology out;
  out.modality_count = o.modality_count;
  for (const CI& ci : o.cis) {
    bool pos = ci.lhs.kind() == Kind::Name && ci.rhs.kind() == Kind::ExistsU;
    bool neg = ci.lhs.kind() == Kind::ExistsU && ci.rhs.kind() == Kind::Name;
    if (pos) {
      std::string r = fn.role_name("r");
      res.fresh[r] = "u in " + print_ci(ci);
      out.cis.push_back(CI{ci.lhs, make_exists(r, ci.rhs.child())});
    } else if (neg) {
      std::string r = fn.role_name("r");
      std::string e = fn.individual_name("e");
      std::string a = fn.concept_name("A");
      res.fresh[r] = "spy role for " + print_ci(ci);
      res.fresh[e] = "spy point for " + print_ci(ci);
      res.fresh[a] = "spy marker for " + print_ci(ci);
      Concept spy = make_nominal(e);
      Concept marker = make_name(a);
      Concept b = ci.lhs.child();   // body of the universal restriction
      Concept bp = ci.rhs;          // the subsumer
      out.cis.push_back(CI{make_top(), make_exists(r, spy)});
      out.cis.push_back(CI{marker, spy});
      out.cis.push_back(CI{make_not(bp), make_exists(r, marker)});
      out.cis.push_back(CI{make_exists(r, marker), make_not(b)});
    } else {
      out.cis.push_back(ci);
    }
  }
  res.ontology_out = out;
  return res;
}

// --- nominals <-> definite descriptions ----------------------------------------------

namespace {
ReductionResult nominals_to_iota_impl(const Signature& sig,
                                      const std::function<void(const std::map<std::string, Concept>&,
                                                               ReductionResult&)>& emit) {
  ReductionResult res;
  FreshNamer fn(sig);
  std::map<std::string, Concept> repl;
  for (const std::string& a : sorted_individuals(sig)) {
    std::string na = fn.concept_name("N_" + a);
    res.fresh[na] = a;
    repl[a] = make_iota(make_name(na));
  }
  emit(repl, res);
  res.notes.push_back("fragment: out=iota, no nominals");
  return res;
}
}  // namespace

ReductionResult nominals_to_iota(const Ontology& o) {
  return nominals_to_iota_impl(signature_of(o), [&](const auto& repl, ReductionResult& res) {
    Ontology out;
    out.modality_count = o.modality_count;
    for (const CI& ci : o.cis) {
      Concept l = ci.lhs, r = ci.rhs;
      for (const auto& [a, t] : repl) {
        l = substitute(l, make_nominal(a), t);
        r = substitute(r, make_nominal(a), t);
      }
      out.cis.push_back(CI{l, r});
    }
    res.ontology_out = out;
  });
}

ReductionResult nominals_to_iota_concept(Concept c) {
  return nominals_to_iota_impl(signature_of(c), [&](const auto& repl, ReductionResult& res) {
    Concept out = c;
    for (const auto& [a, t] : repl) out = substitute(out, make_nominal(a), t);
    res.concept_out = out;
  });
}

namespace {
bool contains_deep_iota(Concept c, bool top_level_ok) {
  if (c.kind() == Kind::NomIota && !top_level_ok) return true;
  switch (c.kind()) {
    case Kind::Name:
    case Kind::NomInd:
      return false;
    case Kind::And:
      return contains_deep_iota(c.left(), false) || contains_deep_iota(c.right(), false);
    case Kind::NomIota:
      return contains_deep_iota(c.child(), false);
    default:
      return contains_deep_iota(c.child(), false);
  }
}

// The two Prop-11 replacement concepts for A_{iota B} == {iota B}.
Concept iota_lower(Concept b, const std::string& ab) {  // rhs of A [= B and {a_B}
  return make_and(b, make_nominal(ab));
}
Concept iota_upper(Concept b, const std::string& ab) {  // lhs of ... [= A
  return make_and(b, make_forall_u(make_implies(b, make_nominal(ab))));
}
}  // namespace

ReductionResult iota_to_nominals_ontology(const Ontology& o) {
  ReductionResult res;
  FreshNamer fn(signature_of(o));
  std::map<std::string, std::string> witness;  // concept name B -> a_B
  auto witness_for = [&](Concept b) {
    std::string bn = b.symbol();
    auto it = witness.find(bn);
    if (it != witness.end()) return it->second;
    std::string ab = fn.individual_name("a_" + bn);
    res.fresh[ab] = bn;
    witness[bn] = ab;
    return ab;
  };

  Ontology out;
  out.modality_count = o.modality_count;
  for (const CI& ci : o.cis) {
    bool l_iota = ci.lhs.kind() == Kind::NomIota;
    bool r_iota = ci.rhs.kind() == Kind::NomIota;
    if (r_iota && ci.lhs.kind() == Kind::Name) {
      Concept b = ci.rhs.child();
      if (b.kind() != Kind::Name)
        throw NotNormalFormError("definite descriptions must apply to concept names");
      if (contains_deep_iota(ci.lhs, false))
        throw NotNormalFormError("nested definite description");
      out.cis.push_back(CI{ci.lhs, iota_lower(b, witness_for(b))});
    } else if (l_iota && ci.rhs.kind() == Kind::Name) {
      Concept b = ci.lhs.child();
      if (b.kind() != Kind::Name)
        throw NotNormalFormError("definite descriptions must apply to concept names");
      out.cis.push_back(CI{iota_upper(b, witness_for(b)), ci.rhs});
    } else {
      if (contains_deep_iota(ci.lhs, false) || contains_deep_iota(ci.rhs, false))
        throw NotNormalFormError(
            "iota occurs outside A [= {iota B} / {iota B} [= A housing CIs");
      out.cis.push_back(ci);
    }
  }
  res.ontology_out = out;
  res.notes.push_back("designation: intended total mode (compose with totalize/partialize)");
  return res;
}

ReductionResult iota_to_nominals_concept(const NormalFormConcept& nf) {
  ReductionResult res;
  Signature sig;
  sig.concept_names.insert(nf.head);
  for (const NormalFormStep& st : nf.steps) {
    sig.merge(signature_of(st.lhs));
    sig.concept_names.insert(st.surrogate);
  }
  FreshNamer fn(sig);
  std::map<std::string, std::string> witness;
  auto witness_for = [&](Concept b) {
    std::string bn = b.symbol();
    auto it = witness.find(bn);
    if (it != witness.end()) return it->second;
    std::string ab = fn.individual_name("a_" + bn);
    res.fresh[ab] = bn;
    witness[bn] = ab;
    return ab;
  };

  std::vector<Concept> parts{make_name(nf.head)};
  for (const NormalFormStep& st : nf.steps) {
    Concept a = make_name(st.surrogate);
    if (st.lhs.kind() == Kind::NomIota) {
      Concept b = st.lhs.child();
      if (b.kind() != Kind::Name)
        throw NotNormalFormError("definite descriptions must apply to concept names");
      std::string ab = witness_for(b);
      for (const ModalPath& p : st.paths) {
        parts.push_back(box_path(p, make_forall_u(make_implies(a, iota_lower(b, ab)))));
        parts.push_back(box_path(p, make_forall_u(make_implies(iota_upper(b, ab), a))));
      }
    } else {
      for (const ModalPath& p : st.paths)
        parts.push_back(box_path(p, make_forall_u(make_iff(st.lhs, a))));
    }
  }
  res.concept_out = make_and_all(parts);
  res.notes.push_back("designation: intended total mode (compose with totalize/partialize)");
  return res;
}

// --- expanding -> constant ------------------------------------------------------------

namespace {
Concept relativize(Concept c, Concept ex) {
  switch (c.kind()) {
    case Kind::Name:
      return c;
    case Kind::NomInd:
      return make_and(ex, c);
    case Kind::NomIota:
      throw FragmentError("relativize_to_constant expects iota-free input (eliminate first)");
    case Kind::Not:
      return make_not(relativize(c.child(), ex));
    case Kind::And:
      return make_and(relativize(c.left(), ex), relativize(c.right(), ex));
    case Kind::ExistsRole:
      return make_exists(c.symbol(), make_and(ex, relativize(c.child(), ex)));
    case Kind::ExistsU:
      return make_exists_u(make_and(ex, relativize(c.child(), ex)));
    case Kind::ExistsNeq:
    case Kind::ExistsEq1:
      throw FragmentError("relativize_to_constant does not cover counting quantifiers");
    case Kind::Dia:
      return make_dia(c.modality(), relativize(c.child(), ex));
  }
  return c;
}
}  // namespace

ReductionResult relativize_to_constant(const SatBundle& bundle) {
  ReductionResult res;
  Signature sig = signature_of(bundle.goal);
  sig.merge(signature_of(bundle.ontology));
  FreshNamer fn(sig);
  std::string exn = fn.concept_name("Ex");
  res.fresh[exn] = "existing-domain marker";
  Concept ex = make_name(exn);
  int n = bundle.ontology.modality_count;

  Ontology onto_out;
  onto_out.modality_count = n;
  Concept goal_out = make_and(ex, relativize(bundle.goal, ex));
  if (!bundle.ontology.cis.empty()) {
    for (const CI& ci : bundle.ontology.cis)
      onto_out.cis.push_back(CI{relativize(ci.lhs, ex), relativize(ci.rhs, ex)});
    for (int i = 1; i <= n; ++i) onto_out.cis.push_back(CI{ex, make_box(i, ex)});
  } else {
    std::vector<Concept> parts{goal_out};
    for (const ModalPath& p : all_dia_paths(bundle.goal))
      for (int i = 1; i <= n; ++i)
        parts.push_back(box_path(p, make_forall_u(make_implies(ex, make_box(i, ex)))));
    goal_out = make_and_all(parts);
  }
  res.concept_out = goal_out;
  res.ontology_out = onto_out;
  res.notes.push_back("domains: in=expanding, out=constant");
  return res;
}

// --- temporal ELO tricks -------------------------------------------------------------

namespace {
// Negation-, disjunction- and counting-free, with the exact top tree treated
// as an atom (its encoding uses the reserved bottom conjunction internally).
bool elo_clean(Concept c) {
  if (is_top(c)) return true;
  if (is_bot(c)) return false;
  switch (c.kind()) {
    case Kind::Not:
    case Kind::ExistsNeq:
    case Kind::ExistsEq1:
      return false;
    case Kind::Name:
    case Kind::NomInd:
      return true;
    case Kind::And:
      return elo_clean(c.left()) && elo_clean(c.right());
    default:
      return elo_clean(c.child());
  }
}

// Does bot occur other than as the whole concept, treating top as an atom?
bool bot_occurs_inside(Concept c) {
  if (is_top(c)) return false;
  switch (c.kind()) {
    case Kind::Name:
    case Kind::NomInd:
      return false;
    case Kind::And:
      return is_bot(c.left()) || is_bot(c.right()) || bot_occurs_inside(c.left()) ||
             bot_occurs_inside(c.right());
    default:
      return is_bot(c.child()) || bot_occurs_inside(c.child());
  }
}
}  // namespace

ReductionResult eliminate_disjunction_elo(const Ontology& o, FlowKind flow) {
  ReductionResult res;
  FreshNamer fn(signature_of(o));
  Ontology out;
  out.modality_count = std::max(o.modality_count, 2);
  const bool finite = flow == FlowKind::Finite;
  Concept guard = make_dia(2, make_dia(2, make_top()));
  auto guarded = [&](Concept lhs) { return finite ? make_and(guard, lhs) : lhs; };

  for (const CI& ci : o.cis) {
    // top [= B1 or B2, possibly coming from not B1 [= B2.
    std::optional<std::pair<Concept, Concept>> disj;
    if (is_top(ci.lhs)) disj = match_or(ci.rhs);
    if (!disj && ci.lhs.kind() == Kind::Not && ci.lhs.child().kind() == Kind::Name &&
        ci.rhs.kind() == Kind::Name)
      disj = std::make_pair(ci.lhs.child(), ci.rhs);
    if (disj) {
      if (disj->first.kind() != Kind::Name || disj->second.kind() != Kind::Name)
        throw ShapeError("disjunction elimination expects top [= B1 or B2 over names");
      std::string q = fn.role_name("q");
      std::string x1 = fn.numbered_concept("X");
      std::string x2 = fn.numbered_concept("X");
      res.fresh[q] = "order probe for " + print_ci(ci);
      res.fresh[x1] = "first disjunct marker";
      res.fresh[x2] = "second disjunct marker";
      Concept X1 = make_name(x1), X2 = make_name(x2);
      Concept b1 = disj->first, b2 = disj->second;
      out.cis.push_back(
          CI{guarded(make_top()), make_exists(q, make_and(make_dia(2, X1), make_dia(2, X2)))});
      out.cis.push_back(CI{make_exists(q, make_dia(2, make_and(X1, make_dia(2, X2)))), b1});
      out.cis.push_back(CI{make_exists(q, make_dia(2, make_and(X1, X2))), b1});
      out.cis.push_back(CI{make_exists(q, make_dia(2, make_and(X2, make_dia(2, X1)))), b2});
      continue;
    }
    // B1 [= not B2 becomes B1 and B2 [= bot.
    if (ci.rhs.kind() == Kind::Not && ci.rhs.child().kind() == Kind::Name &&
        ci.lhs.kind() == Kind::Name) {
      out.cis.push_back(CI{guarded(make_and(ci.lhs, ci.rhs.child())), make_bot()});
      continue;
    }
    bool bot_rhs = is_bot(ci.rhs);
    if (!(elo_clean(ci.lhs) && (bot_rhs || elo_clean(ci.rhs))))
      throw ShapeError("unsupported CI shape for the ELO disjunction elimination: " +
                       print_ci(ci));
    out.cis.push_back(CI{guarded(ci.lhs), ci.rhs});
  }
  res.ontology_out = out;
  if (finite) res.notes.push_back("flow: finite (CIs guarded by dia2 dia2 top)");
  return res;
}

ReductionResult eliminate_bot_elo(const Ontology& o) {
  ReductionResult res;
  FreshNamer fn(signature_of(o));
  std::string ln = fn.concept_name("L");
  res.fresh[ln] = "bottom sink";
  Concept l = make_name(ln);

  Ontology out;
  out.modality_count = std::max(o.modality_count, 2);
  for (const CI& ci : o.cis) {
    if (is_bot(ci.lhs) || bot_occurs_inside(ci.lhs))
      throw ShapeError("bot may only occur as a whole right-hand side");
    Concept rhs = ci.rhs;
    if (is_bot(rhs)) rhs = l;
    else if (bot_occurs_inside(rhs))
      throw ShapeError("bot may only occur as a whole right-hand side");
    out.cis.push_back(CI{ci.lhs, rhs});
  }
  Signature sig = signature_of(out);
  for (const std::string& s : sig.role_names)
    out.cis.push_back(CI{make_exists(s, l), l});
  out.cis.push_back(CI{make_dia(2, l), l});
  res.ontology_out = out;
  return res;
}

}  // namespace freedl
