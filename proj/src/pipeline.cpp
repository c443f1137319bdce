#include "freedl/pipeline.hpp"

#include <algorithm>

#include "freedl/counting.hpp"
#include "freedl/errors.hpp"
#include "freedl/printer.hpp"

namespace freedl {

std::optional<Logic> logic_from_string(const std::string& s) {
  if (s == "alcou") return Logic::Alcou;
  if (s == "kn") return Logic::Kn;
  if (s == "s5n") return Logic::S5n;
  if (s == "ltlf-next") return Logic::LtlfNext;
  if (s == "ltl-next") return Logic::LtlNext;
  if (s == "kfn") return Logic::Kfn;
  return std::nullopt;
}

std::string logic_name(Logic l) {
  switch (l) {
    case Logic::Alcou: return "alcou";
    case Logic::Kn: return "kn";
    case Logic::S5n: return "s5n";
    case Logic::LtlfNext: return "ltlf-next";
    case Logic::LtlNext: return "ltl-next";
    case Logic::Kfn: return "kfn";
  }
  return "?";
}

namespace {

bool has_iota(Concept c) { return !is_iota_free(c); }
bool has_iota(const Ontology& o) { return !is_iota_free(o); }

int infer_modalities(Concept goal, const Ontology& o, const SatOptions& opts) {
  if (opts.modalities > 0) return opts.modalities;
  int n = o.modality_count;
  for (Concept s : subconcepts(goal))
    if (s.kind() == Kind::Dia) n = std::max(n, s.modality());
  if (opts.logic == Logic::LtlfNext || opts.logic == Logic::LtlNext) n = std::max(n, 2);
  return std::max(n, 1);
}

FrameClass frame_class_for(Logic logic, int n) {
  switch (logic) {
    case Logic::Alcou: return FrameClass::kn(1);
    case Logic::Kn: return FrameClass::kn(n);
    case Logic::S5n: return FrameClass::s5n(n);
    case Logic::LtlfNext: return FrameClass::ltl_finite();
    case Logic::LtlNext: return FrameClass::ltl_infinite_prefix(6);
    case Logic::Kfn: return FrameClass::kfstar(n);
  }
  return FrameClass::kn(n);
}

void merge_fresh(SatOutcome& out, const std::map<std::string, std::string>& fresh) {
  out.fresh.insert(fresh.begin(), fresh.end());
}

SatOutcome oracle_fallback(Concept goal, const Ontology& onto, const SatOptions& opts,
                           SatOutcome out, const std::string& reason) {
  ModelBounds bounds = opts.oracle_bounds;
  bounds.frame_class = frame_class_for(opts.logic, infer_modalities(goal, onto, opts));
  if (opts.logic == Logic::LtlNext)
    bounds.frame_class.fixed_ltl_length = std::max(modal_depth(goal), modal_depth(onto)) + 2;
  bounds.designation_mode = opts.designation;
  bounds.domain_mode = opts.domains;
  bounds.rda = opts.rda;
  out.pipeline.push_back("oracle-fallback(" + reason + ")");
  out.oracle_fallback = true;
  OracleResult r = oracle_sat(goal, onto, bounds);
  if (r.verdict == OracleVerdict::Sat) {
    out.verdict = "sat";
    out.model = r.witness;
    out.witness_checked = r.witness && satisfies_ontology(*r.witness, onto) &&
                          concept_satisfied(*r.witness, goal);
  } else {
    out.verdict = "unsat-up-to-bounds";
  }
  return out;
}

}  // namespace

SatOutcome decide_sat(Concept goal, const Ontology& onto, const SatOptions& opts) {
  SatOutcome out;
  int n = infer_modalities(goal, onto, opts);
  Concept cur_goal = goal;
  Ontology cur_onto = onto;
  cur_onto.modality_count = n;

  const bool concept_only_target =
      opts.logic == Logic::Kn || opts.logic == Logic::S5n || opts.logic == Logic::LtlfNext ||
      opts.logic == Logic::LtlNext || opts.logic == Logic::Kfn;

  // RDA handling.
  if (opts.rda) {
    if (!cur_onto.cis.empty()) {
      ReductionResult r = enforce_rda_ontology(cur_onto);
      cur_onto = *r.ontology_out;
      out.pipeline.push_back("enforce-rda-ontology");
    } else if (opts.designation == DesignationMode::Total) {
      cur_goal = enforce_rda_concept_total(cur_goal, DesignationMode::Total);
      out.pipeline.push_back("enforce-rda-concept-total");
    } else {
      // No sound concept-level reduction in partial mode; decide within
      // bounds instead.
      return oracle_fallback(goal, onto, opts, out, "rda-partial-concept");
    }
  }

  // Ontologies are only native for the ALCOu eliminator and foldable for
  // single-modality S5.
  if (!cur_onto.cis.empty() && concept_only_target) {
    if (opts.logic == Logic::S5n && n == 1) {
      std::vector<Concept> cis;
      for (const CI& ci : cur_onto.cis) cis.push_back(make_implies(ci.lhs, ci.rhs));
      Concept co = make_and_all(cis);
      cur_goal = make_and(cur_goal, make_and(co, make_box(1, co)));
      cur_onto.cis.clear();
      out.pipeline.push_back("fold-ontology-s5");
    } else {
      return oracle_fallback(goal, onto, opts,  out, "global-ontology");
    }
  }

  // Designation: the procedures decide total satisfiability.
  if (opts.designation == DesignationMode::Partial) {
    if (cur_onto.cis.empty()) {
      ReductionResult r = partialize_concept(cur_goal);
      cur_goal = *r.concept_out;
      merge_fresh(out, r.fresh);
    } else {
      ReductionResult r = partialize_ontology(cur_onto);
      cur_onto = *r.ontology_out;
      merge_fresh(out, r.fresh);
    }
    out.pipeline.push_back("partialize");
  }

  // Definite descriptions.
  if (has_iota(cur_goal) || has_iota(cur_onto)) {
    if (cur_onto.cis.empty()) {
      NormalFormConcept nf = normalize_concept(cur_goal);
      out.pipeline.push_back("normalize-concept");
      ReductionResult r = iota_to_nominals_concept(nf);
      merge_fresh(out, nf.fresh);
      merge_fresh(out, r.fresh);
      cur_goal = *r.concept_out;
    } else {
      ReductionResult nr = normalize_ontology(cur_onto);
      out.pipeline.push_back("normalize-ontology");
      ReductionResult r = iota_to_nominals_ontology(*nr.ontology_out);
      merge_fresh(out, nr.fresh);
      merge_fresh(out, r.fresh);
      cur_onto = *r.ontology_out;
    }
    out.pipeline.push_back("iota-to-nominals");
  }

  // Domains.
  if (opts.domains == DomainMode::Expanding && opts.logic != Logic::Kfn) {
    SatBundle bundle{cur_goal, cur_onto};
    ReductionResult r = relativize_to_constant(bundle);
    cur_goal = *r.concept_out;
    cur_onto = *r.ontology_out;
    merge_fresh(out, r.fresh);
    out.pipeline.push_back("relativize-to-constant");
  }
  if (opts.logic == Logic::Kfn && opts.domains == DomainMode::Constant) {
    return oracle_fallback(goal, onto, opts, out, "kfn-constant-domains");
  }

  // Dispatch.
  switch (opts.logic) {
    case Logic::Alcou: {
      out.pipeline.push_back("alcou-type-elimination");
      bool sat = alcou_sat(cur_goal, cur_onto, opts.limits);
      out.verdict = sat ? "sat" : "unsat";
      return out;
    }
    case Logic::Kn:
    case Logic::S5n: {
      bool s5 = opts.logic == Logic::S5n;
      out.pipeline.push_back(s5 ? "s5n-quasimodel-search" : "kn-quasimodel-search");
      ModalSatResult r = s5 ? s5n_sat(cur_goal, n, opts.limits) : kn_sat(cur_goal, n, opts.limits);
      if (r.verdict == DecideVerdict::Sat) {
        out.verdict = "sat";
        std::string why;
        out.witness_checked = check_quasimodel(*r.witness, cur_goal, &why);
        if (out.witness_checked) {
          Interpretation m = quasimodel_to_model(*r.witness, cur_goal);
          out.witness_checked = concept_satisfied(m, cur_goal);
          out.model = m;
        }
      } else {
        out.verdict = "unsat";
      }
      return out;
    }
    case Logic::LtlfNext:
    case Logic::LtlNext: {
      out.pipeline.push_back("ltl-next-run-elimination");
      FlowKind flow = opts.logic == Logic::LtlfNext ? FlowKind::Finite : FlowKind::Infinite;
      LtlSatResult r = ltl_next_sat(cur_goal, flow, opts.limits);
      if (r.verdict == DecideVerdict::Sat) {
        out.verdict = "sat";
        Interpretation m = ltl_runs_to_model(cur_goal, *r.witness);
        out.witness_checked = satisfied_at(m, 0, cur_goal);
        out.model = m;
      } else {
        out.verdict = "unsat";
      }
      return out;
    }
    case Logic::Kfn: {
      out.pipeline.push_back("kfn-budgeted-quasimodel-search");
      KfnResult r = kfn_sat_budgeted(cur_goal, n, opts.budget, opts.limits);
      out.multiplicity_capped = r.multiplicity_capped;
      if (r.verdict == KfnVerdict::Sat) {
        out.verdict = "sat";
        std::string why;
        out.witness_checked = check_kfn_witness(*r.witness, cur_goal, n, &why);
        if (out.witness_checked) {
          Interpretation m = kfn_witness_to_model(cur_goal, n, *r.witness);
          out.witness_checked = concept_satisfied(m, cur_goal);
          out.model = m;
        }
      } else {
        out.verdict = "budget-exhausted";
      }
      return out;
    }
  }
  out.verdict = "unsat";
  return out;
}

std::vector<std::string> known_reduction_stages() {
  return {"enforce-rda",    "enforce-rda-concept", "totalize",        "partialize",
          "normalize",      "eliminate-u",         "nominals-to-iota", "iota-to-nominals",
          "relativize",     "elo-nodisj-finite",   "elo-nodisj-infinite", "elo-nobot",
          "mldiff-to-alcou"};
}

std::map<std::string, std::string> apply_reduction_stage(const std::string& name,
                                                         ReduceState& st) {
  auto need_onto = [&]() {
    if (st.ontology.cis.empty() && !st.goal)
      throw FragmentError("stage '" + name + "' needs an ontology or a concept");
  };
  need_onto();
  std::map<std::string, std::string> fresh;

  if (name == "enforce-rda") {
    ReductionResult r = enforce_rda_ontology(st.ontology);
    st.ontology = *r.ontology_out;
    st.rda = false;
    return r.fresh;
  }
  if (name == "enforce-rda-concept") {
    if (!st.goal) throw FragmentError("stage needs a goal concept");
    st.goal = enforce_rda_concept_total(*st.goal, st.designation);
    st.rda = false;
    return fresh;
  }
  if (name == "totalize") {
    if (!st.ontology.cis.empty()) {
      ReductionResult r = totalize_ontology(st.ontology);
      st.ontology = *r.ontology_out;
      fresh = r.fresh;
    }
    if (st.goal) {
      ReductionResult r = totalize_concept(*st.goal);
      st.goal = r.concept_out;
      fresh.insert(r.fresh.begin(), r.fresh.end());
    }
    st.designation = DesignationMode::Partial;
    return fresh;
  }
  if (name == "partialize") {
    if (!st.ontology.cis.empty()) {
      ReductionResult r = partialize_ontology(st.ontology);
      st.ontology = *r.ontology_out;
      fresh = r.fresh;
    }
    if (st.goal && st.ontology.cis.empty()) {
      ReductionResult r = partialize_concept(*st.goal);
      st.goal = r.concept_out;
      fresh.insert(r.fresh.begin(), r.fresh.end());
    }
    st.designation = DesignationMode::Total;
    return fresh;
  }
  if (name == "normalize") {
    if (!st.ontology.cis.empty()) {
      ReductionResult r = normalize_ontology(st.ontology);
      st.ontology = *r.ontology_out;
      fresh = r.fresh;
    } else if (st.goal) {
      NormalFormConcept nf = normalize_concept(*st.goal);
      st.goal = nf.to_concept();
      fresh = nf.fresh;
    }
    return fresh;
  }
  if (name == "eliminate-u") {
    ReductionResult r = eliminate_universal_role(st.ontology);
    st.ontology = *r.ontology_out;
    return r.fresh;
  }
  if (name == "nominals-to-iota") {
    if (!st.ontology.cis.empty()) {
      ReductionResult r = nominals_to_iota(st.ontology);
      st.ontology = *r.ontology_out;
      fresh = r.fresh;
    }
    if (st.goal) {
      ReductionResult r = nominals_to_iota_concept(*st.goal);
      st.goal = r.concept_out;
      fresh.insert(r.fresh.begin(), r.fresh.end());
    }
    return fresh;
  }
  if (name == "iota-to-nominals") {
    if (!st.ontology.cis.empty()) {
      ReductionResult r = iota_to_nominals_ontology(st.ontology);
      st.ontology = *r.ontology_out;
      return r.fresh;
    }
    if (st.goal) {
      auto nf = match_normal_form_concept(*st.goal);
      if (!nf) throw NotNormalFormError("iota-to-nominals expects a normal-form concept");
      ReductionResult r = iota_to_nominals_concept(*nf);
      st.goal = r.concept_out;
      return r.fresh;
    }
    return fresh;
  }
  if (name == "relativize") {
    SatBundle b{st.goal ? *st.goal : make_top(), st.ontology};
    ReductionResult r = relativize_to_constant(b);
    st.goal = r.concept_out;
    st.ontology = *r.ontology_out;
    st.domains = DomainMode::Constant;
    return r.fresh;
  }
  if (name == "elo-nodisj-finite" || name == "elo-nodisj-infinite") {
    ReductionResult r = eliminate_disjunction_elo(
        st.ontology, name == "elo-nodisj-finite" ? FlowKind::Finite : FlowKind::Infinite);
    st.ontology = *r.ontology_out;
    return r.fresh;
  }
  if (name == "elo-nobot") {
    ReductionResult r = eliminate_bot_elo(st.ontology);
    st.ontology = *r.ontology_out;
    return r.fresh;
  }
  if (name == "mldiff-to-alcou") {
    if (!st.ontology.cis.empty()) {
      ReductionResult r = mldiff_to_mlalcou_ontology(st.ontology);
      st.ontology = *r.ontology_out;
      return r.fresh;
    }
    if (st.goal) {
      ReductionResult r = mldiff_to_mlalcou_concept(*st.goal);
      st.goal = r.concept_out;
      return r.fresh;
    }
    return fresh;
  }
  throw FragmentError("unknown reduction stage '" + name + "'");
}

}  // namespace freedl
