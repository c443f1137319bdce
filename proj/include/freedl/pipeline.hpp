// freedl/pipeline.hpp — composition of the reduction pipeline with the
// decision procedures and the bounded oracle, as driven by the CLI.
//
// The decision procedures handle total designation and constant domains
// (expanding for the Kf*n search) without global ontologies (the ALCOu
// eliminator and the single-modality S5 fold take ontologies).  decide_sat
// rewrites the input problem into such a target with the reductions,
// recording each stage; configurations with no sound complete route (the
// undecidable ones) fall back to the bounded oracle and report
// unsat-up-to-bounds instead of unsat.

#ifndef FREEDL_PIPELINE_HPP
#define FREEDL_PIPELINE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freedl/decide.hpp"
#include "freedl/model.hpp"
#include "freedl/oracle.hpp"
#include "freedl/reductions.hpp"

namespace freedl {

enum class Logic { Alcou, Kn, S5n, LtlfNext, LtlNext, Kfn };

std::optional<Logic> logic_from_string(const std::string& s);
std::string logic_name(Logic l);

struct SatOptions {
  Logic logic = Logic::Kn;
  DesignationMode designation = DesignationMode::Partial;
  DomainMode domains = DomainMode::Constant;
  bool rda = false;
  int modalities = 0;  // 0 = infer from the input
  KfnBudget budget;
  ModelBounds oracle_bounds;  // for fallback routes
  DecideLimits limits;
};

struct SatOutcome {
  std::string verdict;  // sat | unsat | unsat-up-to-bounds | budget-exhausted
  std::vector<std::string> pipeline;
  std::map<std::string, std::string> fresh;
  std::optional<Interpretation> model;
  bool witness_checked = false;  // independent checker accepted the witness
  bool oracle_fallback = false;
  bool multiplicity_capped = false;
};

SatOutcome decide_sat(Concept goal, const Ontology& onto, const SatOptions& opts);

// Named single reductions for `freedl reduce`.
struct ReduceState {
  std::optional<Concept> goal;
  Ontology ontology;
  DesignationMode designation = DesignationMode::Partial;
  DomainMode domains = DomainMode::Constant;
  bool rda = false;
};

// Applies one named stage in place and returns its fresh-name manifest.
std::map<std::string, std::string> apply_reduction_stage(const std::string& name,
                                                         ReduceState& state);
std::vector<std::string> known_reduction_stages();

}  // namespace freedl

#endif  // FREEDL_PIPELINE_HPP
