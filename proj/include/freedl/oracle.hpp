// freedl/oracle.hpp — the brute-force finite-model oracle.  Ground truth for
// every reduction and decision procedure in the toolkit: it decides bounded
// satisfiability by exhausting all interpretations within the given bounds
// (frame class, world/domain caps, designation/domain/RDA modes).
//
// An UNSAT answer is always relative to the bounds, never a completeness
// claim.  SAT answers carry a witness interpretation.

#ifndef FREEDL_ORACLE_HPP
#define FREEDL_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "freedl/model.hpp"

namespace freedl {

enum class OracleVerdict { Sat, UnsatUpToBounds };

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::UnsatUpToBounds;
  std::optional<Interpretation> witness;
  ModelBounds bounds;
};

struct OracleOptions {
  // Decision budget for the underlying search, per (worlds, domain) size.
  // Exceeding it raises ResourceError.  FREEDL_WORK_CAP overrides when set.
  std::int64_t work_cap = 4'000'000;
};

// Is `goal` satisfied in some interpretation within `bounds` that satisfies
// `onto`?  Sizes are explored in ascending (worlds, domain) order and the
// first witness found is returned; results are deterministic.
OracleResult oracle_sat(Concept goal, const Ontology& onto, const ModelBounds& bounds,
                        const OracleOptions& opts = {});
OracleResult oracle_sat(Concept goal, const ModelBounds& bounds, const OracleOptions& opts = {});

// Plain exhaustive enumeration of all interpretations over `sig` within
// `bounds` (used by property tests on micro signatures).  Frames are pruned
// to canonical representatives under world permutation; extensions are not
// symmetry-pruned unless `prune_element_symmetry`.  The callback returns
// false to stop.  Throws ResourceError past `work_cap` models.
void enumerate_models(const Signature& sig, const ModelBounds& bounds,
                      const std::function<bool(const Interpretation&)>& callback,
                      std::int64_t work_cap = 4'000'000,
                      bool prune_element_symmetry = false);

std::int64_t env_work_cap(std::int64_t fallback);

}  // namespace freedl

#endif  // FREEDL_ORACLE_HPP
