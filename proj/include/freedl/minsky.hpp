// freedl/minsky.hpp — two-counter Minsky machines, their operational
// semantics, and the temporal-ontology encoding of their computations.

#ifndef FREEDL_MINSKY_HPP
#define FREEDL_MINSKY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "freedl/ast.hpp"

namespace freedl {

// Instruction executed at state q_i: inc bumps a register and jumps;
// dec jumps to target_zero when the register is 0, else decrements.
struct Instruction {
  bool is_inc = true;
  int reg = 1;  // 1 or 2
  int target = 0;
  int target_zero = 0;  // dec only
};

struct MinskyMachine {
  std::vector<std::string> state_names;  // q_0 .. q_L; q_L is halting
  std::vector<Instruction> instructions;  // I_0 .. I_{L-1}
  int state_count() const { return static_cast<int>(state_names.size()); }
  int halting_state() const { return state_count() - 1; }
};

struct Configuration {
  int state = 0;
  std::int64_t v1 = 0;
  std::int64_t v2 = 0;
  bool operator==(const Configuration& o) const {
    return state == o.state && v1 == o.v1 && v2 == o.v2;
  }
};

struct StepResult {
  bool halted = false;
  Configuration next;
};

struct RunResult {
  bool halts = false;       // reached q_L within the step cap
  std::int64_t steps = 0;   // steps executed (when halts) or the cap
  Configuration final_cfg;
};

StepResult minsky_step(const MinskyMachine& m, const Configuration& cfg);
RunResult minsky_run(const MinskyMachine& m, std::int64_t max_steps);

enum class EncodeMode { FiniteHalts, InfiniteNonHalt };

struct MinskyEncoding {
  Ontology ontology;        // over modality 1 = next (and no others)
  Concept goal;             // Q_0
  std::vector<std::string> state_concepts;    // Q_i names
  std::vector<std::string> register_concepts; // R_1, R_2
  std::map<std::string, std::string> fresh;   // fresh symbol -> origin note
};

// The CI families S1-S2, I1-I4, D1-D5, O1 and A1 (infinite) / A2 (finite).
// Biconditional CIs are expanded into two inclusions each.
MinskyEncoding encode_minsky(const MinskyMachine& m, EncodeMode mode);

struct UFreeEncoding {
  Ontology ontology;
  std::map<std::string, std::string> fresh;
};

// Normal form followed by the spy-point elimination: a universal-role-free
// version of an encoding with the same bounded-oracle verdicts.
UFreeEncoding eliminate_u_for_encoding(const Ontology& o);

}  // namespace freedl

#endif  // FREEDL_MINSKY_HPP
