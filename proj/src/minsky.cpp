#include "freedl/minsky.hpp"

#include "freedl/reductions.hpp"
#include "freedl/syntax.hpp"

namespace freedl {

StepResult minsky_step(const MinskyMachine& m, const Configuration& cfg) {
  StepResult r;
  if (cfg.state >= m.halting_state()) {
    r.halted = true;
    r.next = cfg;
    return r;
  }
  const Instruction& ins = m.instructions[static_cast<size_t>(cfg.state)];
  Configuration next = cfg;
  std::int64_t& reg = ins.reg == 1 ? next.v1 : next.v2;
  if (ins.is_inc) {
    ++reg;
    next.state = ins.target;
  } else if (reg > 0) {
    --reg;
    next.state = ins.target;
  } else {
    next.state = ins.target_zero;
  }
  r.next = next;
  return r;
}

RunResult minsky_run(const MinskyMachine& m, std::int64_t max_steps) {
  RunResult out;
  Configuration cfg;
  for (std::int64_t step = 0; step <= max_steps; ++step) {
    if (cfg.state == m.halting_state()) {
      out.halts = true;
      out.steps = step;
      out.final_cfg = cfg;
      return out;
    }
    if (step == max_steps) break;
    cfg = minsky_step(m, cfg).next;
  }
  out.halts = false;
  out.steps = max_steps;
  out.final_cfg = cfg;
  return out;
}

namespace {
// Q_i [= (X <=> Y) split into Q_i and X [= Y plus Q_i and Y [= X.
void push_guarded_iff(Ontology& o, Concept guard, Concept x, Concept y) {
  o.cis.push_back(CI{make_and(guard, x), y});
  o.cis.push_back(CI{make_and(guard, y), x});
}
}  // namespace

MinskyEncoding encode_minsky(const MinskyMachine& m, EncodeMode mode) {
  MinskyEncoding enc;
  enc.ontology.modality_count = 1;  // next only
  int L = m.halting_state();

  for (int i = 0; i <= L; ++i) {
    enc.state_concepts.push_back("Q" + std::to_string(i));
    enc.fresh[enc.state_concepts.back()] = "state " + m.state_names[static_cast<size_t>(i)];
  }
  enc.register_concepts = {"R1", "R2"};
  enc.fresh["R1"] = "register r1";
  enc.fresh["R2"] = "register r2";
  enc.fresh["a1"] = "increment witness for r1";
  enc.fresh["a2"] = "increment witness for r2";
  enc.fresh["b1"] = "decrement witness for r1";
  enc.fresh["b2"] = "decrement witness for r2";

  auto q = [&](int i) { return make_name(enc.state_concepts[static_cast<size_t>(i)]); };
  auto reg = [&](int k) { return make_name(enc.register_concepts[static_cast<size_t>(k - 1)]); };
  auto a = [&](int k) { return make_nominal(k == 1 ? "a1" : "a2"); };
  auto b = [&](int k) { return make_nominal(k == 1 ? "b1" : "b2"); };

  Ontology& o = enc.ontology;
  // S1/S2: states cover everything or nothing, and are pairwise disjoint.
  for (int i = 0; i <= L; ++i) o.cis.push_back(CI{make_exists_u(q(i)), q(i)});
  for (int i = 0; i <= L; ++i)
    for (int j = i + 1; j <= L; ++j) o.cis.push_back(CI{make_and(q(i), q(j)), make_bot()});

  for (int i = 0; i < L; ++i) {
    const Instruction& ins = m.instructions[static_cast<size_t>(i)];
    int k = ins.reg;
    int kbar = 3 - k;
    if (ins.is_inc) {
      // I1-I4.
      o.cis.push_back(CI{q(i), make_exists_u(make_and(a(k), make_not(reg(k))))});
      push_guarded_iff(o, q(i), make_dia(1, reg(k)), make_or(reg(k), a(k)));
      push_guarded_iff(o, q(i), make_dia(1, reg(kbar)), reg(kbar));
      o.cis.push_back(CI{q(i), make_dia(1, q(ins.target))});
    } else {
      // D1-D5.
      o.cis.push_back(
          CI{make_and(q(i), make_exists_u(reg(k))), make_exists_u(make_and(b(k), reg(k)))});
      push_guarded_iff(o, q(i), make_dia(1, reg(k)), make_and(reg(k), make_not(b(k))));
      push_guarded_iff(o, q(i), make_dia(1, reg(kbar)), reg(kbar));
      o.cis.push_back(CI{make_and(q(i), make_exists_u(reg(k))), make_dia(1, q(ins.target))});
      o.cis.push_back(
          CI{make_and(q(i), make_not(make_exists_u(reg(k)))), make_dia(1, q(ins.target_zero))});
    }
  }

  // O1: both registers empty at the initial state.
  for (int k = 1; k <= 2; ++k) o.cis.push_back(CI{make_and(q(0), reg(k)), make_bot()});
  // A1 (infinite, never halts) / A2 (finite, last instant is halting).
  if (mode == EncodeMode::InfiniteNonHalt) {
    o.cis.push_back(CI{q(L), make_bot()});
  } else {
    o.cis.push_back(CI{make_not(make_dia(1, make_top())), q(L)});
  }
  enc.goal = q(0);
  return enc;
}

UFreeEncoding eliminate_u_for_encoding(const Ontology& o) {
  UFreeEncoding out;
  if (is_u_free(o)) {
    out.ontology = o;
    return out;
  }
  ReductionResult normal = normalize_ontology(o);
  ReductionResult nou = eliminate_universal_role(*normal.ontology_out);
  out.ontology = *nou.ontology_out;
  out.fresh = normal.fresh;
  out.fresh.insert(nou.fresh.begin(), nou.fresh.end());
  return out;
}

}  // namespace freedl
