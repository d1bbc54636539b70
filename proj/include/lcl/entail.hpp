#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcl/deduction.hpp"
#include "lcl/infer.hpp"
#include "lcl/saturation.hpp"
#include "lcl/synthesis.hpp"
#include "lcl/truth_table.hpp"

namespace lcl {

struct EntailResult {
  enum class Status { Proved, Refuted, Unknown };
  Status status;
  std::optional<HilbertProof> proof;             // Proved
  std::map<std::string, bool> countervaluation;  // Refuted: over the saturated set
  std::string note;
};

namespace detail {

constexpr std::size_t kMaxSynthesisAtoms = 11;

// Declarations among the theory's top-level atoms form a basis for the
// typing route.
inline Basis theory_basis(const std::vector<Formula>& theory) {
  Basis gamma;
  for (const Formula& f : theory)
    if (f.is_atom() && f.statement().subject.is_var() &&
        !gamma.contains(f.statement().subject.var_name()))
      gamma.declare(f.statement().subject.var_name(), f.statement().predicate);
  return gamma;
}

// Turns a CL-> typing derivation into a Hilbert proof: declarations become
// hypothesis lines, combinator axioms become Ax1-Ax3 lines, and every
// (-> elim) step becomes an Ax4 instance with two MPs.
inline std::size_t typing_to_proof(const TypingNode& node, ProofBuilder& pb,
                                   const std::vector<Formula>& theory) {
  Formula judgment = Formula::atom(node.subject, node.type);
  switch (node.subject.kind()) {
    case Term::Kind::Var: {
      for (std::size_t i = 0; i < theory.size(); ++i)
        if (theory[i] == judgment) return pb.hyp(i);
      throw precondition_error("typing route: declaration " + print_formula(judgment) +
                               " is not among the hypotheses");
    }
    case Term::Kind::S: return pb.axiom(AxiomId::Ax1, judgment);
    case Term::Kind::K: return pb.axiom(AxiomId::Ax2, judgment);
    case Term::Kind::I: return pb.axiom(AxiomId::Ax3, judgment);
    case Term::Kind::App: {
      std::size_t fun_line = typing_to_proof(*node.children.at(0), pb, theory);
      std::size_t arg_line = typing_to_proof(*node.children.at(1), pb, theory);
      Formula ax4 = Formula::implies(pb.formula(fun_line),
                                     Formula::implies(pb.formula(arg_line), judgment));
      std::size_t ax = pb.axiom(AxiomId::Ax4, ax4);
      return pb.mp(pb.mp(ax, fun_line), arg_line);
    }
  }
  throw precondition_error("typing route: unreachable");
}

inline std::optional<HilbertProof> typing_route(const std::vector<Formula>& theory,
                                                const Formula& goal) {
  if (!goal.is_atom()) return std::nullopt;
  Basis gamma = theory_basis(theory);
  auto derivation = derive_typing(gamma, goal.statement().subject, goal.statement().predicate);
  if (!derivation) return std::nullopt;
  ProofBuilder pb(theory);
  typing_to_proof(**derivation, pb, theory);
  return prune_proof(pb.take());
}

// Forward chaining: hypotheses and saturated instances as start facts,
// closure under MP. Returns a proof when the goal is reached.
inline std::optional<HilbertProof> mp_chain_route(const std::vector<Formula>& theory,
                                                  const std::vector<SaturatedInstance>& instances,
                                                  const Formula& goal) {
  ProofBuilder pb(theory);
  std::map<std::string, std::size_t> known;
  for (std::size_t i = 0; i < theory.size(); ++i)
    known.emplace(print_formula(theory[i]), pb.hyp(i));
  for (const SaturatedInstance& inst : instances)
    known.emplace(print_formula(inst.formula), pb.axiom(inst.id, inst.formula));

  std::string goal_key = print_formula(goal);
  bool progress = true;
  while (progress && !known.count(goal_key)) {
    progress = false;
    std::vector<std::pair<std::string, std::size_t>> snapshot(known.begin(), known.end());
    for (const auto& [key, line] : snapshot) {
      const Formula& f = pb.formula(line);
      if (!f.is_implies()) continue;
      auto ant = known.find(print_formula(f.antecedent()));
      if (ant == known.end()) continue;
      std::string ckey = print_formula(f.consequent());
      if (known.count(ckey)) continue;
      known.emplace(ckey, pb.mp(line, ant->second));
      progress = true;
    }
  }
  auto hit = known.find(goal_key);
  if (hit == known.end()) return std::nullopt;
  HilbertProof p = pb.take();
  // make the goal the final line
  p.lines.erase(p.lines.begin() + static_cast<std::ptrdiff_t>(hit->second) + 1, p.lines.end());
  return prune_proof(p);
}

}  // namespace detail

/// Bounded entailment for LCL: a typing route for atom goals (the
/// conservativity direction), then axiom saturation with propositional
/// reasoning on top. Proved results carry a checkable proof; Refuted reports
/// a propositional countervaluation over the saturated instance set only.
inline EntailResult entails(const std::vector<Formula>& theory, const Formula& goal,
                            const Bounds& bounds = {}) {
  for (const Formula& f : theory)
    if (!wf_formula(f).well_formed)
      throw precondition_error("entails: ill-formed theory formula " + print_formula(f));
  if (!wf_formula(goal).well_formed)
    throw precondition_error("entails: ill-formed goal " + print_formula(goal));

  if (auto direct = detail::typing_route(theory, goal))
    return EntailResult{EntailResult::Status::Proved, std::move(*direct), {}, "typing route"};

  SaturationResult sat = saturate_axioms(theory, goal, bounds);

  std::vector<Formula> premises = theory;
  for (const SaturatedInstance& inst : sat.instances) premises.push_back(inst.formula);

  TruthTableResult tt{true, {}};
  try {
    tt = truth_table_valid(premises, goal);
  } catch (const precondition_error&) {
    return EntailResult{EntailResult::Status::Unknown, std::nullopt, {},
                        "too many atoms for propositional closure"};
  }
  if (!tt.entailed) {
    EntailResult out{EntailResult::Status::Refuted, std::nullopt, std::move(tt.countervaluation),
                     "countervaluation over the saturated set"};
    if (sat.truncated) {
      out.status = EntailResult::Status::Unknown;
      out.note = "saturation truncated; countervaluation over the saturated set only";
    }
    return out;
  }

  if (auto chained = detail::mp_chain_route(theory, sat.instances, goal))
    return EntailResult{EntailResult::Status::Proved, std::move(*chained), {}, "saturation + MP"};

  // Propositional synthesis over the hypotheses plus the used instances;
  // instance lines are re-justified by their axiom schemes afterward.
  std::vector<Statement> atoms = collect_atoms(premises);
  if (atoms.size() > detail::kMaxSynthesisAtoms)
    return EntailResult{EntailResult::Status::Unknown, std::nullopt, {},
                        "synthesis budget exceeded (" + std::to_string(atoms.size()) + " atoms)"};

  HilbertProof synthesized = synthesize_proof(premises, goal);
  // remap: lines that cite an instance hypothesis become axiom lines
  HilbertProof remapped;
  remapped.theory = theory;
  for (ProofLine line : synthesized.lines) {
    if (line.just.kind == Justification::Kind::Hypothesis &&
        line.just.hyp_index >= theory.size()) {
      const SaturatedInstance& inst = sat.instances[line.just.hyp_index - theory.size()];
      line.just = Justification::axiom_instance(inst.id);
    }
    remapped.lines.push_back(std::move(line));
  }
  return EntailResult{EntailResult::Status::Proved, prune_proof(remapped), {},
                      "saturation + synthesis"};
}

/// Bounded consistency: False when ⊥ is provable, True when a boolean
/// valuation satisfies the theory together with every saturated instance and
/// nothing was truncated, Unknown otherwise.
inline TriBool consistent(const std::vector<Formula>& theory, const Bounds& bounds = {}) {
  Formula bot = bottom_for(theory);
  EntailResult e = entails(theory, bot, bounds);
  if (e.status == EntailResult::Status::Proved) return TriBool::no();

  SaturationResult sat = saturate_axioms(theory, bot, bounds);
  std::vector<Formula> premises = theory;
  for (const SaturatedInstance& inst : sat.instances) premises.push_back(inst.formula);
  try {
    if (truth_table_satisfiable(premises) && !sat.truncated) return TriBool::yes();
  } catch (const precondition_error&) {
    return TriBool::unknown("too many atoms for propositional closure");
  }
  return TriBool::unknown(sat.truncated ? "saturation truncated" : "entailment not settled");
}

}  // namespace lcl
