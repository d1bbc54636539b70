#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lcl/errors.hpp"
#include "lcl/formula.hpp"

namespace lcl {

/// Distinct atoms of a formula set, in canonical (printed) order. Atom
/// identity is syntactic statement equality; Ax5 bridges semantically equal
/// atoms explicitly at the theory layer.
inline std::vector<Statement> collect_atoms(const std::vector<Formula>& formulas) {
  std::map<std::string, Statement> seen;
  for (const Formula& f : formulas)
    f.for_each_atom([&](const Statement& s) { seen.emplace(print_statement(s), s); });
  std::vector<Statement> out;
  for (auto& [_, s] : seen) out.push_back(s);
  return out;
}

namespace detail {

inline bool eval_formula(const Formula& f, const std::map<std::string, bool>& valuation) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return valuation.at(print_statement(f.statement()));
    case Formula::Kind::Not: return !eval_formula(f.operand(), valuation);
    case Formula::Kind::Implies:
      return !eval_formula(f.antecedent(), valuation) || eval_formula(f.consequent(), valuation);
  }
  return false;
}

}  // namespace detail

struct TruthTableResult {
  bool entailed;
  std::map<std::string, bool> countervaluation;  // keyed by printed atom
};

constexpr std::size_t kMaxTruthTableAtoms = 22;

/// Classical truth-table entailment over the formulas' atoms treated as
/// propositional letters.
inline TruthTableResult truth_table_valid(const std::vector<Formula>& theory, const Formula& goal) {
  std::vector<Formula> all = theory;
  all.push_back(goal);
  std::vector<Statement> atoms = collect_atoms(all);
  if (atoms.size() > kMaxTruthTableAtoms)
    throw precondition_error("truth table over " + std::to_string(atoms.size()) +
                             " atoms exceeds the supported bound");
  std::vector<std::string> keys;
  for (const Statement& s : atoms) keys.push_back(print_statement(s));

  for (std::uint64_t v = 0; v < (std::uint64_t{1} << atoms.size()); ++v) {
    std::map<std::string, bool> valuation;
    for (std::size_t i = 0; i < keys.size(); ++i) valuation[keys[i]] = (v >> i) & 1;
    bool theory_holds = true;
    for (const Formula& t : theory)
      if (!detail::eval_formula(t, valuation)) {
        theory_holds = false;
        break;
      }
    if (theory_holds && !detail::eval_formula(goal, valuation))
      return TruthTableResult{false, std::move(valuation)};
  }
  return TruthTableResult{true, {}};
}

/// Does any valuation satisfy every formula?
inline bool truth_table_satisfiable(const std::vector<Formula>& formulas) {
  if (formulas.empty()) return true;
  std::vector<Statement> atoms = collect_atoms(formulas);
  if (atoms.size() > kMaxTruthTableAtoms)
    throw precondition_error("truth table over " + std::to_string(atoms.size()) +
                             " atoms exceeds the supported bound");
  std::vector<std::string> keys;
  for (const Statement& s : atoms) keys.push_back(print_statement(s));
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << atoms.size()); ++v) {
    std::map<std::string, bool> valuation;
    for (std::size_t i = 0; i < keys.size(); ++i) valuation[keys[i]] = (v >> i) & 1;
    bool all = true;
    for (const Formula& f : formulas)
      if (!detail::eval_formula(f, valuation)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

}  // namespace lcl
