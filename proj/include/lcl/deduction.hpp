#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcl/errors.hpp"
#include "lcl/proof.hpp"

namespace lcl {

/// Incremental proof assembly. Lines are appended with their justification;
/// MP computes the resulting formula from the referenced lines.
class ProofBuilder {
public:
  explicit ProofBuilder(std::vector<Formula> theory) { p_.theory = std::move(theory); }
  explicit ProofBuilder(HilbertProof resume) : p_(std::move(resume)) {}

  std::size_t hyp(std::size_t k) {
    return push(p_.theory.at(k), Justification::hypothesis(k));
  }

  std::size_t axiom(AxiomId id, const Formula& f, std::string inst = {}) {
    return push(f, Justification::axiom_instance(id, std::move(inst)));
  }

  std::size_t mp(std::size_t implication, std::size_t antecedent) {
    const Formula& imp = p_.lines.at(implication).formula;
    if (!imp.is_implies() || imp.antecedent() != p_.lines.at(antecedent).formula)
      throw precondition_error("builder MP does not fit: " + print_formula(imp));
    return push(imp.consequent(), Justification::modus_ponens(implication, antecedent));
  }

  /// Inlines a closed proof (one with an empty theory); returns the index of
  /// its final line.
  std::size_t append_closed(const HilbertProof& closed) {
    if (!closed.theory.empty())
      throw precondition_error("append_closed requires a theorem proof with no hypotheses");
    return append_shifted(closed);
  }

  /// Inlines a proof over the same theory as this builder.
  std::size_t append_same_theory(const HilbertProof& other) {
    if (other.theory.size() != p_.theory.size())
      throw precondition_error("append_same_theory: hypothesis lists differ");
    for (std::size_t i = 0; i < other.theory.size(); ++i)
      if (other.theory[i] != p_.theory[i])
        throw precondition_error("append_same_theory: hypothesis lists differ");
    return append_shifted(other);
  }

  const Formula& formula(std::size_t i) const { return p_.lines.at(i).formula; }
  std::size_t size() const { return p_.lines.size(); }
  const std::vector<Formula>& theory() const { return p_.theory; }

  HilbertProof take() { return std::move(p_); }

private:
  std::size_t push(Formula f, Justification j) {
    p_.lines.push_back(ProofLine{std::move(f), std::move(j)});
    return p_.lines.size() - 1;
  }

  std::size_t append_shifted(const HilbertProof& other) {
    std::size_t offset = p_.lines.size();
    for (const ProofLine& line : other.lines) {
      ProofLine shifted = line;
      if (shifted.just.kind == Justification::Kind::MP) {
        shifted.just.mp_implication += offset;
        shifted.just.mp_antecedent += offset;
      }
      p_.lines.push_back(std::move(shifted));
    }
    return p_.lines.size() - 1;
  }

  HilbertProof p_;
};

/// The 5-line derivation of alpha => alpha from Ax6 and Ax7.
inline HilbertProof theorem_identity(const Formula& alpha) {
  WfResult wf = wf_formula(alpha);
  if (!wf.well_formed)
    throw precondition_error("theorem_identity: ill-formed formula " + print_formula(alpha));
  Formula aa = Formula::implies(alpha, alpha);
  ProofBuilder b(std::vector<Formula>{});
  std::size_t l1 = b.axiom(AxiomId::Ax6, Formula::implies(alpha, Formula::implies(aa, alpha)));
  std::size_t l2 = b.axiom(
      AxiomId::Ax7,
      Formula::implies(b.formula(l1), Formula::implies(Formula::implies(alpha, aa), aa)));
  std::size_t l3 = b.mp(l2, l1);
  std::size_t l4 = b.axiom(AxiomId::Ax6, Formula::implies(alpha, aa));
  b.mp(l3, l4);
  return b.take();
}

namespace detail {

// The constructive deduction-theorem transformation, case by case on each
// line's justification. Assumes the input lines are correctly justified.
inline HilbertProof deduction_transform_unchecked(const HilbertProof& p, const Formula& alpha) {
  std::vector<Formula> reduced_theory;
  std::optional<std::size_t> discharged;
  for (std::size_t i = 0; i < p.theory.size(); ++i) {
    if (!discharged && p.theory[i] == alpha) {
      discharged = i;
      continue;
    }
    reduced_theory.push_back(p.theory[i]);
  }
  auto remap_hyp = [&](std::size_t k) {
    return discharged && k > *discharged ? k - 1 : k;
  };

  ProofBuilder b(reduced_theory);
  std::vector<std::size_t> wrapped(p.lines.size());  // index of alpha => formula_i

  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const ProofLine& line = p.lines[i];
    const Formula& phi = line.formula;
    switch (line.just.kind) {
      case Justification::Kind::Hypothesis: {
        if (discharged && line.just.hyp_index == *discharged) {
          // the discharged hypothesis itself: alpha => alpha
          wrapped[i] = b.append_closed(theorem_identity(alpha));
          break;
        }
        std::size_t base = b.hyp(remap_hyp(line.just.hyp_index));
        std::size_t ax6 = b.axiom(AxiomId::Ax6, Formula::implies(phi, Formula::implies(alpha, phi)));
        wrapped[i] = b.mp(ax6, base);
        break;
      }
      case Justification::Kind::Axiom: {
        std::size_t base = b.axiom(line.just.axiom, phi, line.just.instantiation);
        std::size_t ax6 = b.axiom(AxiomId::Ax6, Formula::implies(phi, Formula::implies(alpha, phi)));
        wrapped[i] = b.mp(ax6, base);
        break;
      }
      case Justification::Kind::MP: {
        // from alpha => (chi => phi) and alpha => chi, via Ax7
        std::size_t imp = wrapped[line.just.mp_implication];
        std::size_t ant = wrapped[line.just.mp_antecedent];
        const Formula& chi = p.lines[line.just.mp_antecedent].formula;
        Formula ax7 = Formula::implies(
            Formula::implies(alpha, Formula::implies(chi, phi)),
            Formula::implies(Formula::implies(alpha, chi), Formula::implies(alpha, phi)));
        std::size_t ax = b.axiom(AxiomId::Ax7, ax7);
        std::size_t step = b.mp(ax, imp);
        wrapped[i] = b.mp(step, ant);
        break;
      }
    }
  }
  return b.take();
}

}  // namespace detail

/// Deduction theorem, mechanized: turns an accepted proof of T ∪ {alpha} ⊢
/// beta into an accepted proof of T ⊢ alpha => beta. Axiom and theory lines
/// are wrapped with Ax6 + MP, the alpha line becomes the identity theorem,
/// and MP lines route through Ax7; output length is at most 5n + 5.
inline HilbertProof deduction_transform(const HilbertProof& p, const Formula& alpha,
                                        const Bounds& bounds = {}) {
  ProofCheckResult check = check_proof(p, bounds);
  if (!check.accepted())
    throw precondition_error("deduction_transform requires an accepted input proof (line " +
                             std::to_string(check.line + 1) + ": " + check.reason + ")");
  return detail::deduction_transform_unchecked(p, alpha);
}

}  // namespace lcl
