#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lcl/deduction.hpp"
#include "lcl/truth_table.hpp"

namespace lcl {

namespace detail {

inline HilbertProof identity_unchecked(const Formula& alpha) {
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

/// Cache of closed propositional theorems over Ax6-Ax8 + MP, built with the
/// proof builder and discharged with the deduction transformation. Every
/// construction here mirrors a textbook Hilbert-system derivation.
class Lemmas {
public:
  // alpha => alpha
  const HilbertProof& identity(const Formula& a) {
    return cache("id|" + print_formula(a), [&] { return identity_unchecked(a); });
  }

  // ~a => (a => b)
  const HilbertProof& ex_falso(const Formula& a, const Formula& b) {
    return cache("exf|" + print_formula(a) + "|" + print_formula(b), [&] {
      Formula na = Formula::negate(a), nb = Formula::negate(b);
      ProofBuilder pb(std::vector<Formula>{na, a});
      std::size_t h_na = pb.hyp(0);
      std::size_t h_a = pb.hyp(1);
      std::size_t l1 = pb.mp(pb.axiom(AxiomId::Ax6, Formula::implies(a, Formula::implies(nb, a))), h_a);
      std::size_t l2 =
          pb.mp(pb.axiom(AxiomId::Ax6, Formula::implies(na, Formula::implies(nb, na))), h_na);
      Formula ax8 = Formula::implies(
          Formula::implies(nb, na),
          Formula::implies(Formula::implies(nb, a), b));
      std::size_t l3 = pb.mp(pb.axiom(AxiomId::Ax8, ax8), l2);
      pb.mp(l3, l1);
      return discharge(discharge(pb.take(), a), na);
    });
  }

  // ~~a => a
  const HilbertProof& dne(const Formula& a) {
    return cache("dne|" + print_formula(a), [&] {
      Formula na = Formula::negate(a), nna = Formula::negate(na);
      ProofBuilder pb(std::vector<Formula>{nna});
      std::size_t h = pb.hyp(0);
      std::size_t l1 =
          pb.mp(pb.axiom(AxiomId::Ax6, Formula::implies(nna, Formula::implies(na, nna))), h);
      Formula ax8 = Formula::implies(Formula::implies(na, nna),
                                     Formula::implies(Formula::implies(na, na), a));
      std::size_t l2 = pb.mp(pb.axiom(AxiomId::Ax8, ax8), l1);
      std::size_t idp = pb.append_closed(identity(na));
      pb.mp(l2, idp);
      return discharge(pb.take(), nna);
    });
  }

  // a => ~~a
  const HilbertProof& dni(const Formula& a) {
    return cache("dni|" + print_formula(a), [&] {
      Formula na = Formula::negate(a), nna = Formula::negate(na), nnna = Formula::negate(nna);
      ProofBuilder pb(std::vector<Formula>{a});
      std::size_t h = pb.hyp(0);
      std::size_t dnena = pb.append_closed(dne(na));  // ~~~a => ~a
      Formula ax8 = Formula::implies(Formula::implies(nnna, na),
                                     Formula::implies(Formula::implies(nnna, a), nna));
      std::size_t l1 = pb.mp(pb.axiom(AxiomId::Ax8, ax8), dnena);
      std::size_t l2 =
          pb.mp(pb.axiom(AxiomId::Ax6, Formula::implies(a, Formula::implies(nnna, a))), h);
      pb.mp(l1, l2);
      return discharge(pb.take(), a);
    });
  }

  // (a => b) => ((b => c) => (a => c))
  const HilbertProof& hypothetical_syllogism(const Formula& a, const Formula& b, const Formula& c) {
    return cache("hs|" + print_formula(a) + "|" + print_formula(b) + "|" + print_formula(c), [&] {
      Formula ab = Formula::implies(a, b), bc = Formula::implies(b, c);
      ProofBuilder pb(std::vector<Formula>{ab, bc, a});
      std::size_t l1 = pb.mp(pb.hyp(0), pb.hyp(2));
      pb.mp(pb.hyp(1), l1);
      return discharge(discharge(discharge(pb.take(), a), bc), ab);
    });
  }

  // (a => b) => (~b => ~a)
  const HilbertProof& contraposition(const Formula& a, const Formula& b) {
    return cache("contra|" + print_formula(a) + "|" + print_formula(b), [&] {
      Formula ab = Formula::implies(a, b);
      Formula na = Formula::negate(a), nb = Formula::negate(b), nna = Formula::negate(na);
      ProofBuilder pb(std::vector<Formula>{ab, nb});
      std::size_t dnea = pb.append_closed(dne(a));  // ~~a => a
      std::size_t hs1 = pb.append_closed(hypothetical_syllogism(nna, a, b));
      std::size_t l1 = pb.mp(pb.mp(hs1, dnea), pb.hyp(0));  // ~~a => b
      std::size_t l2 =
          pb.mp(pb.axiom(AxiomId::Ax6, Formula::implies(nb, Formula::implies(nna, nb))), pb.hyp(1));
      Formula ax8 = Formula::implies(Formula::implies(nna, nb),
                                     Formula::implies(Formula::implies(nna, b), na));
      pb.mp(pb.mp(pb.axiom(AxiomId::Ax8, ax8), l2), l1);
      return discharge(discharge(pb.take(), nb), ab);
    });
  }

  // a => (~b => ~(a => b))
  const HilbertProof& negated_implication(const Formula& a, const Formula& b) {
    return cache("negimp|" + print_formula(a) + "|" + print_formula(b), [&] {
      Formula ab = Formula::implies(a, b);
      Formula nb = Formula::negate(b), nab = Formula::negate(ab), nnab = Formula::negate(nab);
      // inner: [a, ~b, a=>b] |- b, then discharge a=>b
      ProofBuilder inner(std::vector<Formula>{a, nb, ab});
      inner.mp(inner.hyp(2), inner.hyp(0));
      HilbertProof applied = discharge(inner.take(), ab);  // [a,~b] |- (a=>b) => b

      ProofBuilder pb(applied);
      std::size_t iq = pb.size() - 1;
      std::size_t dneab = pb.append_closed(dne(ab));  // ~~(a=>b) => (a=>b)
      std::size_t hs1 = pb.append_closed(hypothetical_syllogism(nnab, ab, b));
      std::size_t l1 = pb.mp(pb.mp(hs1, dneab), iq);  // ~~(a=>b) => b
      std::size_t l2 =
          pb.mp(pb.axiom(AxiomId::Ax6, Formula::implies(nb, Formula::implies(nnab, nb))), pb.hyp(1));
      Formula ax8 = Formula::implies(Formula::implies(nnab, nb),
                                     Formula::implies(Formula::implies(nnab, b), nab));
      pb.mp(pb.mp(pb.axiom(AxiomId::Ax8, ax8), l2), l1);
      return discharge(discharge(pb.take(), nb), a);
    });
  }

  // (a => g) => ((~a => g) => g)
  const HilbertProof& case_split(const Formula& a, const Formula& g) {
    return cache("cases|" + print_formula(a) + "|" + print_formula(g), [&] {
      Formula na = Formula::negate(a), ng = Formula::negate(g);
      Formula ag = Formula::implies(a, g), nag = Formula::implies(na, g);
      ProofBuilder pb(std::vector<Formula>{ag, nag});
      std::size_t c1 = pb.append_closed(contraposition(a, g));
      std::size_t l1 = pb.mp(c1, pb.hyp(0));  // ~g => ~a
      std::size_t c2 = pb.append_closed(contraposition(na, g));
      std::size_t l2 = pb.mp(c2, pb.hyp(1));  // ~g => ~~a
      Formula ax8 = Formula::implies(Formula::implies(ng, Formula::negate(na)),
                                     Formula::implies(Formula::implies(ng, na), g));
      pb.mp(pb.mp(pb.axiom(AxiomId::Ax8, ax8), l2), l1);
      return discharge(discharge(pb.take(), nag), ag);
    });
  }

private:
  template <typename Make>
  const HilbertProof& cache(const std::string& key, Make&& make) {
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, prune_proof(make())).first->second;
  }

  static HilbertProof discharge(const HilbertProof& p, const Formula& alpha) {
    return prune_proof(deduction_transform_unchecked(prune_proof(p), alpha));
  }

  std::map<std::string, HilbertProof> cache_;
};

// Kalmar's construction for one valuation: from the literal hypotheses
// l_i (the atom or its negation, per the valuation) derive goal^v for each
// subformula, bottom-up.
inline HilbertProof kalmar_valuation(const Formula& goal, const std::vector<Statement>& atoms,
                                     const std::vector<bool>& v, Lemmas& lemmas) {
  std::map<std::string, std::size_t> atom_index;
  std::vector<Formula> literals;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    atom_index[print_statement(atoms[i])] = i;
    Formula base = Formula::atom(atoms[i]);
    literals.push_back(v[i] ? base : Formula::negate(base));
  }
  ProofBuilder pb(literals);

  std::map<std::string, bool> valuation;
  for (std::size_t i = 0; i < atoms.size(); ++i) valuation[print_statement(atoms[i])] = v[i];

  std::map<std::string, std::size_t> memo;
  std::function<std::size_t(const Formula&)> prove = [&](const Formula& f) -> std::size_t {
    std::string key = print_formula(f);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
    std::size_t line = 0;
    switch (f.kind()) {
      case Formula::Kind::Atom:
        line = pb.hyp(atom_index.at(print_statement(f.statement())));
        break;
      case Formula::Kind::Not: {
        Formula inner = f.operand();
        std::size_t i = prove(inner);
        if (detail::eval_formula(inner, valuation)) {
          std::size_t d = pb.append_closed(lemmas.dni(inner));
          line = pb.mp(d, i);  // ~~inner
        } else {
          line = i;  // already ~inner
        }
        break;
      }
      case Formula::Kind::Implies: {
        Formula a = f.antecedent(), c = f.consequent();
        bool va = detail::eval_formula(a, valuation);
        bool vc = detail::eval_formula(c, valuation);
        if (!va) {
          std::size_t i = prove(a);  // ~a
          std::size_t l = pb.append_closed(lemmas.ex_falso(a, c));
          line = pb.mp(l, i);
        } else if (vc) {
          std::size_t i = prove(c);
          std::size_t ax6 = pb.axiom(AxiomId::Ax6, Formula::implies(c, f));
          line = pb.mp(ax6, i);
        } else {
          std::size_t i = prove(a);
          std::size_t j = prove(c);  // ~c
          std::size_t l = pb.append_closed(lemmas.negated_implication(a, c));
          line = pb.mp(pb.mp(l, i), j);  // ~(a => c)
        }
        break;
      }
    }
    memo[key] = line;
    return line;
  };

  std::size_t final_line = prove(goal);
  if (final_line + 1 != pb.size()) {
    std::size_t id = pb.append_closed(lemmas.identity(goal));
    pb.mp(id, final_line);
  }
  return prune_proof(pb.take());
}

/// Closed Hilbert proof of a propositional tautology over Ax6-Ax8 + MP:
/// Kalmar valuation proofs combined by discharging one atom at a time.
inline HilbertProof prove_tautology(const Formula& goal, Lemmas& lemmas) {
  for (AxiomId id : {AxiomId::Ax6, AxiomId::Ax7, AxiomId::Ax8}) {
    if (verify_axiom(goal, id).status == AxiomCheck::Status::Ok) {
      ProofBuilder pb(std::vector<Formula>{});
      pb.axiom(id, goal);
      return pb.take();
    }
  }

  std::vector<Statement> atoms = collect_atoms({goal});
  std::function<HilbertProof(std::vector<bool>&)> build =
      [&](std::vector<bool>& prefix) -> HilbertProof {
    if (prefix.size() == atoms.size()) return kalmar_valuation(goal, atoms, prefix, lemmas);
    Formula atom_k = Formula::atom(atoms[prefix.size()]);
    prefix.push_back(true);
    HilbertProof pt = build(prefix);
    prefix.back() = false;
    HilbertProof pf = build(prefix);
    prefix.pop_back();

    HilbertProof qt = prune_proof(deduction_transform_unchecked(pt, atom_k));
    HilbertProof qf = prune_proof(deduction_transform_unchecked(pf, Formula::negate(atom_k)));

    std::vector<Formula> literals;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      Formula base = Formula::atom(atoms[i]);
      literals.push_back(prefix[i] ? base : Formula::negate(base));
    }
    ProofBuilder pb(literals);
    std::size_t it = pb.append_same_theory(qt);
    std::size_t ifalse = pb.append_same_theory(qf);
    std::size_t c = pb.append_closed(lemmas.case_split(atom_k, goal));
    pb.mp(pb.mp(c, it), ifalse);
    return prune_proof(pb.take());
  };
  std::vector<bool> prefix;
  return build(prefix);
}

}  // namespace detail

/// Constructive propositional completeness: builds an accepted Hilbert proof
/// of goal from theory using only Ax6-Ax8, MP and theory lines. Requires
/// truth-table entailment; refuses otherwise.
inline HilbertProof synthesize_proof(const std::vector<Formula>& theory, const Formula& goal) {
  TruthTableResult tt = truth_table_valid(theory, goal);
  if (!tt.entailed) {
    std::string cv;
    for (const auto& [atom, val] : tt.countervaluation)
      cv += (cv.empty() ? "" : ", ") + atom + " := " + (val ? "T" : "F");
    throw precondition_error("synthesize_proof: goal is not entailed (countervaluation: " + cv + ")");
  }

  // Keep only the hypotheses the entailment needs; the chain tautology stays
  // small that way.
  std::vector<Formula> used = theory;
  for (std::size_t i = used.size(); i-- > 0;) {
    std::vector<Formula> trimmed = used;
    trimmed.erase(trimmed.begin() + static_cast<std::ptrdiff_t>(i));
    if (truth_table_valid(trimmed, goal).entailed) used = std::move(trimmed);
  }

  detail::Lemmas lemmas;
  Formula chain = goal;
  for (std::size_t i = used.size(); i-- > 0;) chain = Formula::implies(used[i], chain);
  HilbertProof closed = detail::prove_tautology(chain, lemmas);

  if (used.empty()) return closed;

  ProofBuilder pb(theory);
  std::size_t cur = pb.append_closed(closed);
  for (const Formula& u : used) {
    std::size_t k = 0;
    while (theory[k] != u) ++k;
    std::size_t h = pb.hyp(k);
    cur = pb.mp(cur, h);
  }
  return prune_proof(pb.take());
}

}  // namespace lcl
