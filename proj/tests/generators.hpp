#pragma once

// Deterministic random generators shared by the unit and acceptance suites.
// Everything is seeded explicitly so failures reproduce.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "lcl/lcl.hpp"

namespace gen {

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// ---- terms ------------------------------------------------------------------

inline lcl::Term random_term(Rng& rng, int max_size,
                             const std::vector<std::string>& vars = {"x", "y", "z"}) {
  if (max_size <= 1) {
    switch (pick(rng, 0, 3)) {
      case 0: return lcl::Term::S();
      case 1: return lcl::Term::K();
      case 2: return lcl::Term::I();
      default: return lcl::Term::var(vars[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(vars.size()) - 1))]);
    }
  }
  if (chance(rng, 0.3)) return random_term(rng, 1, vars);
  int left = pick(rng, 1, max_size - 1);
  return lcl::Term::app(random_term(rng, left, vars), random_term(rng, max_size - left, vars));
}

// ---- types ------------------------------------------------------------------

inline lcl::SimpleType random_type(Rng& rng, int max_depth,
                                   const std::vector<std::string>& vars = {"a", "b", "c", "d"}) {
  if (max_depth <= 0 || chance(rng, 0.4))
    return lcl::SimpleType::var(vars[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(vars.size()) - 1))]);
  return lcl::arrow(random_type(rng, max_depth - 1, vars), random_type(rng, max_depth - 1, vars));
}

// ---- EQ derivations -----------------------------------------------------------

using EqPtr = std::shared_ptr<const lcl::EqDerivation>;

inline EqPtr random_eq_axiom(Rng& rng, int term_size) {
  using lcl::EqDerivation;
  using lcl::EqRule;
  using lcl::Term;
  switch (pick(rng, 0, 3)) {
    case 0: {
      Term l = random_term(rng, term_size);
      return EqDerivation::axiom(EqRule::Id, l, l);
    }
    case 1: {
      Term m = random_term(rng, term_size), n = random_term(rng, term_size),
           l = random_term(rng, term_size);
      Term lhs = lcl::app(Term::S(), m, n, l);
      Term rhs = Term::app(Term::app(m, l), Term::app(n, l));
      return EqDerivation::axiom(EqRule::S, lhs, rhs);
    }
    case 2: {
      Term m = random_term(rng, term_size), n = random_term(rng, term_size);
      return EqDerivation::axiom(EqRule::K, lcl::app(Term::K(), m, n), m);
    }
    default: {
      Term m = random_term(rng, term_size);
      return EqDerivation::axiom(EqRule::I, Term::app(Term::I(), m), m);
    }
  }
}

// axiom (or identity) whose left side is exactly `lhs`
inline EqPtr eq_axiom_from_lhs(const lcl::Term& lhs) {
  using lcl::EqDerivation;
  using lcl::EqRule;
  if (auto k = lcl::detail::redex_kind_at(lhs)) {
    lcl::Term rhs = lcl::detail::contract(lhs, *k);
    EqRule rule = *k == lcl::RedexKind::S   ? EqRule::S
                  : *k == lcl::RedexKind::K ? EqRule::K
                                            : EqRule::I;
    return EqDerivation::axiom(rule, lhs, rhs);
  }
  return EqDerivation::axiom(EqRule::Id, lhs, lhs);
}

// the classic extensional derivation: S K K = I via (ext)
inline EqPtr skk_ext_derivation(const std::string& var = "w") {
  using lcl::EqDerivation;
  using lcl::EqRule;
  using lcl::Term;
  Term x = Term::var(var);
  Term skkx = lcl::app(Term::S(), Term::K(), Term::K(), x);
  Term mid = Term::app(Term::app(Term::K(), x), Term::app(Term::K(), x));
  EqPtr ax_s = EqDerivation::axiom(EqRule::S, skkx, mid);
  EqPtr ax_k = EqDerivation::axiom(EqRule::K, mid, x);
  EqPtr t1 = EqDerivation::infer(EqRule::Trans, skkx, x, {ax_s, ax_k});
  EqPtr ax_i = EqDerivation::axiom(EqRule::I, Term::app(Term::I(), x), x);
  EqPtr sym_i = EqDerivation::infer(EqRule::Sym, x, Term::app(Term::I(), x), {ax_i});
  EqPtr t2 = EqDerivation::infer(EqRule::Trans, skkx, Term::app(Term::I(), x), {t1, sym_i});
  return EqDerivation::infer(EqRule::Ext, lcl::app(Term::S(), Term::K(), Term::K()), Term::I(),
                             {t2}, var);
}

inline EqPtr random_eq_derivation(Rng& rng, int budget, int term_size, bool allow_ext) {
  using lcl::EqDerivation;
  using lcl::EqRule;
  using lcl::Term;
  if (budget <= 1) return random_eq_axiom(rng, term_size);
  switch (pick(rng, 0, allow_ext ? 5 : 4)) {
    case 0: {  // sym
      EqPtr c = random_eq_derivation(rng, budget - 1, term_size, allow_ext);
      return EqDerivation::infer(EqRule::Sym, c->rhs, c->lhs, {c});
    }
    case 1: {  // trans, right premise synthesized from the middle term
      EqPtr c1 = random_eq_derivation(rng, budget - 2, term_size, allow_ext);
      EqPtr c2 = eq_axiom_from_lhs(c1->rhs);
      return EqDerivation::infer(EqRule::Trans, c1->lhs, c2->rhs, {c1, c2});
    }
    case 2: {  // app-l
      EqPtr c = random_eq_derivation(rng, budget - 1, term_size, allow_ext);
      Term p = random_term(rng, 2);
      return EqDerivation::infer(EqRule::AppL, Term::app(c->lhs, p), Term::app(c->rhs, p), {c});
    }
    case 3: {  // app-r
      EqPtr c = random_eq_derivation(rng, budget - 1, term_size, allow_ext);
      Term p = random_term(rng, 2);
      return EqDerivation::infer(EqRule::AppR, Term::app(p, c->lhs), Term::app(p, c->rhs), {c});
    }
    case 4:
      return random_eq_axiom(rng, term_size);
    default: {  // ext: conclude M = N from (M w = N w)
      EqPtr base = random_eq_axiom(rng, term_size);
      std::string fresh = "w0";
      int i = 0;
      auto fv = lcl::free_vars(base->lhs);
      auto fv2 = lcl::free_vars(base->rhs);
      fv.insert(fv2.begin(), fv2.end());
      while (fv.count(fresh)) fresh = "w" + std::to_string(++i);
      Term x = Term::var(fresh);
      EqPtr applied = EqDerivation::infer(EqRule::AppL, Term::app(base->lhs, x),
                                          Term::app(base->rhs, x), {base});
      return EqDerivation::infer(EqRule::Ext, base->lhs, base->rhs, {applied}, fresh);
    }
  }
}

// ---- formulas and proofs -------------------------------------------------------

/// Atoms that are all well formed (each subject typable at its predicate).
inline std::vector<lcl::Formula> wf_atom_pool() {
  using lcl::Formula;
  using lcl::SimpleType;
  using lcl::Term;
  SimpleType a = SimpleType::var("a"), b = SimpleType::var("b"), c = SimpleType::var("c");
  return {
      Formula::atom(Term::var("x"), a),
      Formula::atom(Term::var("y"), b),
      Formula::atom(Term::var("z"), c),
      Formula::atom(Term::var("f"), lcl::arrow(a, b)),
      Formula::atom(Term::K(), lcl::arrow(a, lcl::arrow(b, a))),
      Formula::atom(Term::I(), lcl::arrow(a, a)),
      Formula::atom(Term::app(Term::var("f"), Term::var("x")), b),
  };
}

inline lcl::Formula random_formula(Rng& rng, int depth,
                                   const std::vector<lcl::Formula>& atoms) {
  if (depth <= 0 || chance(rng, 0.4))
    return atoms[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(atoms.size()) - 1))];
  if (chance(rng, 0.4)) return lcl::Formula::negate(random_formula(rng, depth - 1, atoms));
  return lcl::Formula::implies(random_formula(rng, depth - 1, atoms),
                               random_formula(rng, depth - 1, atoms));
}

/// A random axiom instance over well-formed components, with its id.
inline std::pair<lcl::Formula, lcl::AxiomId> random_axiom_instance(
    Rng& rng, const std::vector<lcl::Formula>& atoms) {
  using lcl::AxiomId;
  using lcl::Formula;
  using lcl::SimpleType;
  using lcl::Term;
  switch (pick(rng, 0, 7)) {
    case 0: {
      SimpleType s = random_type(rng, 1), t = random_type(rng, 1), r = random_type(rng, 1);
      return {Formula::atom(Term::S(), lcl::arrow(lcl::arrow(s, lcl::arrow(t, r)),
                                                  lcl::arrow(lcl::arrow(s, t), lcl::arrow(s, r)))),
              AxiomId::Ax1};
    }
    case 1: {
      SimpleType s = random_type(rng, 1), t = random_type(rng, 1);
      return {Formula::atom(Term::K(), lcl::arrow(s, lcl::arrow(t, s))), AxiomId::Ax2};
    }
    case 2: {
      SimpleType s = random_type(rng, 1);
      return {Formula::atom(Term::I(), lcl::arrow(s, s)), AxiomId::Ax3};
    }
    case 3: {
      // variables keep every component typable from some basis
      SimpleType s = random_type(rng, 1), t = random_type(rng, 1);
      Term m = Term::var("u"), n = Term::var("v");
      return {Formula::implies(
                  Formula::atom(m, lcl::arrow(s, t)),
                  Formula::implies(Formula::atom(n, s), Formula::atom(Term::app(m, n), t))),
              AxiomId::Ax4};
    }
    case 4: {
      SimpleType s = random_type(rng, 1);
      Term v = Term::var("v");
      Term lhs = chance(rng, 0.5) ? lcl::app(Term::K(), v, Term::var("u"))
                                  : Term::app(Term::I(), v);
      if (chance(rng, 0.5)) return {Formula::implies(Formula::atom(lhs, s), Formula::atom(v, s)),
                                    AxiomId::Ax5};
      return {Formula::implies(Formula::atom(v, s), Formula::atom(lhs, s)), AxiomId::Ax5};
    }
    case 5: {
      Formula a = random_formula(rng, 1, atoms), b = random_formula(rng, 1, atoms);
      return {Formula::implies(a, Formula::implies(b, a)), AxiomId::Ax6};
    }
    case 6: {
      Formula a = random_formula(rng, 1, atoms), b = random_formula(rng, 1, atoms),
              c = random_formula(rng, 1, atoms);
      return {Formula::implies(
                  Formula::implies(a, Formula::implies(b, c)),
                  Formula::implies(Formula::implies(a, b), Formula::implies(a, c))),
              AxiomId::Ax7};
    }
    default: {
      Formula a = random_formula(rng, 1, atoms), b = random_formula(rng, 1, atoms);
      return {Formula::implies(
                  Formula::implies(Formula::negate(a), Formula::negate(b)),
                  Formula::implies(Formula::implies(Formula::negate(a), b), a)),
              AxiomId::Ax8};
    }
  }
}

/// A random accepted Hilbert proof (hypotheses, axiom instances, MP closure).
inline lcl::HilbertProof random_accepted_proof(Rng& rng, int max_lines,
                                               const std::vector<lcl::Formula>& theory) {
  using lcl::AxiomId;
  using lcl::Formula;
  std::vector<lcl::Formula> atoms = wf_atom_pool();
  lcl::ProofBuilder pb(theory);
  int lines = pick(rng, 3, max_lines);
  for (int i = 0; i < lines; ++i) {
    int kind = pick(rng, 0, 2);
    if (kind == 0 && !theory.empty()) {
      pb.hyp(static_cast<std::size_t>(pick(rng, 0, static_cast<int>(theory.size()) - 1)));
      continue;
    }
    if (kind == 2 && pb.size() >= 2) {
      // try a few random pairs for a modus ponens fit
      bool done = false;
      for (int attempt = 0; attempt < 8 && !done; ++attempt) {
        std::size_t a = static_cast<std::size_t>(pick(rng, 0, static_cast<int>(pb.size()) - 1));
        const Formula& fa = pb.formula(a);
        if (!fa.is_implies()) continue;
        for (std::size_t b = 0; b < pb.size(); ++b) {
          if (pb.formula(b) == fa.antecedent()) {
            pb.mp(a, b);
            done = true;
            break;
          }
        }
      }
      if (done) continue;
    }
    auto [formula, id] = random_axiom_instance(rng, atoms);
    pb.axiom(id, formula);
  }
  return pb.take();
}

/// Random (gamma, term, principal instance) triples with the term typable.
struct TypableTriple {
  lcl::Basis gamma;
  lcl::Term term;
  lcl::SimpleType sigma;
};

inline std::optional<TypableTriple> random_typable_triple(Rng& rng, int max_size) {
  lcl::Term m = random_term(rng, max_size);
  lcl::Basis fresh;
  int i = 0;
  for (const auto& v : lcl::free_vars(m))
    fresh.declare(v, lcl::SimpleType::var(std::string(1, static_cast<char>('p' + (i++ % 8)))));
  auto principal = lcl::infer_type(fresh, m);
  if (!principal) return std::nullopt;
  // ground the principal type's variables randomly for an instance
  lcl::TypeSubstitution sub;
  for (const auto& v : lcl::type_vars(*principal))
    if (chance(rng, 0.5)) sub.bind(v, random_type(rng, 1));
  lcl::SimpleType sigma = sub.apply(*principal);
  // the basis participates in the same instantiation only through its
  // rigid variables, which infer_type kept; instantiate gamma consistently
  lcl::Basis gamma;
  for (const auto& [x, t] : fresh.declarations()) gamma.declare(x, sub.apply(t));
  if (!lcl::check_typing(gamma, m, sigma)) return std::nullopt;
  return TypableTriple{gamma, m, sigma};
}

}  // namespace gen
