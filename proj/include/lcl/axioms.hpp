#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lcl/config.hpp"
#include "lcl/formula.hpp"
#include "lcl/infer.hpp"
#include "lcl/reduction.hpp"
#include "lcl/tribool.hpp"

namespace lcl {

enum class AxiomId { Ax1 = 1, Ax2, Ax3, Ax4, Ax5, Ax6, Ax7, Ax8 };

inline std::string axiom_name(AxiomId id) { return "Ax" + std::to_string(static_cast<int>(id)); }

/// Verification record for the side conditions an axiom instance carries:
/// Ax4's three typability checks, Ax5's equality verdict with the bounds it
/// was decided under.
struct SideConditionReport {
  std::optional<std::array<bool, 3>> typability;  // Ax4: M, N, MN / Ax5: M, N (third unused)
  std::optional<TriBool> equality;                // Ax5
  Bounds bounds;
};

struct AxiomCheck {
  enum class Status { Ok, Fail, Unknown };
  Status status;
  std::string instantiation;  // metavariable bindings, printable
  SideConditionReport report;
  std::string reason;  // Fail only
};

namespace detail {

// Matches an atom C : tau against a combinator's type scheme.
inline std::optional<std::string> match_combinator_axiom(const Formula& f, Term::Kind comb) {
  if (!f.is_atom()) return std::nullopt;
  const Statement& s = f.statement();
  if (s.subject.kind() != comb) return std::nullopt;
  SimpleType a = SimpleType::var("?a"), b = SimpleType::var("?b"), c = SimpleType::var("?c");
  SimpleType scheme = comb == Term::Kind::S
                          ? arrow(arrow(a, arrow(b, c)), arrow(arrow(a, b), arrow(a, c)))
                      : comb == Term::Kind::K ? arrow(a, arrow(b, a))
                                              : arrow(a, a);
  std::map<std::string, SimpleType> binding;
  if (!match_type(scheme, s.predicate, {"?a", "?b", "?c"}, binding)) return std::nullopt;
  std::string inst;
  const char* names = "str";  // sigma, tau, rho
  int i = 0;
  for (const char* key : {"?a", "?b", "?c"}) {
    auto it = binding.find(key);
    if (it == binding.end()) break;
    if (!inst.empty()) inst += ", ";
    inst += std::string(1, names[i++]) + "=" + print_type(it->second);
  }
  return inst;
}

}  // namespace detail

/// Verifies that f is an instance of the given axiom scheme, re-deriving the
/// instantiation rather than trusting any claimed one.
inline AxiomCheck verify_axiom(const Formula& f, AxiomId id, const Bounds& bounds = {}) {
  auto fail = [&](std::string why) {
    return AxiomCheck{AxiomCheck::Status::Fail, {}, {}, std::move(why)};
  };
  auto ok = [&](std::string inst, SideConditionReport rep = {}) {
    rep.bounds = bounds;
    return AxiomCheck{AxiomCheck::Status::Ok, std::move(inst), std::move(rep), {}};
  };

  switch (id) {
    case AxiomId::Ax1:
    case AxiomId::Ax2:
    case AxiomId::Ax3: {
      Term::Kind comb = id == AxiomId::Ax1   ? Term::Kind::S
                        : id == AxiomId::Ax2 ? Term::Kind::K
                                             : Term::Kind::I;
      if (auto inst = detail::match_combinator_axiom(f, comb)) return ok(*inst);
      return fail("not an instance of the " + axiom_name(id) + " type scheme");
    }
    case AxiomId::Ax4: {
      // (M : s -> t) => ((N : s) => (M N : t)), all three statements in CL->
      if (!f.is_implies() || !f.antecedent().is_atom()) return fail("Ax4 shape mismatch");
      Formula inner = f.consequent();
      if (!inner.is_implies() || !inner.antecedent().is_atom() || !inner.consequent().is_atom())
        return fail("Ax4 shape mismatch");
      const Statement& sm = f.antecedent().statement();
      const Statement& sn = inner.antecedent().statement();
      const Statement& sa = inner.consequent().statement();
      if (!sm.predicate.is_arrow()) return fail("Ax4: M's predicate must be an arrow");
      if (sm.predicate.dom() != sn.predicate) return fail("Ax4: N's predicate must be the domain");
      if (sm.predicate.cod() != sa.predicate) return fail("Ax4: MN's predicate must be the codomain");
      if (!sa.subject.is_app() || sa.subject.fun() != sm.subject || sa.subject.arg() != sn.subject)
        return fail("Ax4: third subject must be the application of the first two");
      SideConditionReport rep;
      rep.typability = {atom_in_cl(sm.subject, sm.predicate), atom_in_cl(sn.subject, sn.predicate),
                        atom_in_cl(sa.subject, sa.predicate)};
      if (!(*rep.typability)[0] || !(*rep.typability)[1] || !(*rep.typability)[2])
        return fail("Ax4: side condition M, N, MN ∈ CL-> fails");
      return ok("M=" + print_term(sm.subject) + ", N=" + print_term(sn.subject) +
                    ", s=" + print_type(sn.predicate) + ", t=" + print_type(sa.predicate),
                rep);
    }
    case AxiomId::Ax5: {
      // M : s => N : s, if M =w,eta N and both statements in CL->
      if (!f.is_implies() || !f.antecedent().is_atom() || !f.consequent().is_atom())
        return fail("Ax5 shape mismatch");
      const Statement& sm = f.antecedent().statement();
      const Statement& sn = f.consequent().statement();
      if (sm.predicate != sn.predicate) return fail("Ax5: both statements need the same predicate");
      SideConditionReport rep;
      rep.typability = {atom_in_cl(sm.subject, sm.predicate), atom_in_cl(sn.subject, sn.predicate),
                        true};
      if (!(*rep.typability)[0] || !(*rep.typability)[1])
        return fail("Ax5: side condition M : s, N : s ∈ CL-> fails");
      TriBool eq = ext_equal(sm.subject, sn.subject, bounds.fuel, bounds.arity);
      rep.equality = eq;
      rep.bounds = bounds;
      if (eq.is_false()) return fail("Ax5: subjects are not extensionally weakly equal");
      if (eq.is_unknown())
        return AxiomCheck{AxiomCheck::Status::Unknown, {}, rep,
                          "Ax5: equality undecided within bounds (" + eq.reason() + ")"};
      return ok("M=" + print_term(sm.subject) + ", N=" + print_term(sn.subject) +
                    ", s=" + print_type(sm.predicate),
                rep);
    }
    case AxiomId::Ax6: {
      // a => (b => a)
      if (!f.is_implies() || !f.consequent().is_implies()) return fail("Ax6 shape mismatch");
      if (f.antecedent() != f.consequent().consequent()) return fail("Ax6: alpha occurrences differ");
      return ok("a=" + print_formula(f.antecedent()) +
                ", b=" + print_formula(f.consequent().antecedent()));
    }
    case AxiomId::Ax7: {
      // (a => (b => c)) => ((a => b) => (a => c))
      if (!f.is_implies()) return fail("Ax7 shape mismatch");
      Formula l = f.antecedent(), r = f.consequent();
      if (!l.is_implies() || !l.consequent().is_implies()) return fail("Ax7 shape mismatch");
      Formula a = l.antecedent(), b = l.consequent().antecedent(), c = l.consequent().consequent();
      if (!r.is_implies() || !r.antecedent().is_implies() || !r.consequent().is_implies())
        return fail("Ax7 shape mismatch");
      if (r.antecedent().antecedent() != a || r.antecedent().consequent() != b)
        return fail("Ax7: (a => b) component mismatch");
      if (r.consequent().antecedent() != a || r.consequent().consequent() != c)
        return fail("Ax7: (a => c) component mismatch");
      return ok("a=" + print_formula(a) + ", b=" + print_formula(b) + ", c=" + print_formula(c));
    }
    case AxiomId::Ax8: {
      // (~a => ~b) => ((~a => b) => a)
      if (!f.is_implies()) return fail("Ax8 shape mismatch");
      Formula l = f.antecedent(), r = f.consequent();
      if (!l.is_implies() || !l.antecedent().is_not() || !l.consequent().is_not())
        return fail("Ax8 shape mismatch");
      Formula a = l.antecedent().operand(), b = l.consequent().operand();
      if (!r.is_implies() || !r.antecedent().is_implies()) return fail("Ax8 shape mismatch");
      if (!r.antecedent().antecedent().is_not() || r.antecedent().antecedent().operand() != a)
        return fail("Ax8: ~a component mismatch");
      if (r.antecedent().consequent() != b) return fail("Ax8: b component mismatch");
      if (r.consequent() != a) return fail("Ax8: conclusion must be a");
      return ok("a=" + print_formula(a) + ", b=" + print_formula(b));
    }
  }
  return fail("unknown axiom id");
}

struct MatchResult {
  enum class Status { Match, NoMatch, UnknownSideCondition };
  Status status;
  AxiomId id;  // Match only
  std::string instantiation;
  SideConditionReport report;
};

/// Tries every axiom scheme in order Ax1..Ax8. Ambiguity is resolved by the
/// first scheme that fits; UnknownSideCondition is reported when the only
/// blocker was an Ax5 equality that did not resolve within bounds.
inline MatchResult match_axiom(const Formula& f, const Bounds& bounds = {}) {
  std::optional<AxiomCheck> unknown;
  for (int i = 1; i <= 8; ++i) {
    AxiomId id = static_cast<AxiomId>(i);
    AxiomCheck c = verify_axiom(f, id, bounds);
    if (c.status == AxiomCheck::Status::Ok)
      return MatchResult{MatchResult::Status::Match, id, c.instantiation, c.report};
    if (c.status == AxiomCheck::Status::Unknown && !unknown) unknown = c;
  }
  if (unknown)
    return MatchResult{MatchResult::Status::UnknownSideCondition, AxiomId::Ax5, {}, unknown->report};
  return MatchResult{MatchResult::Status::NoMatch, AxiomId::Ax1, {}, {}};
}

}  // namespace lcl
