#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lcl/axioms.hpp"
#include "lcl/formula.hpp"
#include "lcl/infer.hpp"
#include "lcl/proof.hpp"

namespace lcl {

/// An axiom instance produced by saturation, with the scheme it instantiates
/// and the side-condition verification that admitted it.
struct SaturatedInstance {
  Formula formula;
  AxiomId id;
  SideConditionReport report;
};

struct SaturationResult {
  std::vector<SaturatedInstance> instances;
  bool truncated = false;  // some side condition or resource cap did not resolve
};

namespace detail {

constexpr std::size_t kMaxPoolStatements = 160;
constexpr std::size_t kMaxInstances = 400;

inline void collect_subtypes(const SimpleType& t, std::map<std::string, SimpleType>& out) {
  out.emplace(print_type(t), t);
  if (t.is_arrow()) {
    collect_subtypes(t.dom(), out);
    collect_subtypes(t.cod(), out);
  }
}

inline void collect_subterms(const Term& t, std::map<std::string, Term>& out) {
  out.emplace(print_term(t), t);
  if (t.is_app()) {
    collect_subterms(t.fun(), out);
    collect_subterms(t.arg(), out);
  }
}

}  // namespace detail

/// Instantiates Ax1-Ax5 over the statements occurring in the theory and the
/// goal, closed to the given depth: combinator axioms for every type in
/// sight that fits a scheme, Ax4 over application subterms, Ax5 between
/// subjects whose bounded extensional equality resolves True (normal forms
/// join the statement pool so reduced subjects participate).
inline SaturationResult saturate_axioms(const std::vector<Formula>& theory, const Formula& goal,
                                        const Bounds& bounds = {}) {
  SaturationResult out;
  std::map<std::string, Statement> pool;
  std::map<std::string, SaturatedInstance> instances;
  std::map<std::string, Term> app_subterms;  // applications occurring in original atoms

  auto add_statement = [&](const Statement& s) {
    if (pool.size() >= detail::kMaxPoolStatements) {
      out.truncated = true;
      return;
    }
    pool.emplace(print_statement(s), s);
  };

  std::vector<Formula> all = theory;
  all.push_back(goal);
  for (const Formula& f : all)
    f.for_each_atom([&](const Statement& s) {
      add_statement(s);
      std::map<std::string, Term> subs;
      detail::collect_subterms(s.subject, subs);
      for (const auto& [k, t] : subs)
        if (t.is_app()) app_subterms.emplace(k, t);
    });

  auto add_instance = [&](const Formula& f, AxiomId id, SideConditionReport rep) {
    if (instances.size() >= detail::kMaxInstances) {
      out.truncated = true;
      return;
    }
    instances.emplace(print_formula(f), SaturatedInstance{f, id, std::move(rep)});
  };

  for (int round = 0; round < bounds.depth; ++round) {
    std::map<std::string, Statement> snapshot = pool;

    // normal forms of pooled subjects join the pool
    for (const auto& [_, s] : snapshot) {
      NormalizeResult nf = normalize(s.subject, bounds.fuel);
      if (!nf.reached_normal_form) {
        out.truncated = true;
        continue;
      }
      if (nf.term != s.subject && atom_in_cl(nf.term, s.predicate))
        add_statement(Statement{nf.term, s.predicate});
    }

    // Ax1-Ax3 for every type in sight that fits a combinator scheme
    std::map<std::string, SimpleType> types;
    for (const auto& [_, s] : pool) detail::collect_subtypes(s.predicate, types);
    for (const auto& [_, t] : types) {
      struct {
        Term subject;
        AxiomId id;
      } combos[] = {{Term::S(), AxiomId::Ax1}, {Term::K(), AxiomId::Ax2}, {Term::I(), AxiomId::Ax3}};
      for (const auto& c : combos) {
        Formula cand = Formula::atom(c.subject, t);
        AxiomCheck chk = verify_axiom(cand, c.id, bounds);
        if (chk.status == AxiomCheck::Status::Ok) {
          add_instance(cand, c.id, chk.report);
          add_statement(cand.statement());
        }
      }
    }

    // Ax4 over application subterms of the original atoms
    for (const auto& [_, appt] : app_subterms) {
      for (const auto& [k1, sm] : pool) {
        if (sm.subject != appt.fun() || !sm.predicate.is_arrow()) continue;
        for (const auto& [k2, sn] : pool) {
          if (sn.subject != appt.arg() || sn.predicate != sm.predicate.dom()) continue;
          Statement sa{appt, sm.predicate.cod()};
          Formula cand = Formula::implies(
              Formula::atom(sm), Formula::implies(Formula::atom(sn), Formula::atom(sa)));
          AxiomCheck chk = verify_axiom(cand, AxiomId::Ax4, bounds);
          if (chk.status == AxiomCheck::Status::Ok) {
            add_instance(cand, AxiomId::Ax4, chk.report);
            add_statement(sa);
          }
        }
      }
    }

    // Ax5 between pooled subjects sharing a predicate
    for (const auto& [k1, sm] : snapshot) {
      for (const auto& [k2, sn] : snapshot) {
        if (k1 == k2 || sm.predicate != sn.predicate) continue;
        TriBool eq = ext_equal(sm.subject, sn.subject, bounds.fuel, bounds.arity);
        if (eq.is_unknown()) {
          out.truncated = true;
          continue;
        }
        if (!eq.is_true()) continue;
        Formula cand = Formula::implies(Formula::atom(sm), Formula::atom(sn));
        AxiomCheck chk = verify_axiom(cand, AxiomId::Ax5, bounds);
        if (chk.status == AxiomCheck::Status::Ok) add_instance(cand, AxiomId::Ax5, chk.report);
      }
    }
  }

  for (auto& [_, inst] : instances) out.instances.push_back(std::move(inst));
  return out;
}

}  // namespace lcl
