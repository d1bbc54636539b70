#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcl/basis.hpp"
#include "lcl/config.hpp"
#include "lcl/formula.hpp"
#include "lcl/infer.hpp"
#include "lcl/reduction.hpp"
#include "lcl/term.hpp"
#include "lcl/tribool.hpp"

namespace lcl {

/// Applicative structure for LCL over syntactic representatives: elements
/// are terms standing for their equivalence classes; equality and carrier
/// membership are the structure's to decide (bounded, hence TriBool).
class ApplicativeStructure {
public:
  virtual ~ApplicativeStructure() = default;

  virtual Term apply(const Term& f, const Term& a) const { return Term::app(f, a); }
  virtual Term s() const { return Term::S(); }
  virtual Term k() const { return Term::K(); }
  virtual Term i() const { return Term::I(); }

  virtual TriBool equal(const Term& a, const Term& b) const = 0;
  virtual TriBool member(const Term& element, const SimpleType& sigma) const = 0;
};

/// The term model M^Γ: elements are terms regarded as representatives of
/// their =w,eta classes under the stored bounds; A^sigma is CL->=
/// typability from Γ; s, k, i are S, K, I.
class TermModel final : public ApplicativeStructure {
public:
  TermModel(Basis basis, Bounds bounds) : basis_(std::move(basis)), bounds_(bounds) {}

  const Basis& basis() const { return basis_; }
  const Bounds& bounds() const { return bounds_; }

  TriBool equal(const Term& a, const Term& b) const override {
    return ext_equal(a, b, bounds_.fuel, bounds_.arity);
  }
  TriBool member(const Term& element, const SimpleType& sigma) const override {
    return check_typing_eq(basis_, element, sigma, bounds_);
  }

private:
  Basis basis_;
  Bounds bounds_;
};

inline TermModel term_model(const Basis& gamma, const Bounds& bounds = {}) {
  return TermModel(gamma, bounds);
}

/// Total map from term variables to elements: a finite override map over the
/// standard default rho*(x) = x.
class Environment {
public:
  static Environment standard() { return Environment(); }

  Environment& set(const std::string& name, Term element) {
    map_.insert_or_assign(name, std::move(element));
    return *this;
  }

  Term lookup(const std::string& name) const {
    auto it = map_.find(name);
    return it == map_.end() ? Term::var(name) : it->second;
  }

  const std::map<std::string, Term>& overrides() const { return map_; }

private:
  std::map<std::string, Term> map_;
};

/// ⟦m⟧ρ: variables through the environment, S/K/I to the structure's
/// distinguished elements, applications through the structure's operation.
inline Term interpret(const Term& m, const Environment& env, const ApplicativeStructure& a) {
  switch (m.kind()) {
    case Term::Kind::Var: return env.lookup(m.var_name());
    case Term::Kind::S: return a.s();
    case Term::Kind::K: return a.k();
    case Term::Kind::I: return a.i();
    case Term::Kind::App:
      return a.apply(interpret(m.fun(), env, a), interpret(m.arg(), env, a));
  }
  return m;
}

struct AtomTrace {
  Statement statement;
  Term element;  // interpretation of the subject
  TriBool verdict;
};

/// Satisfaction verdict with the atom-level evidence that produced it.
struct SatVerdict {
  TriBool value;
  std::vector<AtomTrace> atoms;
};

namespace detail {

inline TriBool satisfies_rec(const ApplicativeStructure& a, const Environment& env,
                             const Formula& f, std::vector<AtomTrace>& trace) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const Statement& s = f.statement();
      Term element = interpret(s.subject, env, a);
      TriBool v = a.member(element, s.predicate);
      trace.push_back(AtomTrace{s, element, v});
      return v;
    }
    case Formula::Kind::Not:
      return !satisfies_rec(a, env, f.operand(), trace);
    case Formula::Kind::Implies: {
      TriBool l = satisfies_rec(a, env, f.antecedent(), trace);
      TriBool r = satisfies_rec(a, env, f.consequent(), trace);
      return implies(l, r);
    }
  }
  return TriBool::unknown("unreachable");
}

}  // namespace detail

/// Three-valued satisfaction: classical truth over atoms with Kleene
/// propagation of Unknown.
inline SatVerdict satisfies(const ApplicativeStructure& a, const Environment& env,
                            const Formula& f) {
  SatVerdict out{TriBool::unknown(""), {}};
  out.value = detail::satisfies_rec(a, env, f, out.atoms);
  return out;
}

// ---- structure sanity checking ---------------------------------------------

struct StructureViolation {
  std::string equation;
  std::vector<Term> witnesses;
};

struct StructureReport {
  std::vector<StructureViolation> violations;
  int checked = 0;
  int unknowns = 0;

  bool ok() const { return violations.empty(); }
};

/// Verifies the defining s/k/i equations and carrier-application closure on
/// the sample elements (and sample types, for the closure condition).
inline StructureReport check_structure(const ApplicativeStructure& a,
                                       const std::vector<Term>& samples,
                                       const std::vector<SimpleType>& sample_types = {}) {
  StructureReport rep;
  auto record = [&](const TriBool& verdict, const std::string& equation,
                    std::vector<Term> witnesses) {
    ++rep.checked;
    if (verdict.is_unknown()) ++rep.unknowns;
    if (verdict.is_false()) rep.violations.push_back(StructureViolation{equation, std::move(witnesses)});
  };

  for (const Term& d : samples) {
    record(a.equal(a.apply(a.i(), d), d), "i . d = d", {d});
    for (const Term& e : samples) {
      record(a.equal(a.apply(a.apply(a.k(), d), e), d), "(k . d) . e = d", {d, e});
      for (const Term& f : samples) {
        Term lhs = a.apply(a.apply(a.apply(a.s(), d), e), f);
        Term rhs = a.apply(a.apply(d, f), a.apply(e, f));
        record(a.equal(lhs, rhs), "((s . d) . e) . f = (d . f) . (e . f)", {d, e, f});
      }
    }
  }

  for (const SimpleType& t : sample_types) {
    if (!t.is_arrow()) continue;
    for (const Term& d : samples) {
      if (!a.member(d, t).is_true()) continue;
      for (const Term& e : samples) {
        if (!a.member(e, t.dom()).is_true()) continue;
        TriBool closure = a.member(a.apply(d, e), t.cod());
        ++rep.checked;
        if (closure.is_unknown()) ++rep.unknowns;
        if (closure.is_false())
          rep.violations.push_back(
              StructureViolation{"application must stay inside the carriers", {d, e}});
      }
    }
  }
  return rep;
}

// ---- semantic consequence over term-model families --------------------------

struct ModelRecord {
  Basis gamma;
  std::vector<std::pair<Formula, SatVerdict>> theory_verdicts;
  SatVerdict goal_verdict;
  bool theory_definitely_holds = false;
  bool goal_definitely_fails = false;
};

struct SemanticCheckResult {
  bool counterexample_found = false;
  std::optional<Basis> witness;
  std::vector<ModelRecord> records;
};

/// Evaluates theory and goal in term_model(Γ) under rho* for each supplied
/// Γ. A counterexample needs the theory definitively True and the goal
/// definitively False; Unknowns only ever skip.
inline SemanticCheckResult semantic_check(const std::vector<Formula>& theory, const Formula& goal,
                                          const std::vector<Basis>& gammas,
                                          const Bounds& bounds = {}) {
  SemanticCheckResult out;
  Environment rho = Environment::standard();
  for (const Basis& gamma : gammas) {
    TermModel model = term_model(gamma, bounds);
    ModelRecord rec{gamma, {}, SatVerdict{TriBool::unknown(""), {}}, true, false};
    for (const Formula& t : theory) {
      SatVerdict v = satisfies(model, rho, t);
      if (!v.value.is_true()) rec.theory_definitely_holds = false;
      rec.theory_verdicts.emplace_back(t, std::move(v));
    }
    rec.goal_verdict = satisfies(model, rho, goal);
    rec.goal_definitely_fails = rec.goal_verdict.value.is_false();
    bool hit = rec.theory_definitely_holds && rec.goal_definitely_fails;
    out.records.push_back(std::move(rec));
    if (hit && !out.counterexample_found) {
      out.counterexample_found = true;
      out.witness = gamma;
    }
  }
  return out;
}

// ---- model description files -------------------------------------------------
//
//   bounds: fuel=10000, arity=3
//   x : s, y : t
//
// The bounds header is optional; later declaration lines may also be split
// across lines.

struct ModelDescription {
  Basis basis;
  std::optional<Bounds> bounds;
};

inline ModelDescription parse_model_file(const std::string& text) {
  ModelDescription out;
  std::string basis_text;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("bounds:", 0) == 0) {
      Bounds bounds;
      std::string rest = line.substr(7);
      std::size_t p = 0;
      while (p < rest.size()) {
        std::size_t eq = rest.find('=', p);
        if (eq == std::string::npos) break;
        std::string key = rest.substr(p, eq - p);
        std::size_t ks = key.find_first_not_of(" \t,");
        std::size_t ke = key.find_last_not_of(" \t,");
        if (ks == std::string::npos) throw parse_error("bad bounds header: " + line);
        key = key.substr(ks, ke - ks + 1);
        std::size_t end = eq + 1;
        while (end < rest.size() && rest[end] != ',') ++end;
        long value = 0;
        try {
          value = std::stol(rest.substr(eq + 1, end - eq - 1));
        } catch (...) {
          throw parse_error("bad bounds value in: " + line);
        }
        if (key == "fuel") bounds.fuel = value;
        else if (key == "arity") bounds.arity = static_cast<int>(value);
        else if (key == "depth") bounds.depth = static_cast<int>(value);
        else throw parse_error("unknown bounds key `" + key + "`");
        p = end + 1;
      }
      out.bounds = bounds;
      continue;
    }
    if (!basis_text.empty()) basis_text += ", ";
    basis_text += line;
  }
  out.basis = parse_basis(basis_text);
  return out;
}

inline std::string print_model_file(const ModelDescription& m) {
  std::string out;
  if (m.bounds)
    out += "bounds: fuel=" + std::to_string(m.bounds->fuel) +
           ", arity=" + std::to_string(m.bounds->arity) + "\n";
  out += print_basis(m.basis) + "\n";
  return out;
}

}  // namespace lcl
