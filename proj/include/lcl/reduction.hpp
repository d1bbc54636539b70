#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lcl/term.hpp"
#include "lcl/tribool.hpp"

namespace lcl {

enum class RedexKind { S, K, I };

/// Position of a redex: the path from the root (Fun/Arg steps) plus the
/// contraction rule that applies there.
struct RedexSite {
  enum class Step { Fun, Arg };
  std::vector<Step> path;
  RedexKind kind;
};

namespace detail {

// A node is a redex when its spine is exactly S+3, K+2 or I+1 arguments.
inline std::optional<RedexKind> redex_kind_at(const Term& t) {
  if (!t.is_app()) return std::nullopt;
  Term f1 = t.fun();
  if (f1.kind() == Term::Kind::I) return RedexKind::I;
  if (f1.is_app()) {
    Term f2 = f1.fun();
    if (f2.kind() == Term::Kind::K) return RedexKind::K;
    if (f2.is_app() && f2.fun().kind() == Term::Kind::S) return RedexKind::S;
  }
  return std::nullopt;
}

inline Term contract(const Term& t, RedexKind kind) {
  switch (kind) {
    case RedexKind::I: return t.arg();                 // I M -> M
    case RedexKind::K: return t.fun().arg();           // K M N -> M
    case RedexKind::S: {                               // S M N L -> (M L)(N L)
      Term l = t.arg();
      Term n = t.fun().arg();
      Term m = t.fun().fun().arg();
      return Term::app(Term::app(m, l), Term::app(n, l));
    }
  }
  return t;
}

inline void collect_redexes(const Term& t, std::vector<RedexSite::Step>& path,
                            std::vector<RedexSite>& out) {
  if (auto k = redex_kind_at(t)) out.push_back(RedexSite{path, *k});
  if (t.is_app()) {
    path.push_back(RedexSite::Step::Fun);
    collect_redexes(t.fun(), path, out);
    path.back() = RedexSite::Step::Arg;
    collect_redexes(t.arg(), path, out);
    path.pop_back();
  }
}

}  // namespace detail

/// All redex positions in deterministic leftmost-outermost (preorder) order.
inline std::vector<RedexSite> find_redexes(const Term& m) {
  std::vector<RedexSite> out;
  std::vector<RedexSite::Step> path;
  detail::collect_redexes(m, path, out);
  return out;
}

/// One-step reduction at a given site. Throws invalid_site when the path
/// leaves the term or the subterm does not have the claimed redex shape.
inline Term reduce_step(const Term& m, const RedexSite& site) {
  std::function<Term(const Term&, std::size_t)> go = [&](const Term& t, std::size_t i) -> Term {
    if (i == site.path.size()) {
      auto k = detail::redex_kind_at(t);
      if (!k || *k != site.kind) throw invalid_site("subterm does not match redex kind");
      return detail::contract(t, site.kind);
    }
    if (!t.is_app()) throw invalid_site("redex path leaves the term");
    if (site.path[i] == RedexSite::Step::Fun)
      return Term::app(go(t.fun(), i + 1), t.arg());
    return Term::app(t.fun(), go(t.arg(), i + 1));
  };
  return go(m, 0);
}

struct NormalizeResult {
  bool reached_normal_form;
  Term term;   // the normal form, or the term where fuel ran out
  long steps;  // contractions performed
};

namespace detail {

struct FuelOut {
  Term partial;  // the term as reduced so far
};

// Leftmost-outermost normalization. The head-spine redex of a node (the
// spine prefix that saturates the head combinator) is the leftmost-outermost
// redex, so we stabilize the spine first and then recurse into arguments.
inline Term normalize_rec(Term t, long fuel, long& steps) {
  while (true) {
    Term h = spine_head(t);
    std::size_t need;
    switch (h.kind()) {
      case Term::Kind::S: need = 3; break;
      case Term::Kind::K: need = 2; break;
      case Term::Kind::I: need = 1; break;
      default: need = 0; break;
    }
    if (need == 0) break;  // variable head: spine is stable
    std::vector<Term> args = spine_args(t);
    if (args.size() < need) break;  // under-applied combinator: stable
    if (steps >= fuel) throw FuelOut{t};
    ++steps;
    Term reduced = t;
    switch (h.kind()) {
      case Term::Kind::I: reduced = args[0]; break;
      case Term::Kind::K: reduced = args[0]; break;
      case Term::Kind::S:
        reduced = Term::app(Term::app(args[0], args[2]), Term::app(args[1], args[2]));
        break;
      default: break;
    }
    for (std::size_t i = need; i < args.size(); ++i) reduced = Term::app(reduced, args[i]);
    t = reduced;
  }
  if (!t.is_app()) return t;
  Term h = spine_head(t);
  std::vector<Term> args = spine_args(t);
  Term out = h;
  for (std::size_t i = 0; i < args.size(); ++i) {
    try {
      out = Term::app(out, normalize_rec(args[i], fuel, steps));
    } catch (FuelOut& e) {
      out = Term::app(out, e.partial);
      for (std::size_t j = i + 1; j < args.size(); ++j) out = Term::app(out, args[j]);
      throw FuelOut{out};
    }
  }
  return out;
}

}  // namespace detail

/// Repeatedly contracts the leftmost-outermost redex. Budget exhaustion is a
/// value, not an error.
inline NormalizeResult normalize(const Term& m, long fuel) {
  long steps = 0;
  try {
    Term nf = detail::normalize_rec(m, fuel, steps);
    return NormalizeResult{true, nf, steps};
  } catch (detail::FuelOut& e) {
    return NormalizeResult{false, e.partial, steps};
  }
}

/// Fresh variables for extensionality checks: drawn from a reserved
/// namespace ("$k") that the term grammar cannot produce, so they are
/// disjoint from the variables of any parsed or user-built term.
inline Term fresh_ext_var(int index) { return Term::var("$" + std::to_string(index)); }

/// Bounded weak equality: True / False when both sides reach normal forms
/// within fuel (confluence makes distinct normal forms a definitive
/// disagreement), Unknown otherwise.
inline TriBool weak_equal(const Term& m, const Term& n, long fuel) {
  if (m == n) return TriBool::yes();
  NormalizeResult a = normalize(m, fuel);
  NormalizeResult b = normalize(n, fuel);
  if (!a.reached_normal_form || !b.reached_normal_form)
    return TriBool::unknown("fuel exhausted after " + std::to_string(fuel) + " steps");
  return a.term == b.term ? TriBool::yes() : TriBool::no();
}

namespace detail {

// A normal form with a variable at the head stays normal and var-headed when
// further arguments are appended, so a disagreement between two such spines
// with different heads or different argument counts cannot be repaired by
// applying more fresh variables.
inline bool var_headed(const Term& t) { return spine_head(t).is_var(); }

inline bool spine_incompatible(const Term& a, const Term& b) {
  if (!var_headed(a) || !var_headed(b)) return false;
  if (spine_head(a) != spine_head(b)) return true;
  return spine_args(a).size() != spine_args(b).size();
}

}  // namespace detail

/// Bounded extensional weak equality: applies both terms to k fresh
/// variables for k = 0..arity_bound and compares weak normal forms.
/// False is reported only when every tested k disagrees definitively and the
/// final disagreement is stable under further arguments.
inline TriBool ext_equal(const Term& m, const Term& n, long fuel, int arity_bound) {
  bool all_definite = true;
  Term last_lhs = m, last_rhs = n;
  bool have_last = false;
  for (int k = 0; k <= arity_bound; ++k) {
    Term mk = m, nk = n;
    for (int i = 1; i <= k; ++i) {
      Term v = fresh_ext_var(i);
      mk = Term::app(mk, v);
      nk = Term::app(nk, v);
    }
    if (mk == nk) return TriBool::yes();
    NormalizeResult a = normalize(mk, fuel);
    NormalizeResult b = normalize(nk, fuel);
    if (!a.reached_normal_form || !b.reached_normal_form) {
      all_definite = false;
      continue;
    }
    if (a.term == b.term) return TriBool::yes();
    last_lhs = a.term;
    last_rhs = b.term;
    have_last = true;
  }
  if (all_definite && have_last && detail::spine_incompatible(last_lhs, last_rhs))
    return TriBool::no();
  return TriBool::unknown("not resolved within fuel " + std::to_string(fuel) +
                          ", arity " + std::to_string(arity_bound));
}

/// Bracket abstraction [x].M: produces a term A with A x ▷w M and
/// x not free in A. Used to reconstruct combinator witnesses from
/// applicative behavior.
inline Term abstract_var(const std::string& x, const Term& m) {
  std::set<std::string> fv = free_vars(m);
  if (!fv.count(x)) return Term::app(Term::K(), m);
  if (m.is_var() && m.var_name() == x) return Term::I();
  // m is an application here: variables were handled above and combinators
  // have no free variables.
  Term f = m.fun(), a = m.arg();
  if (a.is_var() && a.var_name() == x && !free_vars(f).count(x)) return f;  // eta
  return Term::app(Term::app(Term::S(), abstract_var(x, f)), abstract_var(x, a));
}

}  // namespace lcl
