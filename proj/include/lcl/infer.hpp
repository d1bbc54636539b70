#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcl/basis.hpp"
#include "lcl/config.hpp"
#include "lcl/reduction.hpp"
#include "lcl/term.hpp"
#include "lcl/tribool.hpp"
#include "lcl/type.hpp"

namespace lcl {

// ---- unification -----------------------------------------------------------

enum class UnifyStatus { Ok, Clash, OccursFailure };

struct UnifyResult {
  UnifyStatus status;
  TypeSubstitution unifier;
};

namespace detail {

inline bool occurs_in(const std::string& var, const SimpleType& t) {
  if (t.is_var()) return t.var_name() == var;
  return occurs_in(var, t.dom()) || occurs_in(var, t.cod());
}

// Variables in `rigid` act as constants: they unify only with themselves.
inline UnifyStatus unify_into(const SimpleType& a0, const SimpleType& b0, TypeSubstitution& sub,
                              const std::set<std::string>& rigid) {
  SimpleType a = sub.apply(a0);
  SimpleType b = sub.apply(b0);
  if (a == b) return UnifyStatus::Ok;
  if (a.is_var() && !rigid.count(a.var_name())) {
    if (occurs_in(a.var_name(), b)) return UnifyStatus::OccursFailure;
    sub.bind(a.var_name(), b);
    return UnifyStatus::Ok;
  }
  if (b.is_var() && !rigid.count(b.var_name())) {
    if (occurs_in(b.var_name(), a)) return UnifyStatus::OccursFailure;
    sub.bind(b.var_name(), a);
    return UnifyStatus::Ok;
  }
  if (a.is_arrow() && b.is_arrow()) {
    UnifyStatus s = unify_into(a.dom(), b.dom(), sub, rigid);
    if (s != UnifyStatus::Ok) return s;
    return unify_into(a.cod(), b.cod(), sub, rigid);
  }
  return UnifyStatus::Clash;
}

}  // namespace detail

/// Most general unifier of two simple types.
inline UnifyResult unify(const SimpleType& a, const SimpleType& b,
                         const std::set<std::string>& rigid = {}) {
  TypeSubstitution sub;
  UnifyStatus s = detail::unify_into(a, b, sub, rigid);
  if (s != UnifyStatus::Ok) return UnifyResult{s, {}};
  return UnifyResult{UnifyStatus::Ok, std::move(sub)};
}

/// One-way matching: substitutes only the flexible variables of the pattern;
/// every other pattern variable must match itself exactly.
inline bool match_type(const SimpleType& pattern, const SimpleType& target,
                       const std::set<std::string>& flexible,
                       std::map<std::string, SimpleType>& binding) {
  if (pattern.is_var()) {
    if (!flexible.count(pattern.var_name())) return pattern == target;
    auto it = binding.find(pattern.var_name());
    if (it != binding.end()) return it->second == target;
    binding.emplace(pattern.var_name(), target);
    return true;
  }
  if (!target.is_arrow()) return false;
  return match_type(pattern.dom(), target.dom(), flexible, binding) &&
         match_type(pattern.cod(), target.cod(), flexible, binding);
}

// ---- principal typing ------------------------------------------------------

/// One node of a CL-> typing derivation: the judgment for a subterm. Leaves
/// are declarations and combinator axioms; inner nodes are (-> elim).
struct TypingNode {
  Term subject;
  SimpleType type;
  std::vector<std::shared_ptr<const TypingNode>> children;
};
using TypingNodePtr = std::shared_ptr<const TypingNode>;

namespace detail {

// Fresh inference variables live in the reserved "?" namespace so they can
// never collide with type variables from a basis or a user-written type.
struct InferState {
  TypeSubstitution sub;
  std::set<std::string> rigid;
  int next = 0;

  SimpleType fresh() { return SimpleType::var("?" + std::to_string(next++)); }
};

struct RawTyping {
  SimpleType type;  // before applying the final substitution
  std::shared_ptr<TypingNode> node;
};

inline std::optional<RawTyping> infer_rec(const Basis& gamma, const Term& m, InferState& st) {
  auto make = [&](SimpleType t, std::vector<TypingNodePtr> kids) {
    auto node = std::make_shared<TypingNode>(TypingNode{m, t, std::move(kids)});
    return RawTyping{node->type, node};
  };
  switch (m.kind()) {
    case Term::Kind::Var: {
      const SimpleType* t = gamma.lookup(m.var_name());
      if (!t) return std::nullopt;
      return make(*t, {});
    }
    case Term::Kind::S: {
      SimpleType a = st.fresh(), b = st.fresh(), c = st.fresh();
      // (a -> (b -> c)) -> ((a -> b) -> (a -> c))
      return make(arrow(arrow(a, arrow(b, c)), arrow(arrow(a, b), arrow(a, c))), {});
    }
    case Term::Kind::K: {
      SimpleType a = st.fresh(), b = st.fresh();
      return make(arrow(a, arrow(b, a)), {});
    }
    case Term::Kind::I: {
      SimpleType a = st.fresh();
      return make(arrow(a, a), {});
    }
    case Term::Kind::App: {
      auto f = infer_rec(gamma, m.fun(), st);
      if (!f) return std::nullopt;
      auto x = infer_rec(gamma, m.arg(), st);
      if (!x) return std::nullopt;
      SimpleType r = st.fresh();
      if (unify_into(f->type, arrow(x->type, r), st.sub, st.rigid) != UnifyStatus::Ok)
        return std::nullopt;
      auto node = std::make_shared<TypingNode>(
          TypingNode{m, r, {TypingNodePtr(f->node), TypingNodePtr(x->node)}});
      return RawTyping{r, node};
    }
  }
  return std::nullopt;
}

inline bool is_flexible_name(const std::string& n) { return !n.empty() && n[0] == '?'; }

inline std::set<std::string> flexible_vars(const SimpleType& t) {
  std::set<std::string> out;
  for (const auto& v : type_vars(t))
    if (is_flexible_name(v)) out.insert(v);
  return out;
}

// Canonical display names for flexible variables: first-use order a, b, c,
// ... skipping anything the basis already uses.
inline SimpleType canonicalize(const SimpleType& t, const std::set<std::string>& avoid) {
  std::map<std::string, SimpleType> renaming;
  int counter = 0;
  auto next_name = [&]() {
    while (true) {
      std::string name;
      if (counter < 26)
        name = std::string(1, static_cast<char>('a' + counter));
      else
        name = std::string(1, static_cast<char>('a' + counter % 26)) +
               std::to_string(counter / 26);
      ++counter;
      if (!avoid.count(name)) return name;
    }
  };
  std::function<SimpleType(const SimpleType&)> go = [&](const SimpleType& ty) -> SimpleType {
    if (ty.is_var()) {
      if (!is_flexible_name(ty.var_name())) return ty;
      auto it = renaming.find(ty.var_name());
      if (it != renaming.end()) return it->second;
      SimpleType fresh = SimpleType::var(next_name());
      renaming.emplace(ty.var_name(), fresh);
      return fresh;
    }
    return arrow(go(ty.dom()), go(ty.cod()));
  };
  return go(t);
}

struct PrincipalTyping {
  SimpleType raw;  // flexible vars still in the "?" namespace
  std::shared_ptr<TypingNode> tree;
  TypeSubstitution sub;
};

// Core inference: principal typing with the basis's type variables held
// rigid. Returns nullopt when m is untypable under gamma.
inline std::optional<PrincipalTyping> infer_principal(const Basis& gamma, const Term& m,
                                                      bool rigid_basis = true) {
  for (const auto& v : free_vars(m))
    if (!gamma.contains(v)) return std::nullopt;
  InferState st;
  if (rigid_basis) st.rigid = gamma.type_var_names();
  auto raw = infer_rec(gamma, m, st);
  if (!raw) return std::nullopt;
  return PrincipalTyping{st.sub.apply(raw->type), raw->node, st.sub};
}

}  // namespace detail

/// Principal type of m under gamma, canonically named, or nullopt when m is
/// untypable. Combinator schemes are freshly instantiated per occurrence;
/// the basis's own type variables are kept rigid and keep their names.
inline std::optional<SimpleType> infer_type(const Basis& gamma, const Term& m) {
  auto p = detail::infer_principal(gamma, m);
  if (!p) return std::nullopt;
  return detail::canonicalize(p->raw, gamma.type_var_names());
}

/// gamma |-CL m : sigma, decided by principal typing plus one-way instance
/// matching (only inference-fresh variables are instantiable).
inline bool check_typing(const Basis& gamma, const Term& m, const SimpleType& sigma) {
  auto p = detail::infer_principal(gamma, m);
  if (!p) return false;
  std::map<std::string, SimpleType> binding;
  return match_type(p->raw, sigma, detail::flexible_vars(p->raw), binding);
}

/// m : sigma ∈ CL->  (typable from *some* basis): infer under a basis that
/// gives every free variable of m a fresh flexible type, then match.
inline bool atom_in_cl(const Term& m, const SimpleType& sigma) {
  Basis fresh;
  int i = 0;
  for (const auto& v : free_vars(m)) fresh.declare(v, SimpleType::var("?fv" + std::to_string(i++)));
  auto p = detail::infer_principal(fresh, m, /*rigid_basis=*/false);
  if (!p) return false;
  std::map<std::string, SimpleType> binding;
  return match_type(p->raw, sigma, detail::flexible_vars(p->raw), binding);
}

/// The full CL-> derivation of gamma |- m : sigma, or nullopt. Leftover
/// inference variables that sigma does not determine are grounded to fresh
/// canonical names.
inline std::optional<TypingNodePtr> derive_typing(const Basis& gamma, const Term& m,
                                                  const SimpleType& sigma) {
  auto p = detail::infer_principal(gamma, m);
  if (!p) return std::nullopt;
  std::map<std::string, SimpleType> binding;
  if (!match_type(p->raw, sigma, detail::flexible_vars(p->raw), binding)) return std::nullopt;

  TypeSubstitution target;
  for (const auto& [k, v] : binding) target.bind(k, v);

  // Leftover inference variables must be renamed consistently across the
  // whole derivation, so build one renaming over the finished node types.
  std::set<std::string> avoid = gamma.type_var_names();
  type_vars(sigma, avoid);
  TypeSubstitution ground;
  int counter = 0;
  auto next_name = [&]() {
    while (true) {
      std::string name = counter < 26
                             ? std::string(1, static_cast<char>('a' + counter))
                             : std::string(1, static_cast<char>('a' + counter % 26)) +
                                   std::to_string(counter / 26);
      ++counter;
      if (!avoid.count(name)) return name;
    }
  };
  std::function<void(const TypingNode&)> assign = [&](const TypingNode& n) {
    for (const auto& v : type_vars(target.apply(p->sub.apply(n.type))))
      if (detail::is_flexible_name(v) && !ground.bindings().count(v))
        ground.bind(v, SimpleType::var(next_name()));
    for (const auto& c : n.children) assign(*c);
  };
  assign(*p->tree);

  std::function<TypingNodePtr(const TypingNode&)> finish = [&](const TypingNode& n) -> TypingNodePtr {
    SimpleType t = ground.apply(target.apply(p->sub.apply(n.type)));
    std::vector<TypingNodePtr> kids;
    for (const auto& c : n.children) kids.push_back(finish(*c));
    return std::make_shared<const TypingNode>(TypingNode{n.subject, t, std::move(kids)});
  };
  return finish(*p->tree);
}

// ---- CL->= : typing modulo provable equality -------------------------------

namespace detail {

// Witness candidates for gamma |-CL= m : sigma. Besides m itself and its
// weak normal form, we rebuild combinator witnesses from the normal forms of
// m applied to fresh variables (bracket abstraction inverts the
// application).
inline std::vector<Term> eq_witnesses(const Term& m, const Bounds& b, bool& truncated) {
  std::vector<Term> out;
  NormalizeResult nf = normalize(m, b.fuel);
  if (nf.reached_normal_form) {
    if (nf.term != m) out.push_back(nf.term);
  } else {
    truncated = true;
  }
  Term applied = m;
  for (int k = 1; k <= b.arity; ++k) {
    applied = Term::app(applied, fresh_ext_var(k));
    NormalizeResult r = normalize(applied, b.fuel);
    if (!r.reached_normal_form) {
      truncated = true;
      continue;
    }
    Term witness = r.term;
    for (int i = k; i >= 1; --i) witness = abstract_var("$" + std::to_string(i), witness);
    out.push_back(witness);
  }
  return out;
}

}  // namespace detail

/// gamma |-CL= m : sigma, bounded. True when m, its normal form, or a
/// reconstructed extensional witness types to sigma. False only when the
/// equality class of m is anchored by a normal form whose head variable the
/// basis cannot supply (no derivation can exist then). Unknown otherwise.
inline TriBool check_typing_eq(const Basis& gamma, const Term& m, const SimpleType& sigma,
                               const Bounds& bounds = {}) {
  if (check_typing(gamma, m, sigma)) return TriBool::yes();

  bool truncated = false;
  for (const Term& w : detail::eq_witnesses(m, bounds, truncated)) {
    if (!check_typing(gamma, w, sigma)) continue;
    if (ext_equal(m, w, bounds.fuel, bounds.arity).is_true()) return TriBool::yes();
  }

  NormalizeResult nf = normalize(m, bounds.fuel);
  if (nf.reached_normal_form) {
    Term head = spine_head(nf.term);
    if (head.is_var() && !gamma.contains(head.var_name())) return TriBool::no();
  }
  return TriBool::unknown(truncated ? "normalization exhausted fuel" : "witness search exhausted");
}

}  // namespace lcl
