#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcl/reduction.hpp"
#include "lcl/term.hpp"

namespace lcl {

/// Rules of the equational theory EQ, plus the extensionality rule.
enum class EqRule { Id, S, K, I, Sym, Trans, AppL, AppR, Ext };

inline const char* eq_rule_name(EqRule r) {
  switch (r) {
    case EqRule::Id: return "id";
    case EqRule::S: return "S";
    case EqRule::K: return "K";
    case EqRule::I: return "I";
    case EqRule::Sym: return "sym";
    case EqRule::Trans: return "trans";
    case EqRule::AppL: return "app-l";
    case EqRule::AppR: return "app-r";
    case EqRule::Ext: return "ext";
  }
  return "?";
}

/// A derivation tree in EQ / EQ^η. Every node carries its conclusion; (ext)
/// nodes also carry the discharged variable.
struct EqDerivation {
  EqRule rule;
  Term lhs, rhs;
  std::vector<std::shared_ptr<const EqDerivation>> premises;
  std::string ext_var;  // (ext) only

  static std::shared_ptr<const EqDerivation> axiom(EqRule r, Term lhs, Term rhs) {
    return std::make_shared<const EqDerivation>(
        EqDerivation{r, std::move(lhs), std::move(rhs), {}, {}});
  }
  static std::shared_ptr<const EqDerivation> infer(
      EqRule r, Term lhs, Term rhs,
      std::vector<std::shared_ptr<const EqDerivation>> premises, std::string ext_var = {}) {
    return std::make_shared<const EqDerivation>(
        EqDerivation{r, std::move(lhs), std::move(rhs), std::move(premises), std::move(ext_var)});
  }

  std::size_t node_count() const {
    std::size_t n = 1;
    for (const auto& p : premises) n += p->node_count();
    return n;
  }
};

struct EqCheckResult {
  bool valid;
  std::string node;    // preorder index of the failing node, as text
  std::string reason;  // failing side condition
};

namespace detail {

inline bool check_eq_node(const EqDerivation& d, bool allow_ext, std::size_t& index,
                          EqCheckResult& fail) {
  std::size_t here = index++;
  auto bad = [&](const std::string& why) {
    fail = EqCheckResult{false, std::to_string(here), why};
    return false;
  };
  auto want_premises = [&](std::size_t n) { return d.premises.size() == n; };

  switch (d.rule) {
    case EqRule::Id:
      if (!want_premises(0)) return bad("(id) takes no premises");
      if (d.lhs != d.rhs) return bad("(id) requires identical sides");
      break;
    case EqRule::S: {
      if (!want_premises(0)) return bad("(S) takes no premises");
      auto k = redex_kind_at(d.lhs);
      if (!k || *k != RedexKind::S) return bad("(S) left side must be S M N L");
      if (contract(d.lhs, RedexKind::S) != d.rhs) return bad("(S) right side mismatch");
      break;
    }
    case EqRule::K: {
      if (!want_premises(0)) return bad("(K) takes no premises");
      auto k = redex_kind_at(d.lhs);
      if (!k || *k != RedexKind::K) return bad("(K) left side must be K M N");
      if (contract(d.lhs, RedexKind::K) != d.rhs) return bad("(K) right side mismatch");
      break;
    }
    case EqRule::I: {
      if (!want_premises(0)) return bad("(I) takes no premises");
      auto k = redex_kind_at(d.lhs);
      if (!k || *k != RedexKind::I) return bad("(I) left side must be I M");
      if (contract(d.lhs, RedexKind::I) != d.rhs) return bad("(I) right side mismatch");
      break;
    }
    case EqRule::Sym:
      if (!want_premises(1)) return bad("(sym) takes one premise");
      if (d.premises[0]->lhs != d.rhs || d.premises[0]->rhs != d.lhs)
        return bad("(sym) premise must be the reversed equation");
      break;
    case EqRule::Trans:
      if (!want_premises(2)) return bad("(trans) takes two premises");
      if (d.premises[0]->lhs != d.lhs) return bad("(trans) left premise mismatch");
      if (d.premises[0]->rhs != d.premises[1]->lhs)
        return bad("(trans) premises do not share the middle term");
      if (d.premises[1]->rhs != d.rhs) return bad("(trans) right premise mismatch");
      break;
    case EqRule::AppL: {
      if (!want_premises(1)) return bad("(app-l) takes one premise");
      if (!d.lhs.is_app() || !d.rhs.is_app()) return bad("(app-l) conclusion must apply both sides");
      if (d.lhs.arg() != d.rhs.arg()) return bad("(app-l) applied arguments differ");
      if (d.premises[0]->lhs != d.lhs.fun() || d.premises[0]->rhs != d.rhs.fun())
        return bad("(app-l) premise mismatch");
      break;
    }
    case EqRule::AppR: {
      if (!want_premises(1)) return bad("(app-r) takes one premise");
      if (!d.lhs.is_app() || !d.rhs.is_app()) return bad("(app-r) conclusion must apply both sides");
      if (d.lhs.fun() != d.rhs.fun()) return bad("(app-r) applied functions differ");
      if (d.premises[0]->lhs != d.lhs.arg() || d.premises[0]->rhs != d.rhs.arg())
        return bad("(app-r) premise mismatch");
      break;
    }
    case EqRule::Ext: {
      if (!allow_ext) return bad("(ext) is not admitted in EQ");
      if (!want_premises(1)) return bad("(ext) takes one premise");
      if (d.ext_var.empty()) return bad("(ext) must name the discharged variable");
      Term x = Term::var(d.ext_var);
      if (d.premises[0]->lhs != Term::app(d.lhs, x) || d.premises[0]->rhs != Term::app(d.rhs, x))
        return bad("(ext) premise must be M x = N x for the conclusion M = N");
      std::set<std::string> fv = free_vars(d.lhs);
      std::set<std::string> fvr = free_vars(d.rhs);
      fv.insert(fvr.begin(), fvr.end());
      if (fv.count(d.ext_var)) return bad("(ext) variable occurs free in the conclusion");
      break;
    }
  }
  for (const auto& p : d.premises)
    if (!check_eq_node(*p, allow_ext, index, fail)) return false;
  return true;
}

}  // namespace detail

/// Valid iff every node instantiates its rule correctly. A Valid derivation
/// with conclusion M = N certifies M =w N (or M =w,η N when (ext) is
/// admitted).
inline EqCheckResult check_eq_derivation(const EqDerivation& d, bool allow_ext) {
  std::size_t index = 0;
  EqCheckResult fail{true, {}, {}};
  if (detail::check_eq_node(d, allow_ext, index, fail)) return EqCheckResult{true, {}, {}};
  return fail;
}

}  // namespace lcl
