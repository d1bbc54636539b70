#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcl/errors.hpp"

namespace lcl {

/// Simple type: a type variable or an arrow. Immutable, structure-shared.
class SimpleType {
public:
  enum class Kind { Var, Arrow };

  static SimpleType var(std::string name) {
    return SimpleType(std::make_shared<const Node>(Node{Kind::Var, std::move(name), nullptr, nullptr}));
  }
  static SimpleType arrow(const SimpleType& dom, const SimpleType& cod) {
    return SimpleType(std::make_shared<const Node>(Node{Kind::Arrow, {}, dom.node_, cod.node_}));
  }

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_arrow() const { return kind() == Kind::Arrow; }
  const std::string& var_name() const { return node_->name; }
  SimpleType dom() const { return SimpleType(node_->dom); }
  SimpleType cod() const { return SimpleType(node_->cod); }

  bool operator==(const SimpleType& other) const { return eq(node_.get(), other.node_.get()); }
  bool operator!=(const SimpleType& other) const { return !(*this == other); }

private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> dom, cod;
  };

  explicit SimpleType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static bool eq(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    if (a->kind == Kind::Var) return a->name == b->name;
    return eq(a->dom.get(), b->dom.get()) && eq(a->cod.get(), b->cod.get());
  }

  std::shared_ptr<const Node> node_;
};

inline SimpleType arrow(const SimpleType& d, const SimpleType& c) {
  return SimpleType::arrow(d, c);
}

inline void type_vars(const SimpleType& t, std::set<std::string>& out) {
  if (t.is_var()) {
    out.insert(t.var_name());
  } else {
    type_vars(t.dom(), out);
    type_vars(t.cod(), out);
  }
}

inline std::set<std::string> type_vars(const SimpleType& t) {
  std::set<std::string> out;
  type_vars(t, out);
  return out;
}

// ---- canonical text form -------------------------------------------------
//
// Right-associative `->`; canonical printing parenthesizes every non-atomic
// subtype, so K's principal type reads `a -> (b -> a)`.

inline void print_type(const SimpleType& t, std::string& out, bool top = true) {
  if (t.is_var()) {
    out += t.var_name();
    return;
  }
  if (!top) out += '(';
  print_type(t.dom(), out, false);
  out += " -> ";
  print_type(t.cod(), out, false);
  if (!top) out += ')';
}

inline std::string print_type(const SimpleType& t) {
  std::string out;
  print_type(t, out);
  return out;
}

namespace detail {

struct TypeCursor {
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool at_arrow() {
    skip_ws();
    return pos + 1 < src.size() && src[pos] == '-' && src[pos + 1] == '>';
  }
};

inline SimpleType parse_type_expr(TypeCursor& cur, bool& ok);

inline SimpleType parse_type_atom(TypeCursor& cur, bool& ok) {
  ok = true;
  char c = cur.peek();
  if (c == '(') {
    ++cur.pos;
    SimpleType t = parse_type_expr(cur, ok);
    if (!ok) return t;
    if (cur.peek() != ')') { ok = false; return t; }
    ++cur.pos;
    return t;
  }
  if (c >= 'a' && c <= 'z') {
    std::string name;
    while (cur.pos < cur.src.size()) {
      char d = cur.src[cur.pos];
      if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_') name += d, ++cur.pos;
      else break;
    }
    return SimpleType::var(name);
  }
  ok = false;
  return SimpleType::var("?");
}

inline SimpleType parse_type_expr(TypeCursor& cur, bool& ok) {
  SimpleType lhs = parse_type_atom(cur, ok);
  if (!ok) return lhs;
  if (cur.at_arrow()) {
    cur.pos += 2;
    SimpleType rhs = parse_type_expr(cur, ok);
    return SimpleType::arrow(lhs, rhs);
  }
  return lhs;
}

}  // namespace detail

inline SimpleType parse_type(const std::string& text) {
  detail::TypeCursor cur{text};
  bool ok = true;
  SimpleType t = detail::parse_type_expr(cur, ok);
  cur.skip_ws();
  if (!ok || cur.pos < text.size())
    throw parse_error("bad type syntax at offset " + std::to_string(cur.pos) + " in: " + text);
  return t;
}

// ---- substitutions ---------------------------------------------------------

/// Finite map type-variable -> SimpleType, kept idempotent: bindings are
/// resolved against each other on insertion.
class TypeSubstitution {
public:
  const std::map<std::string, SimpleType>& bindings() const { return map_; }

  SimpleType apply(const SimpleType& t) const {
    if (t.is_var()) {
      auto it = map_.find(t.var_name());
      return it == map_.end() ? t : it->second;
    }
    SimpleType d = apply(t.dom());
    SimpleType c = apply(t.cod());
    if (d == t.dom() && c == t.cod()) return t;
    return SimpleType::arrow(d, c);
  }

  /// Binds var := t, resolving t against the current substitution and
  /// rewriting existing bindings so that apply stays idempotent.
  void bind(const std::string& var, const SimpleType& t) {
    SimpleType resolved = apply(t);
    TypeSubstitution one;
    one.map_.emplace(var, resolved);
    for (auto& [k, v] : map_) v = one.apply(v);
    map_.insert_or_assign(var, resolved);
  }

  bool empty() const { return map_.empty(); }

private:
  std::map<std::string, SimpleType> map_;
};

}  // namespace lcl
