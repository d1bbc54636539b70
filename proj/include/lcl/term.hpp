#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcl/errors.hpp"

namespace lcl {

/// CL term: a variable, one of the primitive combinators S, K, I, or an
/// application. Immutable; copies share structure.
class Term {
public:
  enum class Kind { Var, S, K, I, App };

  static Term var(std::string name) {
    return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), nullptr, nullptr}));
  }
  static Term S() { return Term(leaf(Kind::S)); }
  static Term K() { return Term(leaf(Kind::K)); }
  static Term I() { return Term(leaf(Kind::I)); }
  static Term app(const Term& fun, const Term& arg) {
    return Term(std::make_shared<const Node>(Node{Kind::App, {}, fun.node_, arg.node_}));
  }

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_combinator() const {
    return kind() == Kind::S || kind() == Kind::K || kind() == Kind::I;
  }

  const std::string& var_name() const { return node_->name; }
  Term fun() const { return Term(node_->fun); }
  Term arg() const { return Term(node_->arg); }

  bool operator==(const Term& other) const { return eq(node_.get(), other.node_.get()); }
  bool operator!=(const Term& other) const { return !(*this == other); }

  std::size_t size() const { return size(node_.get()); }

private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> fun, arg;
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<const Node> leaf(Kind k) {
    static const std::shared_ptr<const Node> s =
        std::make_shared<const Node>(Node{Kind::S, {}, nullptr, nullptr});
    static const std::shared_ptr<const Node> kk =
        std::make_shared<const Node>(Node{Kind::K, {}, nullptr, nullptr});
    static const std::shared_ptr<const Node> i =
        std::make_shared<const Node>(Node{Kind::I, {}, nullptr, nullptr});
    switch (k) {
      case Kind::S: return s;
      case Kind::K: return kk;
      default: return i;
    }
  }

  static bool eq(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
      case Kind::Var: return a->name == b->name;
      case Kind::App: return eq(a->fun.get(), b->fun.get()) && eq(a->arg.get(), b->arg.get());
      default: return true;
    }
  }

  static std::size_t size(const Node* n) {
    if (n->kind == Kind::App) return 1 + size(n->fun.get()) + size(n->arg.get());
    return 1;
  }

  std::shared_ptr<const Node> node_;
};

/// Left-associated application chain: app(f, a, b) = (f a) b.
inline Term app(const Term& f, const Term& a) { return Term::app(f, a); }
template <typename... Rest>
Term app(const Term& f, const Term& a, const Rest&... rest) {
  return app(Term::app(f, a), rest...);
}

inline std::set<std::string> free_vars(const Term& m) {
  std::set<std::string> out;
  std::vector<Term> todo{m};
  while (!todo.empty()) {
    Term t = todo.back();
    todo.pop_back();
    switch (t.kind()) {
      case Term::Kind::Var: out.insert(t.var_name()); break;
      case Term::Kind::App:
        todo.push_back(t.fun());
        todo.push_back(t.arg());
        break;
      default: break;
    }
  }
  return out;
}

/// M{N/x}: replace every occurrence of the variable x. CL has no binders,
/// so this is plain tree replacement.
inline Term substitute(const Term& m, const std::string& x, const Term& n) {
  switch (m.kind()) {
    case Term::Kind::Var: return m.var_name() == x ? n : m;
    case Term::Kind::App: {
      Term f = substitute(m.fun(), x, n);
      Term a = substitute(m.arg(), x, n);
      if (f == m.fun() && a == m.arg()) return m;
      return Term::app(f, a);
    }
    default: return m;
  }
}

/// Spine decomposition: head(h a1 .. an) = h with args [a1..an].
inline Term spine_head(const Term& t) {
  Term h = t;
  while (h.is_app()) h = h.fun();
  return h;
}

inline std::vector<Term> spine_args(const Term& t) {
  std::vector<Term> args;
  Term h = t;
  while (h.is_app()) {
    args.push_back(h.arg());
    h = h.fun();
  }
  std::reverse(args.begin(), args.end());
  return args;
}

// ---- canonical text form -------------------------------------------------
//
// variables: lowercase identifiers; combinators: S K I; application by
// juxtaposition, left-associative. parse(print(t)) == t.

inline void print_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var: out += t.var_name(); return;
    case Term::Kind::S: out += 'S'; return;
    case Term::Kind::K: out += 'K'; return;
    case Term::Kind::I: out += 'I'; return;
    case Term::Kind::App: {
      print_term(t.fun(), out);
      out += ' ';
      if (t.arg().is_app()) {
        out += '(';
        print_term(t.arg(), out);
        out += ')';
      } else {
        print_term(t.arg(), out);
      }
      return;
    }
  }
}

inline std::string print_term(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

namespace detail {

struct TermCursor {
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
};

inline bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
inline bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

// atom := variable | S | K | I | '(' term ')'
inline Term parse_term_atom(TermCursor& cur, bool& ok);

inline Term parse_term_expr(TermCursor& cur, bool& ok) {
  Term t = parse_term_atom(cur, ok);
  if (!ok) return t;
  while (true) {
    char c = cur.peek();
    if (c == '(' || c == 'S' || c == 'K' || c == 'I' || ident_start(c)) {
      bool ok2 = true;
      Term a = parse_term_atom(cur, ok2);
      if (!ok2) { ok = false; return t; }
      t = Term::app(t, a);
    } else {
      return t;
    }
  }
}

inline Term parse_term_atom(TermCursor& cur, bool& ok) {
  ok = true;
  char c = cur.peek();
  if (c == '(') {
    ++cur.pos;
    Term t = parse_term_expr(cur, ok);
    if (!ok) return t;
    if (cur.peek() != ')') { ok = false; return t; }
    ++cur.pos;
    return t;
  }
  if (c == 'S' || c == 'K' || c == 'I') {
    ++cur.pos;
    // combinator names are single letters; reject S1, Kx, ...
    if (cur.pos < cur.src.size() && (ident_char(cur.src[cur.pos]) || std::isupper(static_cast<unsigned char>(cur.src[cur.pos])))) {
      ok = false;
      return Term::S();
    }
    return c == 'S' ? Term::S() : c == 'K' ? Term::K() : Term::I();
  }
  if (ident_start(c)) {
    std::string name;
    while (cur.pos < cur.src.size() && ident_char(cur.src[cur.pos])) name += cur.src[cur.pos++];
    return Term::var(name);
  }
  ok = false;
  return Term::S();
}

}  // namespace detail

inline Term parse_term(const std::string& text) {
  detail::TermCursor cur{text};
  bool ok = true;
  Term t = detail::parse_term_expr(cur, ok);
  if (!ok || !cur.eof())
    throw parse_error("bad term syntax at offset " + std::to_string(cur.pos) + " in: " + text);
  return t;
}

}  // namespace lcl
