#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcl/infer.hpp"
#include "lcl/term.hpp"
#include "lcl/type.hpp"

namespace lcl {

/// Type assignment statement M : sigma — the atoms of LCL.
struct Statement {
  Term subject;
  SimpleType predicate;

  bool operator==(const Statement& o) const {
    return subject == o.subject && predicate == o.predicate;
  }
  bool operator!=(const Statement& o) const { return !(*this == o); }
};

inline std::string print_statement(const Statement& s) {
  return print_term(s.subject) + " : " + print_type(s.predicate);
}

/// LCL formula over statement atoms, with negation and implication as the
/// primitive connectives. Conjunction, disjunction and equivalence are
/// definable and expand on construction.
class Formula {
public:
  enum class Kind { Atom, Not, Implies };

  static Formula atom(Statement s) {
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(s), nullptr, nullptr}));
  }
  static Formula atom(Term m, SimpleType sigma) {
    return atom(Statement{std::move(m), std::move(sigma)});
  }
  static Formula negate(const Formula& f) {
    return Formula(std::make_shared<const Node>(Node{Kind::Not, std::nullopt, f.node_, nullptr}));
  }
  static Formula implies(const Formula& a, const Formula& b) {
    return Formula(std::make_shared<const Node>(Node{Kind::Implies, std::nullopt, a.node_, b.node_}));
  }
  // a & b  :=  ~(a => ~b)
  static Formula conj(const Formula& a, const Formula& b) {
    return negate(implies(a, negate(b)));
  }
  // a | b  :=  ~a => b
  static Formula disj(const Formula& a, const Formula& b) { return implies(negate(a), b); }
  // a <=> b  :=  (a => b) & (b => a)
  static Formula iff(const Formula& a, const Formula& b) {
    return conj(implies(a, b), implies(b, a));
  }

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_not() const { return kind() == Kind::Not; }
  bool is_implies() const { return kind() == Kind::Implies; }

  const Statement& statement() const { return *node_->stmt; }
  Formula operand() const { return Formula(node_->lhs); }  // Not
  Formula antecedent() const { return Formula(node_->lhs); }
  Formula consequent() const { return Formula(node_->rhs); }

  bool operator==(const Formula& o) const { return eq(node_.get(), o.node_.get()); }
  bool operator!=(const Formula& o) const { return !(*this == o); }

  template <typename Fn>
  void for_each_atom(Fn&& fn) const {
    switch (kind()) {
      case Kind::Atom: fn(statement()); return;
      case Kind::Not: operand().for_each_atom(fn); return;
      case Kind::Implies:
        antecedent().for_each_atom(fn);
        consequent().for_each_atom(fn);
        return;
    }
  }

private:
  struct Node {
    Kind kind;
    std::optional<Statement> stmt;  // Atom only
    std::shared_ptr<const Node> lhs, rhs;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static bool eq(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
      case Kind::Atom: return *a->stmt == *b->stmt;
      case Kind::Not: return eq(a->lhs.get(), b->lhs.get());
      case Kind::Implies:
        return eq(a->lhs.get(), b->lhs.get()) && eq(a->rhs.get(), b->rhs.get());
    }
    return false;
  }

  std::shared_ptr<const Node> node_;
};

/// Well-formedness: every atom must be typable from some basis (the LCL
/// grammar side condition M : sigma ∈ CL->).
struct WfResult {
  bool well_formed;
  std::optional<Statement> offending;
  std::string reason;
};

inline WfResult wf_formula(const Formula& f) {
  std::optional<Statement> bad;
  f.for_each_atom([&](const Statement& s) {
    if (!bad && !atom_in_cl(s.subject, s.predicate)) bad = s;
  });
  if (bad) return WfResult{false, bad, "atom is not typable from any basis"};
  return WfResult{true, std::nullopt, {}};
}

// ---- canonical text form ---------------------------------------------------
//
// atoms `M : sigma`; connectives `~`, `=>` (right-associative), with `&`,
// `|`, `<=>` accepted on input and expanded. Canonical output uses only the
// primitive connectives.

inline void print_formula(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += print_statement(f.statement());
      return;
    case Formula::Kind::Not: {
      out += '~';
      Formula g = f.operand();
      if (g.is_implies()) {
        out += '(';
        print_formula(g, out);
        out += ')';
      } else {
        print_formula(g, out);
      }
      return;
    }
    case Formula::Kind::Implies: {
      Formula a = f.antecedent();
      if (a.is_implies()) {
        out += '(';
        print_formula(a, out);
        out += ')';
      } else {
        print_formula(a, out);
      }
      out += " => ";
      print_formula(f.consequent(), out);
      return;
    }
  }
}

inline std::string print_formula(const Formula& f) {
  std::string out;
  print_formula(f, out);
  return out;
}

namespace detail {

struct FormulaCursor {
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool take(const char* tok) {
    skip_ws();
    std::size_t n = std::char_traits<char>::length(tok);
    if (src.compare(pos, n, tok) != 0) return false;
    pos += n;
    return true;
  }
  bool lookahead(const char* tok) {
    skip_ws();
    return src.compare(pos, std::char_traits<char>::length(tok), tok) == 0;
  }
};

inline std::optional<Formula> parse_formula_expr(FormulaCursor& cur);

inline std::optional<Formula> parse_formula_atom(FormulaCursor& cur) {
  TermCursor tc{cur.src, cur.pos};
  bool ok = true;
  Term subject = parse_term_expr(tc, ok);
  if (!ok) return std::nullopt;
  cur.pos = tc.pos;
  if (!cur.take(":")) return std::nullopt;
  TypeCursor yc{cur.src, cur.pos};
  SimpleType sigma = parse_type_expr(yc, ok);
  if (!ok) return std::nullopt;
  cur.pos = yc.pos;
  return Formula::atom(std::move(subject), std::move(sigma));
}

inline std::optional<Formula> parse_formula_primary(FormulaCursor& cur) {
  if (cur.peek() == '~') {
    ++cur.pos;
    auto f = parse_formula_primary(cur);
    if (!f) return std::nullopt;
    return Formula::negate(*f);
  }
  if (cur.peek() == '(') {
    // Could be a parenthesized formula or a parenthesized term starting an
    // atom; try the formula reading first and backtrack.
    std::size_t saved = cur.pos;
    ++cur.pos;
    if (auto f = parse_formula_expr(cur)) {
      if (cur.peek() == ')') {
        ++cur.pos;
        return f;
      }
    }
    cur.pos = saved;
  }
  return parse_formula_atom(cur);
}

// precedence: ~  >  &  >  |  >  =>  >  <=>
inline std::optional<Formula> parse_formula_and(FormulaCursor& cur) {
  auto f = parse_formula_primary(cur);
  if (!f) return std::nullopt;
  while (cur.lookahead("&")) {
    cur.take("&");
    auto g = parse_formula_primary(cur);
    if (!g) return std::nullopt;
    f = Formula::conj(*f, *g);
  }
  return f;
}

inline std::optional<Formula> parse_formula_or(FormulaCursor& cur) {
  auto f = parse_formula_and(cur);
  if (!f) return std::nullopt;
  while (cur.peek() == '|') {
    cur.take("|");
    auto g = parse_formula_and(cur);
    if (!g) return std::nullopt;
    f = Formula::disj(*f, *g);
  }
  return f;
}

inline std::optional<Formula> parse_formula_implies(FormulaCursor& cur) {
  auto f = parse_formula_or(cur);
  if (!f) return std::nullopt;
  if (cur.lookahead("=>")) {
    cur.take("=>");
    auto g = parse_formula_implies(cur);  // right-associative
    if (!g) return std::nullopt;
    return Formula::implies(*f, *g);
  }
  return f;
}

inline std::optional<Formula> parse_formula_expr(FormulaCursor& cur) {
  auto f = parse_formula_implies(cur);
  if (!f) return std::nullopt;
  if (cur.lookahead("<=>")) {
    cur.take("<=>");
    auto g = parse_formula_expr(cur);
    if (!g) return std::nullopt;
    return Formula::iff(*f, *g);
  }
  return f;
}

}  // namespace detail

inline Formula parse_formula(const std::string& text) {
  detail::FormulaCursor cur{text};
  auto f = detail::parse_formula_expr(cur);
  cur.skip_ws();
  if (!f || cur.pos < text.size())
    throw parse_error("bad formula syntax at offset " + std::to_string(cur.pos) + " in: " + text);
  return *f;
}

inline Statement parse_statement(const std::string& text) {
  Formula f = parse_formula(text);
  if (!f.is_atom()) throw parse_error("expected a statement `M : sigma`: " + text);
  return f.statement();
}

/// ⊥ := alpha & ~alpha for a canonical atom: the first atom of the theory in
/// order, or I : a -> a when the theory has none.
inline Formula bottom_for(const std::vector<Formula>& theory) {
  std::optional<Formula> anchor;
  for (const Formula& f : theory) {
    if (anchor) break;
    f.for_each_atom([&](const Statement& s) {
      if (!anchor) anchor = Formula::atom(s);
    });
  }
  if (!anchor)
    anchor = Formula::atom(Term::I(), arrow(SimpleType::var("a"), SimpleType::var("a")));
  return Formula::conj(*anchor, Formula::negate(*anchor));
}

}  // namespace lcl
