#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "lcl/type.hpp"

namespace lcl {

/// A basis Γ: finite map from term variables to simple types.
class Basis {
public:
  Basis() = default;

  static Basis of(std::initializer_list<std::pair<std::string, SimpleType>> decls) {
    Basis g;
    for (const auto& [x, t] : decls) g.declare(x, t);
    return g;
  }

  void declare(const std::string& x, const SimpleType& t) { map_.insert_or_assign(x, t); }

  bool contains(const std::string& x) const { return map_.count(x) != 0; }

  const SimpleType* lookup(const std::string& x) const {
    auto it = map_.find(x);
    return it == map_.end() ? nullptr : &it->second;
  }

  std::set<std::string> domain() const {
    std::set<std::string> out;
    for (const auto& [x, _] : map_) out.insert(x);
    return out;
  }

  /// All type variables mentioned by the declared types.
  std::set<std::string> type_var_names() const {
    std::set<std::string> out;
    for (const auto& [_, t] : map_) type_vars(t, out);
    return out;
  }

  const std::map<std::string, SimpleType>& declarations() const { return map_; }
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }

  bool operator==(const Basis& other) const {
    if (map_.size() != other.map_.size()) return false;
    auto it = other.map_.begin();
    for (const auto& [x, t] : map_) {
      if (x != it->first || t != it->second) return false;
      ++it;
    }
    return true;
  }

private:
  std::map<std::string, SimpleType> map_;
};

/// Γ ↾ X: the sub-basis whose subjects lie in X.
inline Basis restrict_basis(const Basis& gamma, const std::set<std::string>& xs) {
  Basis out;
  for (const auto& [x, t] : gamma.declarations())
    if (xs.count(x)) out.declare(x, t);
  return out;
}

/// Basis text form: `x : a -> b, y : c`; the empty string is the empty basis.
inline std::string print_basis(const Basis& gamma) {
  std::string out;
  for (const auto& [x, t] : gamma.declarations()) {
    if (!out.empty()) out += ", ";
    out += x + " : " + print_type(t);
  }
  return out;
}

inline Basis parse_basis(const std::string& text) {
  Basis out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    std::string name;
    if (!(text[pos] >= 'a' && text[pos] <= 'z'))
      throw parse_error("basis declaration must start with a variable: " + text);
    while (pos < text.size() &&
           ((text[pos] >= 'a' && text[pos] <= 'z') || (text[pos] >= '0' && text[pos] <= '9') ||
            text[pos] == '_'))
      name += text[pos++];
    skip_ws();
    if (pos >= text.size() || text[pos] != ':')
      throw parse_error("missing ':' in basis declaration for " + name);
    ++pos;
    std::size_t end = pos;
    int depth = 0;
    while (end < text.size() && (depth > 0 || text[end] != ',')) {
      if (text[end] == '(') ++depth;
      if (text[end] == ')') --depth;
      ++end;
    }
    if (out.contains(name)) throw parse_error("duplicate declaration for " + name);
    out.declare(name, parse_type(text.substr(pos, end - pos)));
    pos = end;
    if (pos < text.size()) ++pos;  // skip ','
    skip_ws();
  }
  return out;
}

}  // namespace lcl
