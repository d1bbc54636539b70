#pragma once

#include <string>
#include <utility>

namespace lcl {

/// Three-valued verdict. Unknown carries the resource bound that was hit;
/// True and False are definitive.
class TriBool {
public:
  enum class Value { True, False, Unknown };

  static TriBool yes() { return TriBool(Value::True, {}); }
  static TriBool no() { return TriBool(Value::False, {}); }
  static TriBool unknown(std::string reason) {
    return TriBool(Value::Unknown, std::move(reason));
  }

  Value value() const { return value_; }
  bool is_true() const { return value_ == Value::True; }
  bool is_false() const { return value_ == Value::False; }
  bool is_unknown() const { return value_ == Value::Unknown; }
  const std::string& reason() const { return reason_; }

  bool operator==(const TriBool& other) const { return value_ == other.value_; }

  friend TriBool operator!(const TriBool& a) {
    switch (a.value_) {
      case Value::True: return no();
      case Value::False: return yes();
      default: return a;
    }
  }

  // Kleene connectives: Unknown propagates only when the value is not forced.
  friend TriBool operator&&(const TriBool& a, const TriBool& b) {
    if (a.is_false() || b.is_false()) return no();
    if (a.is_true() && b.is_true()) return yes();
    return unknown(a.is_unknown() ? a.reason() : b.reason());
  }

  friend TriBool operator||(const TriBool& a, const TriBool& b) {
    if (a.is_true() || b.is_true()) return yes();
    if (a.is_false() && b.is_false()) return no();
    return unknown(a.is_unknown() ? a.reason() : b.reason());
  }

  friend TriBool implies(const TriBool& a, const TriBool& b) {
    return !a || b;
  }

  const char* str() const {
    switch (value_) {
      case Value::True: return "True";
      case Value::False: return "False";
      default: return "Unknown";
    }
  }

private:
  TriBool(Value v, std::string reason) : value_(v), reason_(std::move(reason)) {}

  Value value_;
  std::string reason_;
};

}  // namespace lcl
