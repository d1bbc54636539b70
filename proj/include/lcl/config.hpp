#pragma once

namespace lcl {

/// Resource bounds for the undecidable checks. The relations the toolkit
/// approximates are undecidable in general, so every bound is explicit and
/// travels with the verdicts it produced.
struct Bounds {
  long fuel = 10000;  // reduction step budget
  int arity = 3;      // fresh-variable application bound for =w,eta
  int depth = 2;      // axiom saturation depth
};

}  // namespace lcl
