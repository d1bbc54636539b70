#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcl/axioms.hpp"
#include "lcl/formula.hpp"

namespace lcl {

/// Why a proof line holds: a hypothesis from the theory, an axiom-scheme
/// instance, or modus ponens on two earlier lines.
struct Justification {
  enum class Kind { Hypothesis, Axiom, MP };

  Kind kind = Kind::Hypothesis;
  std::size_t hyp_index = 0;       // Hypothesis: 0-based index into the theory
  AxiomId axiom = AxiomId::Ax1;    // Axiom
  std::string instantiation;       // Axiom: advisory record, re-verified on check
  std::size_t mp_implication = 0;  // MP: 0-based line holding a => b
  std::size_t mp_antecedent = 0;   // MP: 0-based line holding a

  static Justification hypothesis(std::size_t k) {
    Justification j;
    j.kind = Kind::Hypothesis;
    j.hyp_index = k;
    return j;
  }
  static Justification axiom_instance(AxiomId id, std::string inst = {}) {
    Justification j;
    j.kind = Kind::Axiom;
    j.axiom = id;
    j.instantiation = std::move(inst);
    return j;
  }
  static Justification modus_ponens(std::size_t implication, std::size_t antecedent) {
    Justification j;
    j.kind = Kind::MP;
    j.mp_implication = implication;
    j.mp_antecedent = antecedent;
    return j;
  }
};

struct ProofLine {
  Formula formula;
  Justification just;
};

/// A Hilbert-style derivation: hypotheses (the theory) plus justified lines;
/// the conclusion is the last line.
struct HilbertProof {
  std::vector<Formula> theory;
  std::vector<ProofLine> lines;

  const Formula& conclusion() const { return lines.back().formula; }
};

struct LineReport {
  enum class Status { Ok, Bad, Undecided };
  Status status = Status::Ok;
  std::string note;
  std::optional<SideConditionReport> side_conditions;
};

struct ProofCheckResult {
  enum class Status { Accepted, Rejected, Inconclusive };
  Status status;
  std::size_t line = 0;  // 0-based index of the deciding line (Rejected/Inconclusive)
  std::string reason;
  std::vector<LineReport> lines;

  bool accepted() const { return status == Status::Accepted; }
};

/// Re-verifies every line: hypotheses against the theory, axiom instances
/// against their claimed schemes (including Ax4/Ax5 side conditions), MP
/// against strictly earlier lines. A line whose only defect is an Ax5
/// equality that did not resolve within bounds makes the proof Inconclusive
/// rather than Rejected.
inline ProofCheckResult check_proof(const HilbertProof& p, const Bounds& bounds = {}) {
  ProofCheckResult out{ProofCheckResult::Status::Accepted, 0, {}, {}};
  out.lines.resize(p.lines.size());
  std::optional<std::size_t> first_bad, first_undecided;
  std::string bad_reason, undecided_reason;

  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const ProofLine& line = p.lines[i];
    LineReport& rep = out.lines[i];
    auto bad = [&](std::string why) {
      rep.status = LineReport::Status::Bad;
      rep.note = why;
      if (!first_bad) {
        first_bad = i;
        bad_reason = std::move(why);
      }
    };

    WfResult wf = wf_formula(line.formula);
    if (!wf.well_formed) {
      bad("ill-formed formula: atom " + print_statement(*wf.offending) + " is not in CL->");
      continue;
    }

    switch (line.just.kind) {
      case Justification::Kind::Hypothesis: {
        if (line.just.hyp_index >= p.theory.size()) {
          bad("hypothesis index out of range");
          break;
        }
        if (p.theory[line.just.hyp_index] != line.formula) {
          bad("formula differs from theory entry " + std::to_string(line.just.hyp_index + 1));
          break;
        }
        rep.note = "hyp";
        break;
      }
      case Justification::Kind::Axiom: {
        AxiomCheck c = verify_axiom(line.formula, line.just.axiom, bounds);
        rep.side_conditions = c.report;
        if (c.status == AxiomCheck::Status::Fail) {
          bad(c.reason);
        } else if (c.status == AxiomCheck::Status::Unknown) {
          rep.status = LineReport::Status::Undecided;
          rep.note = c.reason;
          if (!first_undecided) {
            first_undecided = i;
            undecided_reason = c.reason;
          }
        } else {
          rep.note = axiom_name(line.just.axiom) + "[" + c.instantiation + "]";
        }
        break;
      }
      case Justification::Kind::MP: {
        std::size_t a = line.just.mp_implication, b = line.just.mp_antecedent;
        if (a >= i || b >= i) {
          bad("MP must reference strictly earlier lines");
          break;
        }
        const Formula& imp = p.lines[a].formula;
        if (!imp.is_implies()) {
          bad("MP: line " + std::to_string(a + 1) + " is not an implication");
          break;
        }
        if (imp.antecedent() != p.lines[b].formula) {
          bad("MP: line " + std::to_string(b + 1) + " does not match the antecedent");
          break;
        }
        if (imp.consequent() != line.formula) {
          bad("MP: conclusion does not match the consequent");
          break;
        }
        rep.note = "MP";
        break;
      }
    }
  }

  if (p.lines.empty()) {
    out.status = ProofCheckResult::Status::Rejected;
    out.reason = "empty proof";
    return out;
  }
  if (first_bad) {
    out.status = ProofCheckResult::Status::Rejected;
    out.line = *first_bad;
    out.reason = bad_reason;
  } else if (first_undecided) {
    out.status = ProofCheckResult::Status::Inconclusive;
    out.line = *first_undecided;
    out.reason = undecided_reason;
  }
  return out;
}

// ---- proof file format -----------------------------------------------------
//
//   # comment
//   theory 1: <formula>
//   ...
//   1. <formula> ; hyp 1
//   2. <formula> ; Ax4[M=..., N=..., s=..., t=...]
//   3. <formula> ; MP 2 1
//
// Line and theory numbers are 1-based and must be consecutive. The
// instantiation bracket is optional on input; the checker re-verifies it
// either way.

inline std::string print_proof(const HilbertProof& p) {
  std::string out;
  for (std::size_t i = 0; i < p.theory.size(); ++i)
    out += "theory " + std::to_string(i + 1) + ": " + print_formula(p.theory[i]) + "\n";
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const ProofLine& line = p.lines[i];
    out += std::to_string(i + 1) + ". " + print_formula(line.formula) + " ; ";
    switch (line.just.kind) {
      case Justification::Kind::Hypothesis:
        out += "hyp " + std::to_string(line.just.hyp_index + 1);
        break;
      case Justification::Kind::Axiom:
        out += axiom_name(line.just.axiom);
        if (!line.just.instantiation.empty()) out += "[" + line.just.instantiation + "]";
        break;
      case Justification::Kind::MP:
        out += "MP " + std::to_string(line.just.mp_implication + 1) + " " +
               std::to_string(line.just.mp_antecedent + 1);
        break;
    }
    out += "\n";
  }
  return out;
}

namespace detail {

inline std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace detail

inline HilbertProof parse_proof(const std::string& text) {
  HilbertProof p;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip(raw);
    if (line.empty() || line[0] == '#') continue;
    auto err = [&](const std::string& why) {
      throw parse_error("proof file line " + std::to_string(lineno) + ": " + why);
    };

    if (line.rfind("theory", 0) == 0) {
      std::size_t colon = line.find(':');
      if (colon == std::string::npos) err("missing ':' after theory index");
      std::string idx = detail::strip(line.substr(6, colon - 6));
      std::size_t want = p.theory.size() + 1;
      if (idx != std::to_string(want)) err("theory entries must be numbered consecutively");
      if (!p.lines.empty()) err("theory entries must precede proof lines");
      p.theory.push_back(parse_formula(line.substr(colon + 1)));
      continue;
    }

    std::size_t dot = line.find('.');
    if (dot == std::string::npos) err("expected `n. formula ; justification`");
    std::string num = detail::strip(line.substr(0, dot));
    if (num != std::to_string(p.lines.size() + 1)) err("lines must be numbered consecutively");
    std::size_t semi = line.rfind(';');
    if (semi == std::string::npos || semi <= dot) err("missing `;` before the justification");
    Formula f = parse_formula(line.substr(dot + 1, semi - dot - 1));
    std::string just = detail::strip(line.substr(semi + 1));

    if (just.rfind("hyp", 0) == 0) {
      long k = 0;
      try {
        k = std::stol(detail::strip(just.substr(3)));
      } catch (...) {
        err("bad hypothesis index");
      }
      if (k < 1) err("hypothesis indices are 1-based");
      p.lines.push_back(ProofLine{f, Justification::hypothesis(static_cast<std::size_t>(k - 1))});
    } else if (just.rfind("MP", 0) == 0) {
      std::istringstream js(just.substr(2));
      long a = 0, b = 0;
      if (!(js >> a >> b) || a < 1 || b < 1) err("bad MP indices");
      std::string rest;
      if (js >> rest) err("trailing tokens after MP indices");
      p.lines.push_back(ProofLine{
          f, Justification::modus_ponens(static_cast<std::size_t>(a - 1),
                                         static_cast<std::size_t>(b - 1))});
    } else if (just.rfind("Ax", 0) == 0) {
      std::size_t bracket = just.find('[');
      std::string idpart = detail::strip(bracket == std::string::npos ? just.substr(2)
                                                                      : just.substr(2, bracket - 2));
      long id = 0;
      try {
        id = std::stol(idpart);
      } catch (...) {
        err("bad axiom id");
      }
      if (id < 1 || id > 8) err("axiom id out of range");
      std::string inst;
      if (bracket != std::string::npos) {
        if (just.back() != ']') err("unterminated instantiation bracket");
        inst = just.substr(bracket + 1, just.size() - bracket - 2);
      }
      p.lines.push_back(
          ProofLine{f, Justification::axiom_instance(static_cast<AxiomId>(id), inst)});
    } else {
      err("unknown justification: " + just);
    }
  }
  if (p.lines.empty()) throw parse_error("proof file has no proof lines");
  return p;
}

/// Drops lines the conclusion does not depend on and renumbers MP references.
inline HilbertProof prune_proof(const HilbertProof& p) {
  if (p.lines.empty()) return p;
  std::vector<bool> keep(p.lines.size(), false);
  std::vector<std::size_t> stack{p.lines.size() - 1};
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    if (keep[i]) continue;
    keep[i] = true;
    if (p.lines[i].just.kind == Justification::Kind::MP) {
      stack.push_back(p.lines[i].just.mp_implication);
      stack.push_back(p.lines[i].just.mp_antecedent);
    }
  }
  std::vector<std::size_t> remap(p.lines.size(), 0);
  HilbertProof out;
  out.theory = p.theory;
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    if (!keep[i]) continue;
    remap[i] = out.lines.size();
    ProofLine line = p.lines[i];
    if (line.just.kind == Justification::Kind::MP) {
      line.just.mp_implication = remap[line.just.mp_implication];
      line.just.mp_antecedent = remap[line.just.mp_antecedent];
    }
    out.lines.push_back(std::move(line));
  }
  return out;
}

}  // namespace lcl
