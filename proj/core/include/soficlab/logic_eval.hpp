#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "soficlab/logic_ast.hpp"
#include "soficlab/logic_macros.hpp"

namespace soficlab::logic {

enum class Strategy {
  /// Every quantifier ranges over all of G in index order.
  Naive,
  /// The outermost block of like quantifiers ranges over orbit
  /// representatives of the centralizer of the already-fixed prefix (class
  /// representatives for the first variable), smallest orbits first.
  ClassReduced,
  /// ClassReduced, and `forall h. (g*h = h*g -> psi)` or
  /// `exists h. (g*h = h*g & psi)` range h over C(g) only.
  CentralizerAware,
};

std::string_view to_string(Strategy s);
/// "naive", "class-reduced" or "centralizer-aware".
Strategy parse_strategy(std::string_view text);

struct EvalLimits {
  std::size_t naive_cap = 5040;
  std::size_t reduced_cap = 1'000'000;
  /// Memoized macro results are dropped once this many accumulate.
  std::size_t memo_cap = 1 << 16;
};

struct Binding {
  std::string variable;
  ElementId element;

  friend bool operator==(const Binding&, const Binding&) = default;
};

struct EvalResult {
  bool value = false;
  /// Witnesses of a true existential outer block, or a counterexample to a
  /// false universal one; empty otherwise.
  std::vector<Binding> witness;
};

using Environment = std::map<std::string, ElementId, std::less<>>;

/// Truth of `f` in G with its free variables taken from `env`. Throws
/// InvalidArgument on a free variable missing from `env` and CapExceeded when
/// |G| is above the strategy cap.
EvalResult evaluate_with_witness(const FiniteGroupModel& g, const Formula& f, Strategy strategy,
                                 const Environment& env = {}, const EvalLimits& limits = {},
                                 const MacroRegistry* registry = nullptr);

bool evaluate(const FiniteGroupModel& g, const Formula& f, Strategy strategy, const EvalLimits& limits = {},
              const MacroRegistry* registry = nullptr);

/// {x in G : f holds with var = x}.
ElementSet defined_set(const FiniteGroupModel& g, const Formula& f, const std::string& var, Strategy strategy,
                       const EvalLimits& limits = {}, const MacroRegistry* registry = nullptr);

}  // namespace soficlab::logic
