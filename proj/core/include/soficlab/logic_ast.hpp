#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "soficlab/subgroup.hpp"

namespace soficlab::logic {

// Immutable syntax trees for first-order sentences in the language of groups.
// Nodes are shared; equality is structural.

enum class TermKind { Variable, Identity, Product, Inverse, Commutator };

class Term {
 public:
  /// The identity term `1`.
  Term();
  static Term variable(std::string name);
  static Term one() { return Term(); }
  static Term product(Term a, Term b);
  static Term inverse(Term a);
  /// [a, b] = a^-1 b^-1 a b
  static Term commutator(Term a, Term b);

  TermKind kind() const noexcept;
  const std::string& name() const;
  /// First operand of a product, commutator or inverse.
  const Term& lhs() const;
  const Term& rhs() const;

  bool mentions(std::string_view var) const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct MacroCall;

/// One argument of a macro call: an integer literal, an element term, a
/// nested set-valued macro call or a power-reading keyword.
class MacroArg {
 public:
  using Value = std::variant<std::int64_t, Term, std::shared_ptr<const MacroCall>, PowerReading>;

  static MacroArg integer(std::int64_t v) { return MacroArg(Value(v)); }
  static MacroArg element(Term t) { return MacroArg(Value(std::move(t))); }
  static MacroArg set(MacroCall call);
  static MacroArg reading(PowerReading r) { return MacroArg(Value(r)); }

  bool is_integer() const noexcept { return value_.index() == 0; }
  bool is_element() const noexcept { return value_.index() == 1; }
  bool is_set() const noexcept { return value_.index() == 2; }
  bool is_reading() const noexcept { return value_.index() == 3; }
  std::int64_t as_integer() const { return std::get<0>(value_); }
  const Term& as_element() const { return std::get<1>(value_); }
  const MacroCall& as_set() const { return *std::get<2>(value_); }
  PowerReading as_reading() const { return std::get<3>(value_); }

  friend bool operator==(const MacroArg& a, const MacroArg& b);

 private:
  explicit MacroArg(Value v) : value_(std::move(v)) {}
  Value value_;
};

struct MacroCall {
  std::string name;
  std::vector<MacroArg> args;

  friend bool operator==(const MacroCall& a, const MacroCall& b) = default;
};

enum class FormulaKind { Equals, Not, And, Or, Implies, Forall, Exists, Macro };

class Formula {
 public:
  static Formula equals(Term a, Term b);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  static Formula macro(MacroCall call);

  FormulaKind kind() const noexcept;
  /// Sides of an equation.
  const Term& left_term() const;
  const Term& right_term() const;
  /// Operand of a negation, or the left side of a binary connective.
  const Formula& lhs() const;
  const Formula& rhs() const;
  /// Bound variable and body of a quantifier.
  const std::string& variable() const;
  const Formula& body() const;
  const MacroCall& call() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_variables(const Formula& f);

std::string to_string(const Term& t);
std::string to_string(const MacroCall& call);
/// Canonical text: minimal parentheses, `->` right-associative, `&` and `|`
/// left-associative, quantifier scope extending to the right.
std::string to_string(const Formula& f);

std::string_view reading_keyword(PowerReading r);

}  // namespace soficlab::logic
