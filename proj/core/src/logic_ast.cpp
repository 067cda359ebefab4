#include "soficlab/logic_ast.hpp"

#include <optional>

#include "soficlab/errors.hpp"

namespace soficlab::logic {

struct Term::Node {
  TermKind kind;
  std::string name;
  std::vector<Term> children;
};

Term::Term() {
  static const auto identity = std::make_shared<const Node>(Node{TermKind::Identity, {}, {}});
  node_ = identity;
}

Term Term::variable(std::string name) {
  if (name.empty()) throw InvalidArgument("variable name must be nonempty");
  return Term(std::make_shared<const Node>(Node{TermKind::Variable, std::move(name), {}}));
}

Term Term::product(Term a, Term b) {
  return Term(std::make_shared<const Node>(Node{TermKind::Product, {}, {std::move(a), std::move(b)}}));
}

Term Term::inverse(Term a) {
  return Term(std::make_shared<const Node>(Node{TermKind::Inverse, {}, {std::move(a)}}));
}

Term Term::commutator(Term a, Term b) {
  return Term(std::make_shared<const Node>(Node{TermKind::Commutator, {}, {std::move(a), std::move(b)}}));
}

TermKind Term::kind() const noexcept { return node_->kind; }

const std::string& Term::name() const {
  if (node_->kind != TermKind::Variable) throw InvalidArgument("term is not a variable");
  return node_->name;
}

const Term& Term::lhs() const { return node_->children.at(0); }
const Term& Term::rhs() const { return node_->children.at(1); }

bool Term::mentions(std::string_view var) const {
  if (node_->kind == TermKind::Variable) return node_->name == var;
  for (const auto& c : node_->children)
    if (c.mentions(var)) return true;
  return false;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name &&
         a.node_->children == b.node_->children;
}

MacroArg MacroArg::set(MacroCall call) {
  return MacroArg(Value(std::make_shared<const MacroCall>(std::move(call))));
}

bool operator==(const MacroArg& a, const MacroArg& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (a.is_set()) return a.as_set() == b.as_set();
  return a.value_ == b.value_;
}

struct Formula::Node {
  FormulaKind kind;
  std::string var;
  std::vector<Term> terms;
  std::vector<Formula> children;
  std::optional<MacroCall> call;
};

Formula Formula::equals(Term a, Term b) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Equals, {}, {std::move(a), std::move(b)}, {}, std::nullopt}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Not, {}, {}, {std::move(f)}, std::nullopt}));
}

Formula Formula::conjunction(Formula a, Formula b) {
  return Formula(
      std::make_shared<const Node>(Node{FormulaKind::And, {}, {}, {std::move(a), std::move(b)}, std::nullopt}));
}

Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(
      std::make_shared<const Node>(Node{FormulaKind::Or, {}, {}, {std::move(a), std::move(b)}, std::nullopt}));
}

Formula Formula::implication(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Implies, {}, {}, {std::move(a), std::move(b)}, std::nullopt}));
}

Formula Formula::forall(std::string var, Formula body) {
  if (var.empty()) throw InvalidArgument("variable name must be nonempty");
  return Formula(
      std::make_shared<const Node>(Node{FormulaKind::Forall, std::move(var), {}, {std::move(body)}, std::nullopt}));
}

Formula Formula::exists(std::string var, Formula body) {
  if (var.empty()) throw InvalidArgument("variable name must be nonempty");
  return Formula(
      std::make_shared<const Node>(Node{FormulaKind::Exists, std::move(var), {}, {std::move(body)}, std::nullopt}));
}

Formula Formula::macro(MacroCall call) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Macro, {}, {}, {}, std::move(call)}));
}

FormulaKind Formula::kind() const noexcept { return node_->kind; }
const Term& Formula::left_term() const { return node_->terms.at(0); }
const Term& Formula::right_term() const { return node_->terms.at(1); }
const Formula& Formula::lhs() const { return node_->children.at(0); }
const Formula& Formula::rhs() const { return node_->children.at(1); }
const Formula& Formula::body() const { return node_->children.at(0); }

const std::string& Formula::variable() const {
  if (node_->kind != FormulaKind::Forall && node_->kind != FormulaKind::Exists)
    throw InvalidArgument("formula is not quantified");
  return node_->var;
}

const MacroCall& Formula::call() const {
  if (!node_->call) throw InvalidArgument("formula is not a macro atom");
  return *node_->call;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->var == b.node_->var && a.node_->terms == b.node_->terms &&
         a.node_->children == b.node_->children && a.node_->call == b.node_->call;
}

namespace {

void collect_free(const Term& t, const std::multiset<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Variable:
      if (!bound.count(t.name())) out.insert(t.name());
      return;
    case TermKind::Identity: return;
    case TermKind::Inverse: collect_free(t.lhs(), bound, out); return;
    case TermKind::Product:
    case TermKind::Commutator:
      collect_free(t.lhs(), bound, out);
      collect_free(t.rhs(), bound, out);
      return;
  }
}

void collect_free(const MacroCall& c, const std::multiset<std::string>& bound, std::set<std::string>& out) {
  for (const auto& a : c.args) {
    if (a.is_element()) collect_free(a.as_element(), bound, out);
    else if (a.is_set()) collect_free(a.as_set(), bound, out);
  }
}

void collect_free(const Formula& f, std::multiset<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Equals:
      collect_free(f.left_term(), bound, out);
      collect_free(f.right_term(), bound, out);
      return;
    case FormulaKind::Not: collect_free(f.lhs(), bound, out); return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      auto it = bound.insert(f.variable());
      collect_free(f.body(), bound, out);
      bound.erase(it);
      return;
    }
    case FormulaKind::Macro: collect_free(f.call(), bound, out); return;
  }
}

// Term precedence: 0 product, 1 factor (inverse), 2 base.
int term_level(const Term& t) {
  switch (t.kind()) {
    case TermKind::Product: return 0;
    case TermKind::Inverse: return 1;
    default: return 2;
  }
}

void print(const Term& t, std::string& out);

void print_at(const Term& t, int min_level, std::string& out) {
  if (term_level(t) < min_level) {
    out += '(';
    print(t, out);
    out += ')';
  } else {
    print(t, out);
  }
}

void print(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Variable: out += t.name(); return;
    case TermKind::Identity: out += '1'; return;
    case TermKind::Product:
      print_at(t.lhs(), 0, out);
      out += " * ";
      print_at(t.rhs(), 1, out);
      return;
    case TermKind::Inverse:
      print_at(t.lhs(), 2, out);
      out += "^-1";
      return;
    case TermKind::Commutator:
      out += '[';
      print(t.lhs(), out);
      out += ',';
      print(t.rhs(), out);
      out += ']';
      return;
  }
}

void print(const MacroCall& c, std::string& out) {
  out += c.name;
  out += '(';
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    if (i) out += ", ";
    const auto& a = c.args[i];
    if (a.is_integer()) out += std::to_string(a.as_integer());
    else if (a.is_element()) print(a.as_element(), out);
    else if (a.is_set()) print(a.as_set(), out);
    else out += reading_keyword(a.as_reading());
  }
  out += ')';
}

// Formula precedence: 0 quantifier, 1 implication, 2 disjunction,
// 3 conjunction, 4 unit.
int formula_level(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Forall:
    case FormulaKind::Exists: return 0;
    case FormulaKind::Implies: return 1;
    case FormulaKind::Or: return 2;
    case FormulaKind::And: return 3;
    default: return 4;
  }
}

void print(const Formula& f, std::string& out);

void print_at(const Formula& f, int min_level, std::string& out) {
  if (formula_level(f) < min_level) {
    out += '(';
    print(f, out);
    out += ')';
  } else {
    print(f, out);
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Equals:
      print(f.left_term(), out);
      out += " = ";
      print(f.right_term(), out);
      return;
    case FormulaKind::Not:
      out += '!';
      print_at(f.lhs(), f.lhs().kind() == FormulaKind::Equals ? 5 : 4, out);
      return;
    case FormulaKind::And:
      print_at(f.lhs(), 3, out);
      out += " & ";
      print_at(f.rhs(), 4, out);
      return;
    case FormulaKind::Or:
      print_at(f.lhs(), 2, out);
      out += " | ";
      print_at(f.rhs(), 3, out);
      return;
    case FormulaKind::Implies:
      print_at(f.lhs(), 2, out);
      out += " -> ";
      print_at(f.rhs(), 0, out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out += f.kind() == FormulaKind::Forall ? "forall " : "exists ";
      out += f.variable();
      out += ". ";
      print(f.body(), out);
      return;
    case FormulaKind::Macro: print(f.call(), out); return;
  }
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

std::string to_string(const MacroCall& call) {
  std::string out;
  print(call, out);
  return out;
}

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::string_view reading_keyword(PowerReading r) {
  return r == PowerReading::LiteralIntersection ? "literal" : "generated";
}

}  // namespace soficlab::logic
