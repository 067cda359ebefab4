#include "soficlab/logic_eval.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "soficlab/errors.hpp"

namespace soficlab::logic {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Naive: return "naive";
    case Strategy::ClassReduced: return "class-reduced";
    case Strategy::CentralizerAware: return "centralizer-aware";
  }
  return "?";
}

Strategy parse_strategy(std::string_view text) {
  if (text == "naive") return Strategy::Naive;
  if (text == "class-reduced") return Strategy::ClassReduced;
  if (text == "centralizer-aware") return Strategy::CentralizerAware;
  throw InvalidArgument("unknown strategy '" + std::string(text) + "'");
}

namespace {

enum class Op : std::uint8_t { Var, One, Mul, Inv, Comm };

struct TermCode {
  std::vector<std::pair<Op, std::uint32_t>> ops;
};

enum class ArgTag { Integer, Element, Set, Reading };

struct CArg {
  ArgTag tag = ArgTag::Integer;
  std::int64_t integer = 0;
  TermCode term;
  int set = -1;
  PowerReading reading = PowerReading::GeneratedSubgroup;
};

struct CMacro {
  const MacroDef* def;
  std::vector<CArg> args;
};

struct CNode {
  FormulaKind kind = FormulaKind::Equals;
  int a = -1;
  int b = -1;
  TermCode lt, rt;
  std::uint32_t slot = 0;
  std::string var;
  std::optional<TermCode> commuting_with;
  bool reduced = false;
  bool root_block = false;
  std::vector<std::uint32_t> prefix;
  int macro = -1;
};

struct Program {
  std::vector<CNode> nodes;
  std::vector<CMacro> macros;
  std::vector<std::string> free_names;  // slots 0..free_names.size()-1
  std::uint32_t slots = 0;
  int root = -1;
};

// If f is `a*b = b*a` with one side of the product the variable `h` and the
// other a term t not mentioning h, returns t.
std::optional<Term> commuting_partner(const Formula& f, const std::string& h) {
  if (f.kind() != FormulaKind::Equals) return std::nullopt;
  const Term& l = f.left_term();
  const Term& r = f.right_term();
  if (l.kind() != TermKind::Product || r.kind() != TermKind::Product) return std::nullopt;
  if (!(l.lhs() == r.rhs() && l.rhs() == r.lhs())) return std::nullopt;
  const auto is_h = [&](const Term& t) { return t.kind() == TermKind::Variable && t.name() == h; };
  if (is_h(l.lhs()) && !l.rhs().mentions(h)) return l.rhs();
  if (is_h(l.rhs()) && !l.lhs().mentions(h)) return l.lhs();
  return std::nullopt;
}

class Compiler {
 public:
  Compiler(Program& p, Strategy s, const MacroRegistry& r) : prog_(p), strategy_(s), registry_(r) {
    for (std::uint32_t i = 0; i < p.free_names.size(); ++i) scope_.emplace_back(p.free_names[i], i);
    prog_.slots = static_cast<std::uint32_t>(p.free_names.size());
  }

  void run(const Formula& f) {
    std::vector<std::uint32_t> env_prefix(prog_.free_names.size());
    std::iota(env_prefix.begin(), env_prefix.end(), 0u);
    prog_.root = compile(f, Context{true, true, env_prefix});
  }

 private:
  struct Context {
    bool top;                             // not under any quantifier (or inside the outer block)
    bool root;                            // on the root quantifier chain
    std::vector<std::uint32_t> prefix;    // fixed slots for orbit reduction
  };

  std::uint32_t lookup(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == name) return it->second;
    throw InvalidArgument("free variable '" + name + "' has no value");
  }

  void emit(const Term& t, TermCode& code) const {
    switch (t.kind()) {
      case TermKind::Variable: code.ops.emplace_back(Op::Var, lookup(t.name())); return;
      case TermKind::Identity: code.ops.emplace_back(Op::One, 0); return;
      case TermKind::Inverse:
        emit(t.lhs(), code);
        code.ops.emplace_back(Op::Inv, 0);
        return;
      case TermKind::Product:
      case TermKind::Commutator:
        emit(t.lhs(), code);
        emit(t.rhs(), code);
        code.ops.emplace_back(t.kind() == TermKind::Product ? Op::Mul : Op::Comm, 0);
        return;
    }
  }

  TermCode code_of(const Term& t) const {
    TermCode c;
    emit(t, c);
    return c;
  }

  int compile_macro(const MacroCall& call) {
    const MacroDef* def = registry_.find(call.name);
    if (!def) throw InvalidArgument("unknown macro '" + call.name + "'");
    CMacro m{def, {}};
    for (const auto& a : call.args) {
      CArg c;
      if (a.is_integer()) {
        c.integer = a.as_integer();
      } else if (a.is_element()) {
        c.tag = ArgTag::Element;
        c.term = code_of(a.as_element());
      } else if (a.is_set()) {
        c.tag = ArgTag::Set;
        c.set = compile_macro(a.as_set());
      } else {
        c.tag = ArgTag::Reading;
        c.reading = a.as_reading();
      }
      m.args.push_back(std::move(c));
    }
    prog_.macros.push_back(std::move(m));
    return static_cast<int>(prog_.macros.size() - 1);
  }

  int add(CNode n) {
    prog_.nodes.push_back(std::move(n));
    return static_cast<int>(prog_.nodes.size() - 1);
  }

  int compile(const Formula& f, const Context& ctx) {
    CNode n;
    n.kind = f.kind();
    switch (f.kind()) {
      case FormulaKind::Equals:
        n.lt = code_of(f.left_term());
        n.rt = code_of(f.right_term());
        return add(std::move(n));
      case FormulaKind::Macro:
        n.macro = compile_macro(f.call());
        return add(std::move(n));
      case FormulaKind::Not:
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Implies: {
        const Context sub{ctx.top, false, ctx.prefix};
        n.a = compile(f.lhs(), sub);
        if (f.kind() != FormulaKind::Not) n.b = compile(f.rhs(), sub);
        return add(std::move(n));
      }
      case FormulaKind::Forall:
      case FormulaKind::Exists: break;
    }

    n.var = f.variable();
    n.slot = prog_.slots++;
    const Formula* body = &f.body();
    if (strategy_ == Strategy::CentralizerAware) {
      const FormulaKind shape = f.kind() == FormulaKind::Forall ? FormulaKind::Implies : FormulaKind::And;
      if (body->kind() == shape) {
        if (auto t = commuting_partner(body->lhs(), n.var)) {
          n.commuting_with = code_of(*t);
          body = &body->rhs();
        }
      }
    }
    n.reduced = ctx.top && strategy_ != Strategy::Naive;
    n.root_block = ctx.root;
    if (n.reduced) n.prefix = ctx.prefix;

    scope_.emplace_back(n.var, n.slot);
    Context inner{false, false, {}};
    if (n.reduced && body->kind() == f.kind()) {
      inner = Context{true, ctx.root, ctx.prefix};
      inner.prefix.push_back(n.slot);
    } else if (!n.reduced && ctx.root && body->kind() == f.kind()) {
      inner.root = true;
    }
    n.a = compile(*body, inner);
    scope_.pop_back();
    return add(std::move(n));
  }

  Program& prog_;
  Strategy strategy_;
  const MacroRegistry& registry_;
  std::vector<std::pair<std::string, std::uint32_t>> scope_;
};

using Range = std::shared_ptr<const std::vector<ElementId>>;

class Machine {
 public:
  Machine(const FiniteGroupModel& g, const Program& p, const EvalLimits& limits)
      : g_(g), p_(p), limits_(limits), env_(p.slots, 0) {
    std::vector<ElementId> all(g.order());
    std::iota(all.begin(), all.end(), 0u);
    all_ = std::make_shared<const std::vector<ElementId>>(std::move(all));
  }

  void bind(std::uint32_t slot, ElementId x) { env_[slot] = x; }

  EvalResult run() {
    witness_.clear();
    EvalResult r;
    r.value = eval(p_.root);
    r.witness.assign(witness_.rbegin(), witness_.rend());
    return r;
  }

 private:
  ElementId term(const TermCode& code) {
    stack_.clear();
    for (const auto& [op, slot] : code.ops) {
      switch (op) {
        case Op::Var: stack_.push_back(env_[slot]); break;
        case Op::One: stack_.push_back(FiniteGroupModel::identity()); break;
        case Op::Inv: stack_.back() = g_.inv(stack_.back()); break;
        case Op::Mul:
        case Op::Comm: {
          const ElementId b = stack_.back();
          stack_.pop_back();
          const ElementId a = stack_.back();
          stack_.back() = op == Op::Mul ? g_.mul(a, b) : g_.commutator(a, b);
          break;
        }
      }
    }
    return stack_.back();
  }

  std::vector<MacroValue> arguments(const CMacro& m) {
    std::vector<MacroValue> values;
    values.reserve(m.args.size());
    for (const auto& a : m.args) {
      switch (a.tag) {
        case ArgTag::Integer: values.emplace_back(a.integer); break;
        case ArgTag::Element: values.emplace_back(term(a.term)); break;
        case ArgTag::Set: values.emplace_back(set_macro(a.set)); break;
        case ArgTag::Reading: values.emplace_back(a.reading); break;
      }
    }
    return values;
  }

  template <class Fn>
  const std::variant<ElementSet, bool>& memoized(const MacroDef* def, std::vector<MacroValue> args, Fn&& fn) {
    auto key = std::make_pair(def, std::move(args));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto value = fn(key.second);
    if (memo_.size() >= limits_.memo_cap) memo_.clear();
    return memo_.emplace(std::move(key), std::move(value)).first->second;
  }

  ElementSet set_macro(int index) {
    const CMacro& m = p_.macros[index];
    if (m.def->result != MacroResult::Set) throw InvalidArgument(m.def->name + " is not set-valued");
    return std::get<ElementSet>(memoized(m.def, arguments(m), [&](const std::vector<MacroValue>& v) {
      return std::variant<ElementSet, bool>(m.def->set_fn(g_, v));
    }));
  }

  bool predicate_macro(int index) {
    const CMacro& m = p_.macros[index];
    if (m.def->result != MacroResult::Predicate) throw InvalidArgument(m.def->name + " is not a predicate");
    return std::get<bool>(memoized(m.def, arguments(m), [&](const std::vector<MacroValue>& v) {
      return std::variant<ElementSet, bool>(m.def->predicate_fn(g_, v));
    }));
  }

  Range centralizer_of(ElementId x) {
    auto it = centralizers_.find(x);
    if (it != centralizers_.end()) return it->second;
    auto c = centralizer_in_group(g_, ElementSet::singleton(x));
    auto r = std::make_shared<const std::vector<ElementId>>(c.ids());
    if (centralizers_.size() >= limits_.memo_cap) centralizers_.clear();
    centralizers_.emplace(x, r);
    return r;
  }

  Range reduced_range(int index, const CNode& n) {
    std::vector<ElementId> key;
    for (auto s : n.prefix) key.push_back(env_[s]);
    const std::optional<ElementId> partner =
        n.commuting_with ? std::optional<ElementId>(term(*n.commuting_with)) : std::nullopt;
    key.push_back(partner ? *partner + 1 : 0);
    auto cache_key = std::make_pair(index, key);
    auto it = orbit_cache_.find(cache_key);
    if (it != orbit_cache_.end()) return it->second;
    key.pop_back();

    std::vector<Orbit> orbits;
    if (key.empty() && !partner) {
      const auto& cc = g_.classes();
      for (const auto& c : cc.classes) orbits.push_back({c.front(), c.size()});
    } else {
      const ElementSet domain = partner ? ElementSet(*centralizer_of(*partner)) : g_.all();
      std::vector<ElementId> actors;
      if (key.empty()) {
        actors = g_.generators();
      } else {
        actors = generating_set(g_, centralizer_in_group(g_, ElementSet(key)));
      }
      orbits = conjugation_orbits(g_, actors, domain);
    }
    std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
      return a.size != b.size ? a.size < b.size : a.representative < b.representative;
    });
    std::vector<ElementId> reps;
    reps.reserve(orbits.size());
    for (const auto& o : orbits) reps.push_back(o.representative);
    auto r = std::make_shared<const std::vector<ElementId>>(std::move(reps));
    if (orbit_cache_.size() >= limits_.memo_cap) orbit_cache_.clear();
    orbit_cache_.emplace(std::move(cache_key), r);
    return r;
  }

  Range range(int index, const CNode& n) {
    if (n.reduced) return reduced_range(index, n);
    if (n.commuting_with) return centralizer_of(term(*n.commuting_with));
    return all_;
  }

  bool eval(int index) {
    const CNode& n = p_.nodes[index];
    switch (n.kind) {
      case FormulaKind::Equals: {
        const ElementId l = term(n.lt);
        return l == term(n.rt);
      }
      case FormulaKind::Not: return !eval(n.a);
      case FormulaKind::And: return eval(n.a) && eval(n.b);
      case FormulaKind::Or: return eval(n.a) || eval(n.b);
      case FormulaKind::Implies: return !eval(n.a) || eval(n.b);
      case FormulaKind::Macro: return predicate_macro(n.macro);
      case FormulaKind::Forall:
      case FormulaKind::Exists: break;
    }
    const bool universal = n.kind == FormulaKind::Forall;
    const Range r = range(index, n);
    for (ElementId x : *r) {
      env_[n.slot] = x;
      if (eval(n.a) != universal) {
        if (n.root_block) witness_.push_back({n.var, x});
        return !universal;
      }
    }
    return universal;
  }

  const FiniteGroupModel& g_;
  const Program& p_;
  const EvalLimits& limits_;
  std::vector<ElementId> env_;
  std::vector<ElementId> stack_;
  Range all_;
  std::map<std::pair<const MacroDef*, std::vector<MacroValue>>, std::variant<ElementSet, bool>> memo_;
  std::unordered_map<ElementId, Range> centralizers_;
  std::map<std::pair<int, std::vector<ElementId>>, Range> orbit_cache_;
  std::vector<Binding> witness_;
};

void check_cap(const FiniteGroupModel& g, Strategy s, const EvalLimits& limits) {
  const std::size_t cap = s == Strategy::Naive ? limits.naive_cap : limits.reduced_cap;
  if (g.order() > cap)
    throw CapExceeded(std::string(to_string(s)) + " evaluation is capped at order " + std::to_string(cap) +
                      ", group has order " + std::to_string(g.order()));
}

Program compile(const Formula& f, Strategy s, std::vector<std::string> free_names, const MacroRegistry* registry) {
  Program p;
  p.free_names = std::move(free_names);
  Compiler(p, s, registry ? *registry : MacroRegistry::builtin()).run(f);
  return p;
}

}  // namespace

EvalResult evaluate_with_witness(const FiniteGroupModel& g, const Formula& f, Strategy strategy,
                                 const Environment& env, const EvalLimits& limits, const MacroRegistry* registry) {
  check_cap(g, strategy, limits);
  std::vector<std::string> names;
  std::vector<ElementId> values;
  for (const auto& v : free_variables(f)) {
    auto it = env.find(v);
    if (it == env.end()) throw InvalidArgument("free variable '" + v + "' has no value");
    if (it->second >= g.order()) throw InvalidArgument("value of '" + v + "' is not an element");
    names.push_back(v);
    values.push_back(it->second);
  }
  const Program p = compile(f, strategy, names, registry);
  Machine m(g, p, limits);
  for (std::uint32_t i = 0; i < values.size(); ++i) m.bind(i, values[i]);
  return m.run();
}

bool evaluate(const FiniteGroupModel& g, const Formula& f, Strategy strategy, const EvalLimits& limits,
              const MacroRegistry* registry) {
  return evaluate_with_witness(g, f, strategy, {}, limits, registry).value;
}

ElementSet defined_set(const FiniteGroupModel& g, const Formula& f, const std::string& var, Strategy strategy,
                       const EvalLimits& limits, const MacroRegistry* registry) {
  check_cap(g, strategy, limits);
  const auto free = free_variables(f);
  for (const auto& v : free)
    if (v != var) throw InvalidArgument("free variable '" + v + "' has no value");
  if (!free.count(var)) return evaluate(g, f, strategy, limits, registry) ? g.all() : ElementSet();
  const Program p = compile(f, strategy, {var}, registry);
  Machine m(g, p, limits);
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    m.bind(0, x);
    if (m.run().value) out.push_back(x);
  }
  return ElementSet::from_sorted(std::move(out));
}

}  // namespace soficlab::logic
