#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "soficlab/subgroup.hpp"

namespace soficlab::logic {

enum class ParamKind { Integer, Element, Set, ElementOrSet, Reading };
enum class MacroResult { Set, Predicate };

using MacroValue = std::variant<std::int64_t, ElementId, ElementSet, PowerReading>;
using SetMacroFn = std::function<ElementSet(const FiniteGroupModel&, const std::vector<MacroValue>&)>;
using PredicateMacroFn = std::function<bool(const FiniteGroupModel&, const std::vector<MacroValue>&)>;

/// A registered macro. Implementations must be pure and commute with inner
/// automorphisms of the group, otherwise class-reduced evaluation is unsound.
struct MacroDef {
  std::string name;
  MacroResult result = MacroResult::Predicate;
  std::vector<ParamKind> params;
  /// The last parameter may repeat (at least once).
  bool variadic = false;
  SetMacroFn set_fn;
  PredicateMacroFn predicate_fn;
};

class MacroRegistry {
 public:
  void add(MacroDef def);
  const MacroDef* find(std::string_view name) const;
  std::vector<std::string> names() const;

  /// Centralizer, SetProduct, GeneratedSubgroup, StabilizedPower, IsTrivial,
  /// IndexAtMost, ExistsSubgroupIsoAlt, InternalDirectFactor and
  /// AltFactorIndexAtMost.
  static const MacroRegistry& builtin();

 private:
  std::map<std::string, MacroDef, std::less<>> defs_;
};

/// An Element value as a singleton, or a Set value as is.
ElementSet as_set(const MacroValue& v);

/// S contains a subgroup A isomorphic to Alt(l) such that, with B the
/// centralizer of A in S, A ∩ B = {1} and [S : AB] <= k. S must be a subgroup.
bool alt_factor_index_at_most(const FiniteGroupModel& g, const ElementSet& s, std::size_t l, std::size_t k);

}  // namespace soficlab::logic
