#include "soficlab/logic_macros.hpp"

#include "soficlab/errors.hpp"

namespace soficlab::logic {

void MacroRegistry::add(MacroDef def) {
  if (def.params.empty() && def.variadic) throw InvalidArgument("variadic macro needs a parameter");
  if (def.result == MacroResult::Set ? !def.set_fn : !def.predicate_fn)
    throw InvalidArgument("macro " + def.name + " has no implementation");
  auto name = def.name;
  defs_.insert_or_assign(std::move(name), std::move(def));
}

const MacroDef* MacroRegistry::find(std::string_view name) const {
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

std::vector<std::string> MacroRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, def] : defs_) out.push_back(name);
  return out;
}

ElementSet as_set(const MacroValue& v) {
  if (const auto* e = std::get_if<ElementId>(&v)) return ElementSet::singleton(*e);
  if (const auto* s = std::get_if<ElementSet>(&v)) return *s;
  throw InvalidArgument("macro argument is not an element or set");
}

namespace {

std::size_t as_count(const MacroValue& v) {
  const auto* i = std::get_if<std::int64_t>(&v);
  if (!i) throw InvalidArgument("macro argument is not an integer");
  if (*i < 0) throw InvalidArgument("macro integer argument must be nonnegative");
  return static_cast<std::size_t>(*i);
}

ElementSet union_of(const std::vector<MacroValue>& args, std::size_t from = 0) {
  ElementSet out;
  for (std::size_t i = from; i < args.size(); ++i) out = out.unite(as_set(args[i]));
  return out;
}

bool has_subgroup_iso_alt(const FiniteGroupModel& g, const ElementSet& s, std::size_t l) {
  if (!is_subgroup(g, s)) return false;
  if (l <= 2) return true;
  if (l == 3) {
    for (ElementId x : s)
      if (g.element_order(x) == 3) return true;
    return false;
  }
  const auto sub = subgroup_model(g, s, "S");
  return subgroup_search_iso_alt(sub, l).has_value();
}

}  // namespace

bool alt_factor_index_at_most(const FiniteGroupModel& g, const ElementSet& s, std::size_t l, std::size_t k) {
  if (l < 4) throw InvalidArgument("Alt factor search needs l >= 4");
  if (!is_subgroup(g, s)) return false;
  std::uint64_t alt_order = 1;
  for (std::size_t i = 3; i <= l; ++i) alt_order *= i;
  if (s.size() % alt_order != 0) return false;
  const auto sub = subgroup_model(g, s, "S");
  const auto accept = [&](const ElementSet& a) {
    const auto b = centralizer_in_group(sub, a);
    if (a.intersect(b) != ElementSet::singleton(FiniteGroupModel::identity())) return false;
    const auto ab = set_product(sub, a, b);
    return ab.size() * k >= sub.order();
  };
  return subgroup_search_iso_alt(sub, l, accept).has_value();
}

const MacroRegistry& MacroRegistry::builtin() {
  static const MacroRegistry registry = [] {
    using P = ParamKind;
    MacroRegistry r;
    r.add({"Centralizer", MacroResult::Set, {P::ElementOrSet}, true,
           [](const FiniteGroupModel& g, const std::vector<MacroValue>& a) {
             return centralizer_in_group(g, union_of(a));
           },
           {}});
    r.add({"SetProduct", MacroResult::Set, {P::Set, P::Set}, false,
           [](const FiniteGroupModel& g, const std::vector<MacroValue>& a) {
             return set_product(g, as_set(a[0]), as_set(a[1]));
           },
           {}});
    r.add({"GeneratedSubgroup", MacroResult::Set, {P::ElementOrSet}, true,
           [](const FiniteGroupModel& g, const std::vector<MacroValue>& a) {
             return generated_subgroup(g, union_of(a));
           },
           {}});
    r.add({"StabilizedPower", MacroResult::Set, {P::Set, P::Reading}, false,
           [](const FiniteGroupModel& g, const std::vector<MacroValue>& a) {
             return iterated_product_stabilization(g, as_set(a[0])).reading(std::get<PowerReading>(a[1]));
           },
           {}});
    r.add({"IsTrivial", MacroResult::Predicate, {P::Set}, false, {},
           [](const FiniteGroupModel&, const std::vector<MacroValue>& a) {
             return as_set(a[0]) == ElementSet::singleton(FiniteGroupModel::identity());
           }});
    r.add({"IndexAtMost", MacroResult::Predicate, {P::Integer, P::Set, P::Set}, false, {},
           [](const FiniteGroupModel& g, const std::vector<MacroValue>& a) {
             const auto k = as_count(a[0]);
             const auto h = as_set(a[1]);
             const auto sub = as_set(a[2]);
             if (!sub.is_subset_of(h) || !is_subgroup(g, h) || !is_subgroup(g, sub)) return false;
             return h.size() <= k * sub.size();
           }});
    r.add({"ExistsSubgroupIsoAlt", MacroResult::Predicate, {P::Integer, P::Set}, false, {},
           [](const FiniteGroupModel& g, const std::vector<MacroValue>& a) {
             return has_subgroup_iso_alt(g, as_set(a[1]), as_count(a[0]));
           }});
    r.add({"InternalDirectFactor", MacroResult::Predicate, {P::Set, P::Set, P::Set}, false, {},
           [](const FiniteGroupModel& g, const std::vector<MacroValue>& a) {
             const auto h = as_set(a[0]);
             if (!is_subgroup(g, h)) return false;
             return internal_direct_factor_check(g, h, as_set(a[1]), as_set(a[2]));
           }});
    r.add({"AltFactorIndexAtMost", MacroResult::Predicate, {P::Integer, P::Integer, P::Set}, false, {},
           [](const FiniteGroupModel& g, const std::vector<MacroValue>& a) {
             return alt_factor_index_at_most(g, as_set(a[2]), as_count(a[0]), as_count(a[1]));
           }});
    return r;
  }();
  return registry;
}

}  // namespace soficlab::logic
