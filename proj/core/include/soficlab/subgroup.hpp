#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "soficlab/group.hpp"

namespace soficlab {

// Definable-set algebra inside one FiniteGroupModel. All sets are ElementSets
// of that group; nothing here mutates the group.

ElementSet generated_subgroup(const FiniteGroupModel& g, const ElementSet& s);
/// Closure of `generators`, or nullopt once it grows past `max_order`.
std::optional<ElementSet> generated_subgroup_bounded(const FiniteGroupModel& g,
                                                     const std::vector<ElementId>& generators,
                                                     std::size_t max_order);
/// A small generating set of the subgroup `h`, chosen greedily in index order.
std::vector<ElementId> generating_set(const FiniteGroupModel& g, const ElementSet& h);

/// {x in G : xs = sx for all s in S}.
ElementSet centralizer_in_group(const FiniteGroupModel& g, const ElementSet& s);
/// {x in K : xs = sx for all s in S}.
ElementSet centralizer_within(const FiniteGroupModel& g, const ElementSet& k, const ElementSet& s);

/// {ab : a in A, b in B}.
ElementSet set_product(const FiniteGroupModel& g, const ElementSet& a, const ElementSet& b);

enum class PowerReading {
  /// The intersection over k >= 1 of A^k, exact once the power sequence repeats.
  LiteralIntersection,
  /// The limit of A ∪ A^2 ∪ ... ∪ A^k, which is <A> in a finite group.
  GeneratedSubgroup,
};

struct StabilizedPowers {
  ElementSet literal_intersection;
  ElementSet generated_subgroup;
  /// Number of distinct powers A^k met before the sequence repeated.
  std::size_t literal_steps = 0;

  const ElementSet& reading(PowerReading r) const {
    return r == PowerReading::LiteralIntersection ? literal_intersection : generated_subgroup;
  }
};

StabilizedPowers iterated_product_stabilization(const FiniteGroupModel& g, const ElementSet& a);

bool is_subgroup(const FiniteGroupModel& g, const ElementSet& h);
/// |G| / |H|; throws InvalidArgument if H is not a subgroup.
std::size_t index(const FiniteGroupModel& g, const ElementSet& h);
/// [K : H] for subgroups H <= K.
std::size_t relative_index(const FiniteGroupModel& g, const ElementSet& k, const ElementSet& h);

/// H is the internal direct product of A and B: A ∩ B = {1}, A and B commute
/// elementwise, |A||B| = |AB| and AB = H. Throws if H is not a subgroup.
bool internal_direct_factor_check(const FiniteGroupModel& g, const ElementSet& h,
                                  const ElementSet& a, const ElementSet& b);

/// Subgroup model of H (re-enumerated from a greedy generating set).
FiniteGroupModel subgroup_model(const FiniteGroupModel& g, const ElementSet& h, std::string name);

inline constexpr std::size_t kBruteForceCap = 100'000;

bool is_abelian(const FiniteGroupModel& g);
/// Simple iff |G| > 1 and every nontrivial conjugacy class generates G.
bool is_simple_bruteforce(const FiniteGroupModel& g, std::size_t cap = kBruteForceCap);
bool is_nonabelian_simple(const FiniteGroupModel& g, std::size_t cap = kBruteForceCap);

/// element order -> number of elements of that order.
using OrderSpectrum = std::map<std::uint64_t, std::uint64_t>;
OrderSpectrum order_spectrum(const FiniteGroupModel& g, const ElementSet& h);
/// Order spectrum of Alt(l), computed from cycle types.
OrderSpectrum alt_order_spectrum(std::size_t l);

/// Order l!/2, brute-force simplicity and the Alt(l) order spectrum.
bool recognizes_as_alt(const FiniteGroupModel& g, const ElementSet& h, std::size_t l);

using SubgroupPredicate = std::function<bool(const ElementSet&)>;

/// Backtracking over 2-generated subgroups <a, b>: a over conjugacy-class
/// representatives, b over all elements, both restricted to element orders
/// occurring in Alt(l). Returns the first subgroup recognized as Alt(l) that
/// satisfies `accept` (every distinct subgroup is tested once). Complete up to
/// G-conjugacy, so `accept` must be invariant under conjugation in G.
std::optional<ElementSet> subgroup_search_iso_alt(const FiniteGroupModel& g, std::size_t l,
                                                  const SubgroupPredicate& accept = {},
                                                  std::size_t cap = kBruteForceCap);

/// Orbits of <actors> acting on `domain` by conjugation, as (representative,
/// orbit size) with the least element as representative. `domain` must be
/// invariant under the action.
struct Orbit {
  ElementId representative;
  std::size_t size;
};
std::vector<Orbit> conjugation_orbits(const FiniteGroupModel& g, const std::vector<ElementId>& actors,
                                      const ElementSet& domain);

}  // namespace soficlab
