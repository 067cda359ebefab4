#pragma once

#include <set>
#include <string>
#include <vector>

#include "soficlab/group.hpp"
#include "soficlab/permutation.hpp"

namespace soficlab {

/// Generator symbols acting on {0, ..., degree-1}.
struct GroupAction {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> symbols;
  std::vector<Permutation> images;
};

/// Throws InvalidArgument on a symbol/image count mismatch or duplicate
/// symbols, DegreeMismatch on unequal degrees.
GroupAction make_action(std::string name, std::vector<std::string> symbols, std::vector<Permutation> images);

/// Points of the regular actions are the element indices of g.
/// x -> h x
Permutation left_multiplication(const FiniteGroupModel& g, ElementId h);
/// x -> x h^-1
Permutation right_multiplication(const FiniteGroupModel& g, ElementId h);
/// x -> x^-1
Permutation inversion_map(const FiniteGroupModel& g);

/// The generators of g acting on their own points.
GroupAction natural_action(const FiniteGroupModel& g);
GroupAction left_regular_action(const FiniteGroupModel& g);

inline constexpr std::size_t kBiregularCap = 10'000;

/// Z/2 ⋉ (G × G) on G: symbols l1.., r1.. (left and right copies of the
/// generators) and t (inversion), in that order.
GroupAction biregular_action(const FiniteGroupModel& g, std::size_t cap = kBiregularCap);

/// Orbits of the action, each sorted, ordered by smallest point.
std::vector<std::vector<Point>> orbits(const GroupAction& action);
bool is_transitive(const GroupAction& action);

/// Bijections phi from a's points to b's with phi(s x) = s phi(x) for every
/// symbol; a and b must be transitive with the same symbols. Sorted.
std::vector<Permutation> action_isomorphisms(const GroupAction& a, const GroupAction& b);

inline constexpr std::size_t kCentralizerDegreeCap = 10'000;

/// The centralizer in Sym(n) of a transitive action, by the base-point
/// method: each image x of point 0 extends uniquely along the action, and the
/// extension is kept when it is a well-defined bijection commuting with all
/// generators. Throws InvalidArgument for intransitive actions.
FiniteGroupModel centralizer_transitive_action(const GroupAction& action, std::size_t cap = kCentralizerDegreeCap);

/// Any action: per-orbit centralizers assembled as a direct product. Throws
/// InvalidArgument("decomposition required ...") when two orbits carry
/// isomorphic labeled actions, since cross-orbit symmetries would be missed.
FiniteGroupModel centralizer_of_action(const GroupAction& action, std::size_t cap = kCentralizerDegreeCap);

inline constexpr std::size_t kBruteForceDegreeCap = 10;

/// Scan of Sym(degree) for permutations commuting with every element of s.
FiniteGroupModel centralizer_bruteforce(const std::vector<Permutation>& s, std::size_t degree,
                                        std::size_t cap = kBruteForceDegreeCap);

/// Elements of g, sorted.
std::vector<Permutation> sorted_elements(const FiniteGroupModel& g);

struct DoubleCentralizer {
  FiniteGroupModel c;
  FiniteGroupModel cc;
  /// cc equals the group generated by the input.
  bool closes = false;
};

/// C and CC of the group generated by s. Uses the base-point method when the
/// relevant group is transitive and brute force (degree <= cap) otherwise.
DoubleCentralizer double_centralizer(const std::vector<Permutation>& s, std::size_t degree,
                                     std::size_t cap = kBruteForceDegreeCap);

struct BiregularCheck {
  std::size_t order = 0;
  std::size_t centralizer_order = 0;
  /// C(left copy) equals the right copy as a set.
  bool centralizer_is_right_copy = false;
  /// C(C(left copy)) equals the left copy.
  bool double_centralizer_closes = false;
  /// t left(g) t = right(g) for every generator, and t C(left) t = left copy.
  bool flip_swaps = false;
  /// Distinct elements of the right copy are pairwise at distance 1.
  bool right_copy_one_discrete = false;

  bool ok() const {
    return centralizer_is_right_copy && double_centralizer_closes && flip_swaps && right_copy_one_discrete;
  }
};

BiregularCheck biregular_check(const FiniteGroupModel& g, std::size_t cap = kBiregularCap);

/// |centralizer| = degree for a transitive action.
bool is_regular_via_centralizer(const GroupAction& action, std::size_t cap = kCentralizerDegreeCap);

/// All pairwise Hamming distances equal 1.
bool one_discrete_check(const std::vector<Permutation>& perms);

inline constexpr std::size_t kClassPowerOrderCap = 10'000;
inline constexpr std::size_t kClassPowerExponentCap = 6;

/// Cycle types of products c1 ... ck of conjugates of g.
std::set<CycleType> class_power_types(const FiniteGroupModel& group, ElementId g, std::size_t k,
                                      std::size_t order_cap = kClassPowerOrderCap,
                                      std::size_t exponent_cap = kClassPowerExponentCap);

}  // namespace soficlab
