#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "soficlab/permutation.hpp"

namespace soficlab {

using ElementId = std::uint32_t;

/// Canonical (sorted, deduplicated) set of element indices into one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<ElementId> ids);
  static ElementSet singleton(ElementId id) { return ElementSet(std::vector<ElementId>{id}); }
  /// Indices already sorted and unique; skips the canonicalization pass.
  static ElementSet from_sorted(std::vector<ElementId> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(ElementId id) const;
  const std::vector<ElementId>& ids() const noexcept { return ids_; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  ElementId front() const { return ids_.front(); }

  ElementSet intersect(const ElementSet& other) const;
  ElementSet unite(const ElementSet& other) const;
  bool is_subset_of(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<ElementId> ids_;
};

struct GroupLimits {
  std::size_t element_cap = 1'000'000;
  /// A full multiplication table is built only up to this order.
  std::size_t table_cap = 5000;
};

struct ConjugacyClasses {
  /// Ordered by smallest member; classes[0] is {identity}.
  std::vector<ElementSet> classes;
  std::vector<std::uint32_t> class_of;

  ElementId representative(std::size_t c) const { return classes[c].front(); }
};

/// An enumerated finite permutation group. Element 0 is the identity; the
/// remaining elements appear in breadth-first order of right multiplication
/// by the generators, so indices are deterministic for a given generator list.
/// Immutable after construction; move-only.
class FiniteGroupModel {
 public:
  static FiniteGroupModel from_generators(std::string name, std::size_t degree,
                                          const std::vector<Permutation>& generators,
                                          const GroupLimits& limits = {});
  /// Wraps an explicit element list that must already be a group. Throws
  /// InvalidArgument if it is not closed under multiplication.
  static FiniteGroupModel from_elements(std::string name, std::size_t degree,
                                        const std::vector<Permutation>& elements,
                                        const GroupLimits& limits = {});

  FiniteGroupModel(FiniteGroupModel&&) noexcept;
  FiniteGroupModel& operator=(FiniteGroupModel&&) noexcept;
  ~FiniteGroupModel();

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return degree_; }
  static constexpr ElementId identity() noexcept { return 0; }
  const std::vector<ElementId>& generators() const noexcept { return generators_; }
  bool has_table() const noexcept { return !table_.empty(); }

  std::span<const Point> points(ElementId id) const {
    return {points_.data() + static_cast<std::size_t>(id) * degree_, degree_};
  }
  Permutation element(ElementId id) const;
  std::optional<ElementId> find(std::span<const Point> images) const;
  std::optional<ElementId> find(const Permutation& p) const;
  /// Throws InvalidArgument when p is not an element.
  ElementId index_of(const Permutation& p) const;

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const { return inverse_[a]; }
  /// x a x^-1
  ElementId conj(ElementId x, ElementId a) const { return mul(mul(x, a), inv(x)); }
  /// a^-1 b^-1 a b
  ElementId commutator(ElementId a, ElementId b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  ElementId pow(ElementId a, std::uint64_t k) const;
  /// Pointwise check of ab = ba; no element lookup.
  bool commute(ElementId a, ElementId b) const;
  std::uint64_t element_order(ElementId a) const;

  ElementSet all() const;
  /// Computed on first use and cached.
  const ConjugacyClasses& classes() const;

 private:
  FiniteGroupModel() = default;
  void finish(const GroupLimits& limits);
  ElementId insert(std::span<const Point> images);
  void grow_index();

  struct Lazy;

  std::string name_;
  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Point> points_;
  std::vector<ElementId> slots_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> generators_;
  std::vector<std::uint16_t> table_;
  std::unique_ptr<Lazy> lazy_;
};

}  // namespace soficlab
