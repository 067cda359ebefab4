#include "soficlab/group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "soficlab/errors.hpp"

namespace soficlab {

namespace {

constexpr ElementId kEmpty = 0xFFFFFFFFu;
constexpr std::size_t kInlineDegree = 64;

// Scratch buffer for one composed permutation; stays on the stack for the
// degrees that matter in practice.
class Scratch {
 public:
  explicit Scratch(std::size_t n) : n_(n) {
    if (n > kInlineDegree) heap_.resize(n);
  }
  Point* data() { return n_ > kInlineDegree ? heap_.data() : inline_.data(); }
  std::span<const Point> view() { return {data(), n_}; }

 private:
  std::size_t n_;
  std::array<Point, kInlineDegree> inline_{};
  std::vector<Point> heap_;
};

}  // namespace

// ---------------------------------------------------------------- ElementSet

ElementSet::ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

ElementSet ElementSet::from_sorted(std::vector<ElementId> ids) {
  ElementSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool ElementSet::contains(ElementId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  std::vector<ElementId> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
  return from_sorted(std::move(out));
}

ElementSet ElementSet::unite(const ElementSet& other) const {
  std::vector<ElementId> out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out));
  return from_sorted(std::move(out));
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

// ---------------------------------------------------------- FiniteGroupModel

struct FiniteGroupModel::Lazy {
  std::once_flag classes_once;
  ConjugacyClasses classes;
};

FiniteGroupModel::FiniteGroupModel(FiniteGroupModel&&) noexcept = default;
FiniteGroupModel& FiniteGroupModel::operator=(FiniteGroupModel&&) noexcept = default;
FiniteGroupModel::~FiniteGroupModel() = default;

void FiniteGroupModel::grow_index() {
  std::size_t capacity = 16;
  while (capacity < 2 * (order_ + 1)) capacity <<= 1;
  slots_.assign(capacity, kEmpty);
  const std::size_t mask = capacity - 1;
  for (ElementId id = 0; id < order_; ++id) {
    std::size_t h = hash_points(points(id)) & mask;
    while (slots_[h] != kEmpty) h = (h + 1) & mask;
    slots_[h] = id;
  }
}

std::optional<ElementId> FiniteGroupModel::find(std::span<const Point> images) const {
  if (images.size() != degree_ || slots_.empty()) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  std::size_t h = hash_points(images) & mask;
  while (slots_[h] != kEmpty) {
    auto candidate = points(slots_[h]);
    if (std::equal(candidate.begin(), candidate.end(), images.begin())) return slots_[h];
    h = (h + 1) & mask;
  }
  return std::nullopt;
}

std::optional<ElementId> FiniteGroupModel::find(const Permutation& p) const {
  return find(p.images());
}

ElementId FiniteGroupModel::index_of(const Permutation& p) const {
  if (auto id = find(p)) return *id;
  throw InvalidArgument("permutation " + p.to_cycle_string() + " is not an element of " + name_);
}

ElementId FiniteGroupModel::insert(std::span<const Point> images) {
  if (2 * (order_ + 1) > slots_.size()) grow_index();
  const std::size_t mask = slots_.size() - 1;
  std::size_t h = hash_points(images) & mask;
  while (slots_[h] != kEmpty) {
    auto candidate = points(slots_[h]);
    if (std::equal(candidate.begin(), candidate.end(), images.begin())) return slots_[h];
    h = (h + 1) & mask;
  }
  const auto id = static_cast<ElementId>(order_);
  points_.insert(points_.end(), images.begin(), images.end());
  slots_[h] = id;
  ++order_;
  return id;
}

FiniteGroupModel FiniteGroupModel::from_generators(std::string name, std::size_t degree,
                                                   const std::vector<Permutation>& generators,
                                                   const GroupLimits& limits) {
  if (degree == 0) throw InvalidArgument("group degree must be at least 1");
  FiniteGroupModel g;
  g.name_ = std::move(name);
  g.degree_ = degree;
  g.lazy_ = std::make_unique<Lazy>();

  const Permutation id = Permutation::identity(degree);
  g.insert(id.images());

  std::vector<ElementId> gens;
  for (const auto& p : generators) {
    if (p.degree() != degree) throw DegreeMismatch(degree, p.degree());
    gens.push_back(g.insert(p.images()));
  }
  // Duplicate or identity generators add nothing.
  std::vector<ElementId> kept;
  for (ElementId s : gens)
    if (s != identity() && std::find(kept.begin(), kept.end(), s) == kept.end()) kept.push_back(s);
  g.generators_ = kept;

  // Right-multiplication closure. Elements beyond the generators are appended
  // in BFS order; the generators themselves sit right after the identity.
  Scratch buf(degree);
  std::vector<Point> gen_points;
  for (ElementId s : kept) {
    auto pts = g.points(s);
    gen_points.insert(gen_points.end(), pts.begin(), pts.end());
  }
  for (std::size_t cursor = 0; cursor < g.order_; ++cursor) {
    for (std::size_t k = 0; k < kept.size(); ++k) {
      const Point* s = gen_points.data() + k * degree;
      // Reading points(cursor) each time: insert() may reallocate points_.
      for (std::size_t i = 0; i < degree; ++i) buf.data()[i] = g.points_[cursor * degree + s[i]];
      g.insert(buf.view());
      if (g.order_ > limits.element_cap)
        throw CapExceeded("group " + g.name_ + " exceeds element cap " +
                          std::to_string(limits.element_cap));
    }
  }
  g.finish(limits);
  return g;
}

FiniteGroupModel FiniteGroupModel::from_elements(std::string name, std::size_t degree,
                                                 const std::vector<Permutation>& elements,
                                                 const GroupLimits& limits) {
  std::unordered_set<Permutation> members(elements.begin(), elements.end());
  const Permutation id = Permutation::identity(degree);
  if (!members.contains(id)) throw InvalidArgument("element list lacks the identity");

  // Greedy generating set; any product leaving the list proves non-closure.
  std::vector<Permutation> gens;
  std::unordered_set<Permutation> closure{id};
  for (const auto& x : elements) {
    if (x.degree() != degree) throw DegreeMismatch(degree, x.degree());
    if (closure.contains(x)) continue;
    gens.push_back(x);
    std::vector<Permutation> frontier(closure.begin(), closure.end());
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (const auto& s : gens) {
        Permutation y = frontier[i] * s;
        if (closure.contains(y)) continue;
        if (!members.contains(y)) throw InvalidArgument("element list is not closed under products");
        closure.insert(y);
        frontier.push_back(std::move(y));
      }
    }
  }
  FiniteGroupModel g = from_generators(std::move(name), degree, gens, limits);
  if (g.order() != members.size()) throw InvalidArgument("element list is not a group");
  return g;
}

void FiniteGroupModel::finish(const GroupLimits& limits) {
  inverse_.resize(order_);
  Scratch buf(degree_);
  for (ElementId a = 0; a < order_; ++a) {
    auto pts = points(a);
    for (Point i = 0; i < degree_; ++i) buf.data()[pts[i]] = i;
    inverse_[a] = *find(buf.view());
  }
  if (order_ <= std::min<std::size_t>(limits.table_cap, 0xFFFF)) {
    table_.resize(order_ * order_);
    for (ElementId a = 0; a < order_; ++a) {
      auto pa = points(a);
      for (ElementId b = 0; b < order_; ++b) {
        auto pb = points(b);
        for (std::size_t i = 0; i < degree_; ++i) buf.data()[i] = pa[pb[i]];
        table_[static_cast<std::size_t>(a) * order_ + b] = static_cast<std::uint16_t>(*find(buf.view()));
      }
    }
  }
}

Permutation FiniteGroupModel::element(ElementId id) const {
  auto pts = points(id);
  return Permutation::from_images(std::vector<Point>(pts.begin(), pts.end()));
}

ElementId FiniteGroupModel::mul(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
  Scratch buf(degree_);
  auto pa = points(a);
  auto pb = points(b);
  for (std::size_t i = 0; i < degree_; ++i) buf.data()[i] = pa[pb[i]];
  return *find(buf.view());
}

ElementId FiniteGroupModel::pow(ElementId a, std::uint64_t k) const {
  ElementId result = identity();
  ElementId base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

bool FiniteGroupModel::commute(ElementId a, ElementId b) const {
  if (!table_.empty()) return mul(a, b) == mul(b, a);
  auto pa = points(a);
  auto pb = points(b);
  for (std::size_t i = 0; i < degree_; ++i)
    if (pa[pb[i]] != pb[pa[i]]) return false;
  return true;
}

std::uint64_t FiniteGroupModel::element_order(ElementId a) const {
  std::uint64_t k = 1;
  for (ElementId x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

ElementSet FiniteGroupModel::all() const {
  std::vector<ElementId> ids(order_);
  std::iota(ids.begin(), ids.end(), ElementId{0});
  return ElementSet::from_sorted(std::move(ids));
}

const ConjugacyClasses& FiniteGroupModel::classes() const {
  std::call_once(lazy_->classes_once, [this] {
    ConjugacyClasses& cc = lazy_->classes;
    constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
    cc.class_of.assign(order_, kUnset);
    for (ElementId start = 0; start < order_; ++start) {
      if (cc.class_of[start] != kUnset) continue;
      const auto c = static_cast<std::uint32_t>(cc.classes.size());
      std::vector<ElementId> members{start};
      cc.class_of[start] = c;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (ElementId s : generators_) {
          const ElementId y = conj(s, members[i]);
          if (cc.class_of[y] == kUnset) {
            cc.class_of[y] = c;
            members.push_back(y);
          }
        }
      }
      cc.classes.emplace_back(std::move(members));
    }
  });
  return lazy_->classes;
}

}  // namespace soficlab
