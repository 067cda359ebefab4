#include "soficlab/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "soficlab/errors.hpp"

namespace soficlab {

namespace {

// Incremental right-multiplication closure. Elements already processed with
// the old generators only need the new generator applied.
class Closure {
 public:
  explicit Closure(const FiniteGroupModel& g) : g_(g), member_(g.order(), 0) {
    member_[FiniteGroupModel::identity()] = 1;
    elems_.push_back(FiniteGroupModel::identity());
  }

  bool contains(ElementId x) const { return member_[x] != 0; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<ElementId>& generators() const { return gens_; }

  /// Adds a generator. Returns false (leaving the closure partial) if the
  /// closure grows past max_order or hits an element rejected by `allowed`.
  template <typename Allowed>
  bool add(ElementId t, std::size_t max_order, Allowed&& allowed) {
    if (contains(t)) return true;
    gens_.push_back(t);
    for (std::size_t i = 0; i < done_; ++i)
      if (!visit(g_.mul(elems_[i], t), max_order, allowed)) return false;
    for (std::size_t i = done_; i < elems_.size(); ++i)
      for (ElementId s : gens_)
        if (!visit(g_.mul(elems_[i], s), max_order, allowed)) return false;
    done_ = elems_.size();
    return true;
  }
  bool add(ElementId t, std::size_t max_order = ~std::size_t{0}) {
    return add(t, max_order, [](ElementId) { return true; });
  }

  ElementSet result() const { return ElementSet(elems_); }

 private:
  template <typename Allowed>
  bool visit(ElementId y, std::size_t max_order, Allowed& allowed) {
    if (member_[y]) return true;
    if (!allowed(y)) return false;
    member_[y] = 1;
    elems_.push_back(y);
    return elems_.size() <= max_order;
  }

  const FiniteGroupModel& g_;
  std::vector<char> member_;
  std::vector<ElementId> elems_;
  std::vector<ElementId> gens_;
  std::size_t done_ = 1;
};

std::vector<char> bitmap(const FiniteGroupModel& g, const ElementSet& s) {
  std::vector<char> m(g.order(), 0);
  for (ElementId x : s) m[x] = 1;
  return m;
}

ElementSet from_bitmap(const std::vector<char>& m) {
  std::vector<ElementId> ids;
  for (ElementId i = 0; i < m.size(); ++i)
    if (m[i]) ids.push_back(i);
  return ElementSet::from_sorted(std::move(ids));
}

void check_members(const FiniteGroupModel& g, const ElementSet& s) {
  if (!s.empty() && s.ids().back() >= g.order())
    throw InvalidArgument("element index out of range for " + g.name());
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

void partitions(std::size_t remaining, std::size_t max_part, std::map<std::size_t, std::size_t>& current,
                const std::function<void(const std::map<std::size_t, std::size_t>&)>& visit) {
  if (remaining == 0) {
    visit(current);
    return;
  }
  for (std::size_t k = std::min(remaining, max_part); k >= 1; --k) {
    ++current[k];
    partitions(remaining - k, k, current, visit);
    if (--current[k] == 0) current.erase(k);
  }
}

}  // namespace

ElementSet generated_subgroup(const FiniteGroupModel& g, const ElementSet& s) {
  check_members(g, s);
  Closure c(g);
  for (ElementId x : s) c.add(x);
  return c.result();
}

std::optional<ElementSet> generated_subgroup_bounded(const FiniteGroupModel& g,
                                                     const std::vector<ElementId>& generators,
                                                     std::size_t max_order) {
  Closure c(g);
  for (ElementId x : generators)
    if (!c.add(x, max_order)) return std::nullopt;
  return c.result();
}

std::vector<ElementId> generating_set(const FiniteGroupModel& g, const ElementSet& h) {
  check_members(g, h);
  Closure c(g);
  for (ElementId x : h) c.add(x);
  return c.generators();
}

ElementSet centralizer_within(const FiniteGroupModel& g, const ElementSet& k, const ElementSet& s) {
  check_members(g, k);
  check_members(g, s);
  // C(S) = C(<S>); a generating subset of S is enough.
  const std::vector<ElementId> gens = s.size() <= 4 ? s.ids() : generating_set(g, s);
  std::vector<ElementId> out;
  for (ElementId x : k) {
    bool ok = true;
    for (ElementId t : gens)
      if (!g.commute(x, t)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return ElementSet::from_sorted(std::move(out));
}

ElementSet centralizer_in_group(const FiniteGroupModel& g, const ElementSet& s) {
  return centralizer_within(g, g.all(), s);
}

ElementSet set_product(const FiniteGroupModel& g, const ElementSet& a, const ElementSet& b) {
  check_members(g, a);
  check_members(g, b);
  std::vector<char> hit(g.order(), 0);
  for (ElementId x : a)
    for (ElementId y : b) hit[g.mul(x, y)] = 1;
  return from_bitmap(hit);
}

StabilizedPowers iterated_product_stabilization(const FiniteGroupModel& g, const ElementSet& a) {
  check_members(g, a);
  StabilizedPowers out;
  out.generated_subgroup = generated_subgroup(g, a);
  if (a.empty()) {
    out.literal_intersection = a;
    return out;
  }
  // A^k is eventually periodic; once a power repeats, the intersection of the
  // powers seen so far is the full infinite intersection.
  std::set<ElementSet> seen;
  ElementSet power = a;
  ElementSet meet = a;
  const std::size_t step_cap = 4 * g.order() + 8;
  while (seen.insert(power).second) {
    meet = meet.intersect(power);
    ++out.literal_steps;
    if (out.literal_steps > step_cap) throw CapExceeded("power sequence did not repeat");
    power = set_product(g, power, a);
  }
  out.literal_intersection = meet;
  return out;
}

bool is_subgroup(const FiniteGroupModel& g, const ElementSet& h) {
  check_members(g, h);
  if (h.empty() || !h.contains(FiniteGroupModel::identity())) return false;
  const auto member = bitmap(g, h);
  Closure c(g);
  auto allowed = [&](ElementId y) { return member[y] != 0; };
  for (ElementId x : h)
    if (!c.add(x, h.size(), allowed)) return false;
  return c.size() == h.size();
}

std::size_t index(const FiniteGroupModel& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) throw InvalidArgument("index: set is not a subgroup of " + g.name());
  return g.order() / h.size();
}

std::size_t relative_index(const FiniteGroupModel& g, const ElementSet& k, const ElementSet& h) {
  if (!is_subgroup(g, k) || !is_subgroup(g, h)) throw InvalidArgument("relative_index: not subgroups");
  if (!h.is_subset_of(k)) throw InvalidArgument("relative_index: H is not contained in K");
  return k.size() / h.size();
}

bool internal_direct_factor_check(const FiniteGroupModel& g, const ElementSet& h,
                                  const ElementSet& a, const ElementSet& b) {
  if (!is_subgroup(g, h)) throw InvalidArgument("internal_direct_factor_check: H is not a subgroup");
  if (a.intersect(b) != ElementSet::singleton(FiniteGroupModel::identity())) return false;
  for (ElementId x : generating_set(g, a))
    for (ElementId y : generating_set(g, b))
      if (!g.commute(x, y)) return false;
  const ElementSet ab = set_product(g, a, b);
  return ab.size() == a.size() * b.size() && ab == h;
}

FiniteGroupModel subgroup_model(const FiniteGroupModel& g, const ElementSet& h, std::string name) {
  std::vector<Permutation> gens;
  for (ElementId x : generating_set(g, h)) gens.push_back(g.element(x));
  return FiniteGroupModel::from_generators(std::move(name), g.degree(), gens);
}

bool is_abelian(const FiniteGroupModel& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!g.commute(gens[i], gens[j])) return false;
  return true;
}

bool is_simple_bruteforce(const FiniteGroupModel& g, std::size_t cap) {
  if (g.order() > cap)
    throw CapExceeded("is_simple_bruteforce: |G| = " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(cap));
  if (g.order() == 1) return false;
  const auto& cc = g.classes();
  for (std::size_t c = 1; c < cc.classes.size(); ++c) {
    // The normal closure of a class is the subgroup it generates.
    Closure closure(g);
    for (ElementId x : cc.classes[c]) {
      closure.add(x);
      if (closure.size() == g.order()) break;
    }
    if (closure.size() != g.order()) return false;
  }
  return true;
}

bool is_nonabelian_simple(const FiniteGroupModel& g, std::size_t cap) {
  return !is_abelian(g) && is_simple_bruteforce(g, cap);
}

OrderSpectrum order_spectrum(const FiniteGroupModel& g, const ElementSet& h) {
  OrderSpectrum out;
  for (ElementId x : h) ++out[g.element_order(x)];
  return out;
}

OrderSpectrum alt_order_spectrum(std::size_t l) {
  OrderSpectrum out;
  if (l <= 1) {
    out[1] = 1;
    return out;
  }
  const std::uint64_t total = factorial(l);
  std::map<std::size_t, std::size_t> current;
  partitions(l, l, current, [&](const std::map<std::size_t, std::size_t>& parts) {
    std::size_t transpositions = 0;
    std::uint64_t centralizer = 1;
    std::uint64_t ord = 1;
    for (auto [k, m] : parts) {
      transpositions += (k - 1) * m;
      for (std::size_t i = 0; i < m; ++i) centralizer *= k;
      centralizer *= factorial(m);
      ord = std::lcm(ord, std::uint64_t{k});
    }
    if (transpositions % 2 == 0) out[ord] += total / centralizer;
  });
  return out;
}

bool recognizes_as_alt(const FiniteGroupModel& g, const ElementSet& h, std::size_t l) {
  const std::uint64_t target = l <= 1 ? 1 : factorial(l) / 2;
  if (h.size() != target) return false;
  if (order_spectrum(g, h) != alt_order_spectrum(l)) return false;
  const bool alt_is_simple = l == 3 || l >= 5;
  if (h.size() == 1) return !alt_is_simple;
  FiniteGroupModel sub = subgroup_model(g, h, "candidate");
  return is_simple_bruteforce(sub) == alt_is_simple;
}

std::optional<ElementSet> subgroup_search_iso_alt(const FiniteGroupModel& g, std::size_t l,
                                                  const SubgroupPredicate& accept, std::size_t cap) {
  if (l < 4) throw InvalidArgument("subgroup_search_iso_alt: l must be >= 4");
  if (g.order() > cap)
    throw CapExceeded("subgroup_search_iso_alt: |G| = " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(cap));
  const std::uint64_t target = factorial(l) / 2;
  if (g.order() % target != 0) return std::nullopt;

  const OrderSpectrum spectrum = alt_order_spectrum(l);
  std::vector<std::uint64_t> orders(g.order());
  for (ElementId x = 0; x < g.order(); ++x) orders[x] = g.element_order(x);
  auto usable = [&](ElementId x) { return x != FiniteGroupModel::identity() && spectrum.contains(orders[x]); };

  std::set<ElementSet> tried;
  const auto& cc = g.classes();
  for (std::size_t c = 1; c < cc.classes.size(); ++c) {
    const ElementId a = cc.representative(c);
    if (!usable(a)) continue;
    for (ElementId b = 1; b < g.order(); ++b) {
      if (b == a || !usable(b)) continue;
      auto sub = generated_subgroup_bounded(g, {a, b}, target);
      if (!sub || sub->size() != target) continue;
      if (!tried.insert(*sub).second) continue;
      if (recognizes_as_alt(g, *sub, l) && (!accept || accept(*sub))) return sub;
    }
  }
  return std::nullopt;
}

std::vector<Orbit> conjugation_orbits(const FiniteGroupModel& g, const std::vector<ElementId>& actors,
                                      const ElementSet& domain) {
  check_members(g, domain);
  std::vector<char> seen(g.order(), 0);
  std::vector<Orbit> out;
  std::vector<ElementId> queue;
  for (ElementId x : domain) {
    if (seen[x]) continue;
    seen[x] = 1;
    queue.assign(1, x);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (ElementId a : actors) {
        const ElementId y = g.conj(a, queue[i]);
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    out.push_back({x, queue.size()});
  }
  return out;
}

}  // namespace soficlab
