#include "soficlab/rigidity.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "soficlab/errors.hpp"

namespace soficlab {

namespace {

constexpr Point kUnset = static_cast<Point>(-1);

// Extends phi(0) = x along the generators; nullopt unless the result is a
// well-defined bijection intertwining a and b.
std::optional<Permutation> extend_from_base(const GroupAction& a, const GroupAction& b,
                                            const std::vector<std::vector<Point>>& a_inv,
                                            const std::vector<std::vector<Point>>& b_inv, Point x) {
  const std::size_t n = a.degree;
  std::vector<Point> phi(n, kUnset);
  std::vector<char> used(n, 0);
  std::vector<Point> queue = {0};
  phi[0] = x;
  used[x] = 1;
  auto set = [&](Point v, Point y) {
    if (phi[v] != kUnset) return phi[v] == y;
    if (used[y]) return false;
    phi[v] = y;
    used[y] = 1;
    queue.push_back(v);
    return true;
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Point u = queue[head];
    for (std::size_t s = 0; s < a.images.size(); ++s) {
      if (!set(a.images[s](u), b.images[s](phi[u]))) return std::nullopt;
      if (!set(a_inv[s][u], b_inv[s][phi[u]])) return std::nullopt;
    }
  }
  if (queue.size() != n) return std::nullopt;
  return Permutation::from_images(std::move(phi));
}

std::vector<std::vector<Point>> inverse_images(const GroupAction& a) {
  std::vector<std::vector<Point>> out;
  for (const auto& p : a.images) {
    const auto inv = p.inverse();
    out.emplace_back(inv.images().begin(), inv.images().end());
  }
  return out;
}

GroupAction restrict_to(const GroupAction& action, const std::vector<Point>& orbit) {
  std::vector<Point> local(action.degree, kUnset);
  for (std::size_t i = 0; i < orbit.size(); ++i) local[orbit[i]] = static_cast<Point>(i);
  std::vector<Permutation> images;
  for (const auto& p : action.images) {
    std::vector<Point> img(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) img[i] = local[p(orbit[i])];
    images.push_back(Permutation::from_images(std::move(img)));
  }
  return make_action(action.name, action.symbols, std::move(images));
}

std::vector<Permutation> group_generators(const FiniteGroupModel& g) {
  std::vector<Permutation> out;
  for (ElementId id : g.generators()) out.push_back(g.element(id));
  return out;
}

GroupAction action_of(const std::string& name, std::size_t degree, const std::vector<Permutation>& gens) {
  std::vector<std::string> symbols;
  for (std::size_t k = 0; k < gens.size(); ++k) symbols.push_back("g" + std::to_string(k + 1));
  GroupAction a = make_action(name, std::move(symbols), gens);
  a.degree = degree;
  return a;
}

FiniteGroupModel centralizer_any(const std::vector<Permutation>& gens, std::size_t degree, std::size_t cap,
                                 const std::string& name) {
  const GroupAction a = action_of(name, degree, gens);
  if (is_transitive(a)) return centralizer_transitive_action(a);
  return centralizer_bruteforce(gens, degree, cap);
}

void check_order_cap(const FiniteGroupModel& g, std::size_t cap) {
  if (g.order() > cap) throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds " + std::to_string(cap));
}

}  // namespace

GroupAction make_action(std::string name, std::vector<std::string> symbols, std::vector<Permutation> images) {
  if (symbols.size() != images.size()) throw InvalidArgument("one image per symbol is required");
  if (std::set<std::string>(symbols.begin(), symbols.end()).size() != symbols.size())
    throw InvalidArgument("duplicate action symbols");
  GroupAction a;
  a.name = std::move(name);
  a.degree = images.empty() ? 0 : images.front().degree();
  for (const auto& p : images)
    if (p.degree() != a.degree) throw DegreeMismatch(a.degree, p.degree());
  a.symbols = std::move(symbols);
  a.images = std::move(images);
  return a;
}

Permutation left_multiplication(const FiniteGroupModel& g, ElementId h) {
  std::vector<Point> img(g.order());
  for (ElementId x = 0; x < g.order(); ++x) img[x] = g.mul(h, x);
  return Permutation::from_images(std::move(img));
}

Permutation right_multiplication(const FiniteGroupModel& g, ElementId h) {
  const ElementId hinv = g.inv(h);
  std::vector<Point> img(g.order());
  for (ElementId x = 0; x < g.order(); ++x) img[x] = g.mul(x, hinv);
  return Permutation::from_images(std::move(img));
}

Permutation inversion_map(const FiniteGroupModel& g) {
  std::vector<Point> img(g.order());
  for (ElementId x = 0; x < g.order(); ++x) img[x] = g.inv(x);
  return Permutation::from_images(std::move(img));
}

GroupAction natural_action(const FiniteGroupModel& g) { return action_of(g.name(), g.degree(), group_generators(g)); }

GroupAction left_regular_action(const FiniteGroupModel& g) {
  std::vector<Permutation> images;
  for (ElementId id : g.generators()) images.push_back(left_multiplication(g, id));
  return action_of(g.name() + " left-regular", g.order(), images);
}

GroupAction biregular_action(const FiniteGroupModel& g, std::size_t cap) {
  check_order_cap(g, cap);
  std::vector<std::string> symbols;
  std::vector<Permutation> images;
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    symbols.push_back("l" + std::to_string(k + 1));
    images.push_back(left_multiplication(g, g.generators()[k]));
  }
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    symbols.push_back("r" + std::to_string(k + 1));
    images.push_back(right_multiplication(g, g.generators()[k]));
  }
  symbols.push_back("t");
  images.push_back(inversion_map(g));
  return make_action(g.name() + " biregular", std::move(symbols), std::move(images));
}

std::vector<std::vector<Point>> orbits(const GroupAction& action) {
  std::vector<char> seen(action.degree, 0);
  std::vector<std::vector<Point>> out;
  for (Point start = 0; start < action.degree; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit = {start};
    seen[start] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& p : action.images) {
        const Point v = p(orbit[head]);
        if (!seen[v]) {
          seen[v] = 1;
          orbit.push_back(v);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(const GroupAction& action) { return action.degree > 0 && orbits(action).size() == 1; }

std::vector<Permutation> action_isomorphisms(const GroupAction& a, const GroupAction& b) {
  if (a.symbols != b.symbols) throw InvalidArgument("actions use different symbols");
  if (!is_transitive(a)) throw InvalidArgument("action '" + a.name + "' is not transitive");
  if (a.degree != b.degree) return {};
  const auto a_inv = inverse_images(a);
  const auto b_inv = inverse_images(b);
  std::vector<Permutation> out;
  for (Point x = 0; x < b.degree; ++x)
    if (auto phi = extend_from_base(a, b, a_inv, b_inv, x)) out.push_back(std::move(*phi));
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroupModel centralizer_transitive_action(const GroupAction& action, std::size_t cap) {
  if (action.degree > cap)
    throw CapExceeded("centralizer degree " + std::to_string(action.degree) + " exceeds " + std::to_string(cap));
  if (!is_transitive(action)) throw InvalidArgument("action '" + action.name + "' is not transitive; decompose first");
  return FiniteGroupModel::from_elements("C(" + action.name + ")", action.degree, action_isomorphisms(action, action));
}

FiniteGroupModel centralizer_of_action(const GroupAction& action, std::size_t cap) {
  if (action.degree > cap)
    throw CapExceeded("centralizer degree " + std::to_string(action.degree) + " exceeds " + std::to_string(cap));
  const auto parts = orbits(action);
  if (parts.size() == 1) return centralizer_transitive_action(action, cap);
  std::vector<GroupAction> local;
  for (const auto& orbit : parts) local.push_back(restrict_to(action, orbit));
  for (std::size_t i = 0; i < local.size(); ++i)
    for (std::size_t j = i + 1; j < local.size(); ++j)
      if (!action_isomorphisms(local[i], local[j]).empty())
        throw InvalidArgument("decomposition required: orbits " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " carry isomorphic actions");
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& z : action_isomorphisms(local[i], local[i])) {
      if (z.is_identity()) continue;
      std::vector<Point> img(action.degree);
      std::iota(img.begin(), img.end(), Point{0});
      for (std::size_t k = 0; k < parts[i].size(); ++k) img[parts[i][k]] = parts[i][z(static_cast<Point>(k))];
      gens.push_back(Permutation::from_images(std::move(img)));
    }
  }
  return FiniteGroupModel::from_generators("C(" + action.name + ")", action.degree, gens);
}

FiniteGroupModel centralizer_bruteforce(const std::vector<Permutation>& s, std::size_t degree, std::size_t cap) {
  if (degree > cap) throw CapExceeded("brute-force centralizer is capped at degree " + std::to_string(cap));
  for (const auto& p : s)
    if (p.degree() != degree) throw DegreeMismatch(degree, p.degree());
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<Permutation> members;
  do {
    const auto z = Permutation::from_images(img);
    if (std::all_of(s.begin(), s.end(), [&](const Permutation& p) { return z * p == p * z; })) members.push_back(z);
  } while (std::next_permutation(img.begin(), img.end()));
  return FiniteGroupModel::from_elements("C", degree, members);
}

std::vector<Permutation> sorted_elements(const FiniteGroupModel& g) {
  std::vector<Permutation> out;
  out.reserve(g.order());
  for (ElementId x = 0; x < g.order(); ++x) out.push_back(g.element(x));
  std::sort(out.begin(), out.end());
  return out;
}

DoubleCentralizer double_centralizer(const std::vector<Permutation>& s, std::size_t degree, std::size_t cap) {
  const auto g = FiniteGroupModel::from_generators("G", degree, s);
  auto c = centralizer_any(s, degree, cap, "G");
  auto cc = centralizer_any(group_generators(c), degree, cap, "C(G)");
  const bool closes = sorted_elements(cc) == sorted_elements(g);
  return {std::move(c), std::move(cc), closes};
}

BiregularCheck biregular_check(const FiniteGroupModel& g, std::size_t cap) {
  check_order_cap(g, cap);
  BiregularCheck r;
  r.order = g.order();
  const auto left_action = left_regular_action(g);
  const auto c = centralizer_transitive_action(left_action, cap);
  r.centralizer_order = c.order();

  std::vector<Permutation> left, right;
  for (ElementId h = 0; h < g.order(); ++h) {
    left.push_back(left_multiplication(g, h));
    right.push_back(right_multiplication(g, h));
  }
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  const auto c_elements = sorted_elements(c);
  r.centralizer_is_right_copy = c_elements == right;

  const auto cc = centralizer_transitive_action(action_of("C", g.order(), group_generators(c)), cap);
  r.double_centralizer_closes = sorted_elements(cc) == left;

  const auto t = inversion_map(g);
  bool swaps = true;
  for (ElementId h : g.generators()) swaps = swaps && t * left_multiplication(g, h) * t == right_multiplication(g, h);
  std::vector<Permutation> conjugated;
  for (const auto& z : c_elements) conjugated.push_back(t * z * t);
  std::sort(conjugated.begin(), conjugated.end());
  r.flip_swaps = swaps && conjugated == left;

  r.right_copy_one_discrete = one_discrete_check(right);
  return r;
}

bool is_regular_via_centralizer(const GroupAction& action, std::size_t cap) {
  return centralizer_transitive_action(action, cap).order() == action.degree;
}

bool one_discrete_check(const std::vector<Permutation>& perms) {
  if (perms.empty()) return true;
  for (const auto& p : perms)
    if (p.degree() != perms.front().degree()) throw DegreeMismatch(perms.front().degree(), p.degree());
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = i + 1; j < perms.size(); ++j)
      for (Point x = 0; x < perms[i].degree(); ++x)
        if (perms[i](x) == perms[j](x)) return false;
  return true;
}

std::set<CycleType> class_power_types(const FiniteGroupModel& group, ElementId g, std::size_t k, std::size_t order_cap,
                                      std::size_t exponent_cap) {
  check_order_cap(group, order_cap);
  if (k < 1 || k > exponent_cap)
    throw CapExceeded("class power exponent must lie in [1, " + std::to_string(exponent_cap) + "]");
  const auto& classes = group.classes();
  const ElementSet& cls = classes.classes[classes.class_of[g]];
  std::vector<char> current(group.order(), 0);
  for (ElementId c : cls) current[c] = 1;
  for (std::size_t step = 1; step < k; ++step) {
    std::vector<char> next(group.order(), 0);
    for (ElementId x = 0; x < group.order(); ++x)
      if (current[x])
        for (ElementId c : cls) next[group.mul(x, c)] = 1;
    current = std::move(next);
  }
  std::set<CycleType> out;
  for (ElementId x = 0; x < group.order(); ++x)
    if (current[x]) out.insert(cycle_type(group.element(x)));
  return out;
}

}  // namespace soficlab
