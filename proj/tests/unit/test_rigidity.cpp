#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "soficlab/errors.hpp"
#include "soficlab/group_spec.hpp"
#include "soficlab/rigidity.hpp"
#include "soficlab/subgroup.hpp"

using namespace soficlab;

namespace {

oracle::Raw raw(const Permutation& p) { return oracle::Raw(p.images().begin(), p.images().end()); }

Permutation perm(const oracle::Raw& r) { return Permutation::from_images(std::vector<Point>(r.begin(), r.end())); }

std::set<oracle::Raw> raw_set(const std::vector<Permutation>& ps) {
  std::set<oracle::Raw> out;
  for (const auto& p : ps) out.insert(raw(p));
  return out;
}

std::set<oracle::Raw> brute_centralizer(const std::vector<Permutation>& gens, int degree) {
  const auto all = oracle::all_permutations(degree);
  std::vector<oracle::Raw> s;
  for (const auto& g : gens) s.push_back(raw(g));
  return oracle::centralizer(std::set<oracle::Raw>(all.begin(), all.end()), s);
}

std::string type_string(const std::set<CycleType>& types) {
  std::string out;
  for (const auto& t : types) out += "[" + t.to_string() + "]";
  return out;
}

}  // namespace

TEST(Biregular, CyclicThree) {
  const auto g = construct_group(GroupSpec::cyclic(3));
  const auto a = biregular_action(g);
  EXPECT_EQ(a.symbols, (std::vector<std::string>{"l1", "r1", "t"}));
  EXPECT_EQ(cycle_type(a.images[0]), cycle_type(parse_permutation("(1 2 3)")));
  const auto& t = a.images[2];
  EXPECT_EQ(t(0), 0u);
  EXPECT_EQ(t(1), 2u);
  EXPECT_EQ(t(2), 1u);
}

TEST(Biregular, FlipConjugatesLeftOntoRight) {
  for (const char* name : {"sym3", "alt4", "d8", "z5"}) {
    const auto g = construct_group(parse_group_spec(name));
    const auto t = inversion_map(g);
    for (ElementId h = 0; h < g.order(); ++h) {
      const auto lhs = raw(t * left_multiplication(g, h) * t);
      EXPECT_EQ(lhs, raw(right_multiplication(g, h))) << name;
      for (ElementId k = 0; k < g.order(); ++k)
        EXPECT_EQ(left_multiplication(g, h) * right_multiplication(g, k),
                  right_multiplication(g, k) * left_multiplication(g, h));
    }
  }
  EXPECT_THROW(biregular_action(construct_group(GroupSpec::sym(5)), 100), CapExceeded);
}

TEST(Centralizer, BasePointExamples) {
  const auto sym3 = construct_group(GroupSpec::sym(3));
  const auto c = centralizer_transitive_action(left_regular_action(sym3));
  EXPECT_EQ(c.order(), 6u);
  EXPECT_FALSE(is_abelian(c));
  EXPECT_EQ(raw_set(sorted_elements(c)), brute_centralizer({left_multiplication(sym3, sym3.generators()[0]),
                                                            left_multiplication(sym3, sym3.generators()[1])},
                                                           6));
  const auto alt4 = construct_group(GroupSpec::alt(4));
  EXPECT_EQ(centralizer_transitive_action(natural_action(alt4)).order(), 1u);
  EXPECT_EQ(brute_centralizer({alt4.element(alt4.generators()[0]), alt4.element(alt4.generators()[1])}, 4).size(), 1u);
  const auto z5 = construct_group(GroupSpec::cyclic(5));
  EXPECT_EQ(centralizer_transitive_action(left_regular_action(z5)).order(), 5u);
  EXPECT_EQ(brute_centralizer({left_multiplication(z5, 1)}, 5).size(), 5u);

  const auto split = make_action("split", {"a"}, {parse_permutation("(1 2)(3 4)")});
  EXPECT_THROW(centralizer_transitive_action(split), InvalidArgument);
  EXPECT_THROW(centralizer_of_action(split), InvalidArgument);
}

TEST(Centralizer, BasePointAgreesWithBruteForce) {
  std::vector<GroupAction> actions;
  for (const auto& spec : default_corpus()) {
    const auto g = construct_group(spec);
    if (g.degree() <= 8) actions.push_back(natural_action(g));
    if (g.order() <= 8) actions.push_back(left_regular_action(g));
  }
  std::mt19937_64 rng(41);
  while (actions.size() < 80) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<Permutation> gens = {perm(oracle::random_permutation(n, rng))};
    if (rng() % 2) gens.push_back(perm(oracle::random_permutation(n, rng)));
    std::vector<std::string> symbols;
    for (std::size_t k = 0; k < gens.size(); ++k) symbols.push_back("s" + std::to_string(k));
    auto a = make_action("random", symbols, gens);
    if (is_transitive(a)) actions.push_back(std::move(a));
  }
  for (const auto& a : actions) {
    ASSERT_TRUE(is_transitive(a)) << a.name;
    const auto base = raw_set(sorted_elements(centralizer_transitive_action(a)));
    EXPECT_EQ(base, brute_centralizer(a.images, static_cast<int>(a.degree))) << a.name;
    EXPECT_EQ(base, raw_set(sorted_elements(centralizer_bruteforce(a.images, a.degree))));
  }
}

TEST(Centralizer, IntransitiveActions) {
  // Two non-isomorphic orbits: a 3-cycle next to a 2-cycle.
  const auto a = make_action("mixed", {"s"}, {parse_permutation("(1 2 3)(4 5)")});
  const auto c = centralizer_of_action(a);
  EXPECT_EQ(c.order(), 6u);
  EXPECT_EQ(raw_set(sorted_elements(c)), brute_centralizer(a.images, 5));
  const auto b = make_action("doubled", {"s"}, {parse_permutation("(1 2 3)(4 5 6)")});
  try {
    centralizer_of_action(b);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("decomposition required"), std::string::npos);
  }
}

TEST(DoubleCentralizer, Examples) {
  const auto z3 = construct_group(GroupSpec::cyclic(3));
  const auto r = double_centralizer({left_multiplication(z3, 1)}, 3);
  EXPECT_EQ(r.c.order(), 3u);
  EXPECT_TRUE(r.closes);
  std::vector<Permutation> right;
  for (ElementId h = 0; h < 3; ++h) right.push_back(right_multiplication(z3, h));
  std::sort(right.begin(), right.end());
  EXPECT_EQ(sorted_elements(r.c), right);

  for (std::size_t n = 3; n <= 5; ++n) {
    const auto sym = construct_group(GroupSpec::sym(n));
    const auto full = double_centralizer({sym.element(sym.generators()[0]), sym.element(sym.generators()[1])}, n);
    EXPECT_EQ(full.c.order(), 1u);
    EXPECT_EQ(full.cc.order(), sym.order());
    EXPECT_TRUE(full.closes);
  }
  const auto v = double_centralizer({parse_permutation("(1 2)", 4)}, 4);
  EXPECT_EQ(v.c.order(), 4u);
  EXPECT_EQ(raw_set(sorted_elements(v.c)), brute_centralizer({parse_permutation("(1 2)", 4)}, 4));
  // C(<(1 2)>) = <(1 2), (3 4)> is its own centralizer, so CC is strictly larger.
  EXPECT_EQ(v.cc.order(), 4u);
  EXPECT_FALSE(v.closes);
}

TEST(DoubleCentralizer, CorpusRegularCopies) {
  for (const auto& spec : default_corpus()) {
    const auto g = construct_group(spec);
    if (g.order() > 24) continue;
    const auto check = biregular_check(g);
    EXPECT_TRUE(check.ok()) << g.name();
    EXPECT_EQ(check.centralizer_order, g.order());
  }
  const auto sym3 = construct_group(GroupSpec::sym(3));
  std::vector<Permutation> left;
  for (ElementId id : sym3.generators()) left.push_back(left_multiplication(sym3, id));
  const auto brute = double_centralizer(left, 6);
  EXPECT_EQ(brute.c.order(), 6u);
  EXPECT_TRUE(brute.closes);
}

TEST(Regularity, Examples) {
  EXPECT_TRUE(is_regular_via_centralizer(left_regular_action(construct_group(GroupSpec::alt(4)))));
  EXPECT_FALSE(is_regular_via_centralizer(natural_action(construct_group(GroupSpec::sym(4)))));
  EXPECT_TRUE(is_regular_via_centralizer(natural_action(construct_group(GroupSpec::cyclic(4)))));
  EXPECT_THROW(is_regular_via_centralizer(make_action("x", {"s"}, {parse_permutation("(1 2)", 3)})), InvalidArgument);
}

TEST(OneDiscrete, Examples) {
  const auto g = construct_group(GroupSpec::alt(4));
  std::vector<Permutation> right;
  for (ElementId h = 0; h < g.order(); ++h) right.push_back(right_multiplication(g, h));
  EXPECT_TRUE(one_discrete_check(right));
  EXPECT_FALSE(one_discrete_check({Permutation::identity(4), parse_permutation("(1 2)", 4)}));
  EXPECT_TRUE(one_discrete_check({parse_permutation("(1 2)", 4)}));
  EXPECT_TRUE(one_discrete_check({}));
  EXPECT_THROW(one_discrete_check({Permutation::identity(3), Permutation::identity(4)}), DegreeMismatch);
}

TEST(ClassPowers, SymFour) {
  const auto g = construct_group(GroupSpec::sym(4));
  const ElementId t = g.index_of(parse_permutation("(1 2)", 4));
  auto ct = [](std::map<std::size_t, std::size_t> m) { return CycleType(std::move(m)); };
  EXPECT_EQ(class_power_types(g, t, 1), std::set<CycleType>{ct({{1, 2}, {2, 1}})});
  EXPECT_EQ(class_power_types(g, t, 2), (std::set<CycleType>{ct({{1, 4}}), ct({{1, 1}, {3, 1}}), ct({{2, 2}})}))
      << type_string(class_power_types(g, t, 2));
  EXPECT_EQ(class_power_types(g, t, 3), (std::set<CycleType>{ct({{1, 2}, {2, 1}}), ct({{4, 1}})}));
  EXPECT_THROW(class_power_types(g, t, 7), CapExceeded);
  EXPECT_THROW(class_power_types(g, t, 0), CapExceeded);
}

TEST(ClassPowers, AgreesWithDirectProductsAndParity) {
  std::mt19937_64 rng(8);
  for (const char* name : {"sym4", "alt5", "d10", "sym5"}) {
    const auto g = construct_group(parse_group_spec(name));
    for (int trial = 0; trial < 4; ++trial) {
      const auto x = static_cast<ElementId>(rng() % g.order());
      // Oracle: conjugates by brute force, products of pairs.
      std::set<oracle::Raw> cls;
      for (ElementId y = 0; y < g.order(); ++y) cls.insert(raw(g.element(g.conj(y, x))));
      std::set<CycleType> pairs;
      for (const auto& a : cls)
        for (const auto& b : cls) pairs.insert(cycle_type(perm(oracle::compose(a, b))));
      EXPECT_EQ(class_power_types(g, x, 2), pairs) << name;
      if (g.element_order(x) == 2)
        for (std::size_t k = 1; k + 2 <= 5; ++k) {
          const auto small = class_power_types(g, x, k);
          const auto big = class_power_types(g, x, k + 2);
          EXPECT_TRUE(std::includes(big.begin(), big.end(), small.begin(), small.end())) << name << " " << k;
        }
    }
  }
}
