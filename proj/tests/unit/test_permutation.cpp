#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "soficlab/errors.hpp"
#include "soficlab/permutation.hpp"
#include "soficlab/word.hpp"

using namespace soficlab;

namespace {

Permutation P(const char* text, std::optional<std::size_t> deg = std::nullopt) {
  return parse_permutation(text, deg);
}

Permutation from_raw(const oracle::Raw& r) {
  return Permutation::from_images(std::vector<Point>(r.begin(), r.end()));
}

oracle::Raw to_raw(const Permutation& p) { return oracle::Raw(p.images().begin(), p.images().end()); }

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  return from_raw(oracle::random_permutation(static_cast<int>(n), rng));
}

}  // namespace

TEST(Permutation, CompositionAppliesRightFactorFirst) {
  const Permutation p = P("(1 2)", 3);
  const Permutation q = P("(2 3)", 3);
  EXPECT_EQ((p * q).to_image_string(), "[2,3,1]");
  EXPECT_EQ((q * p).to_image_string(), "[3,1,2]");
  EXPECT_EQ((p * q)(0), p(q(0)));
}

TEST(Permutation, ParsesBothNotations) {
  EXPECT_EQ(P("[2,1,3]"), P("(1 2)", 3));
  EXPECT_EQ(P("(1 2)(3 4)").degree(), 4u);
  EXPECT_EQ(P("() deg=5"), Permutation::identity(5));
  EXPECT_EQ(P("(1 2) deg=4").degree(), 4u);
  EXPECT_EQ(P("(1 2 3)").to_cycle_string(), "(1 2 3)");
  EXPECT_THROW(P("()"), ParseError);
  EXPECT_THROW(P("[1,1,2]"), ParseError);
  EXPECT_THROW(P("(1 2 1)"), ParseError);
  EXPECT_THROW(P("(0 1)"), ParseError);
  EXPECT_THROW(P("(1 5)", 3), ParseError);
  EXPECT_THROW(P("1 2"), ParseError);
}

TEST(Permutation, TextRoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Permutation p = random_perm(n, rng);
    EXPECT_EQ(parse_permutation(p.to_cycle_string(), n), p);
    EXPECT_EQ(parse_permutation(p.to_image_string()), p);
  }
}

TEST(Word, Examples) {
  Assignment a{{"s", P("(1 2 3)")}};
  EXPECT_TRUE(evaluate_word(parse_word("s·s⁻¹"), a).is_identity());
  EXPECT_TRUE(evaluate_word(parse_word("s*s^-1"), a).is_identity());
  EXPECT_EQ(evaluate_word(parse_word("s"), {{"s", P("[2,3,1]")}}), P("[2,3,1]"));

  const Permutation h1 = P("(1 2)", 3), h2 = P("(1 3)", 3);
  const Permutation c = evaluate_word(parse_word("[h1,h2]"), {{"h1", h1}, {"h2", h2}});
  const auto expected = oracle::commutator(to_raw(h1), to_raw(h2));
  EXPECT_EQ(to_raw(c), expected);
  EXPECT_EQ(cycle_type(c), CycleType(std::map<std::size_t, std::size_t>{{3, 1}}));
}

TEST(Word, Errors) {
  EXPECT_THROW(evaluate_word(parse_word("s*t"), {{"s", P("(1 2)")}}), InvalidArgument);
  EXPECT_THROW(evaluate_word(parse_word("s*t"), {{"s", P("(1 2)")}, {"t", P("(1 2 3)")}}), DegreeMismatch);
  EXPECT_THROW(parse_word("s*"), ParseError);
  EXPECT_THROW(parse_word("[s,t"), ParseError);
}

TEST(Word, GroupAxiomsOnRandomWords) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    Assignment a{{"x", random_perm(n, rng)}, {"y", random_perm(n, rng)}, {"z", random_perm(n, rng)}};
    EXPECT_EQ(evaluate_word(parse_word("(x*y)*z"), a), evaluate_word(parse_word("x*(y*z)"), a));
    EXPECT_TRUE(evaluate_word(parse_word("x*y*z*(x*y*z)^-1"), a).is_identity());
    EXPECT_EQ(evaluate_word(parse_word("[x,y]"), a), evaluate_word(parse_word("x^-1*y^-1*x*y"), a));
    EXPECT_EQ(evaluate_word(parse_word("1*x*1"), a), a.at("x"));
  }
}

TEST(Hamming, Examples) {
  EXPECT_EQ(hamming_distance(Permutation::identity(5), Permutation::identity(5)), Rational(0));
  EXPECT_EQ(hamming_distance(P("(1 2)", 4), Permutation::identity(4)), Rational(1, 2));
  EXPECT_EQ(hamming_distance(P("[2,3,1]"), P("[3,1,2]")), Rational(1));
  EXPECT_THROW(hamming_distance(P("(1 2)", 3), P("(1 2)", 4)), DegreeMismatch);
}

TEST(Hamming, BiInvariantMetricProperty) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    const Permutation p = random_perm(n, rng), q = random_perm(n, rng), x = random_perm(n, rng);
    const Rational d = hamming_distance(p, q);
    EXPECT_EQ(hamming_distance(x * p, x * q), d);
    EXPECT_EQ(hamming_distance(p * x, q * x), d);
    EXPECT_EQ(d, Rational(oracle::moved_points(to_raw(p), to_raw(q)), static_cast<std::int64_t>(n)));
    EXPECT_LE(hamming_distance(p, x), hamming_distance(p, q) + hamming_distance(q, x));
  }
}

TEST(CycleType, Examples) {
  const auto id = cycle_type(Permutation::identity(7));
  EXPECT_EQ(id, CycleType(std::map<std::size_t, std::size_t>{{1, 7}}));
  EXPECT_EQ(lambda_profile(Permutation::identity(7)).at(1), Rational(1));

  const Permutation g = P("(1 2)(3 4 5)", 6);
  EXPECT_EQ(cycle_type(g), CycleType(std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {3, 1}}));
  const auto lambda = lambda_profile(g);
  EXPECT_EQ(lambda.at(1), Rational(1, 6));
  EXPECT_EQ(lambda.at(2), Rational(1, 3));
  EXPECT_EQ(lambda.at(3), Rational(1, 2));
  EXPECT_EQ(hamming_distance(Permutation::identity(6), g), Rational(5, 6));

  EXPECT_EQ(cycle_type(P("(1 2 3)(4 5 6)")), CycleType(std::map<std::size_t, std::size_t>{{3, 2}}));
  EXPECT_EQ(cycle_type(g).to_string(), "1^1 2^1 3^1");
}

TEST(CycleType, LambdaIdentitiesProperty) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    const Permutation g = random_perm(n, rng);
    const auto lambda = lambda_profile(g);
    Rational sum = 0;
    for (const auto& [k, v] : lambda) sum += v;
    EXPECT_EQ(sum, Rational(1));
    const Rational lambda1 = lambda.contains(1) ? lambda.at(1) : Rational(0);
    EXPECT_EQ(hamming_distance(Permutation::identity(n), g), Rational(1) - lambda1);
  }
}

TEST(CentralizerOrder, ExamplesAgainstBruteForce) {
  const auto sym6 = oracle::all_permutations(6);
  auto brute = [&](const Permutation& g) {
    const auto r = to_raw(g);
    std::size_t count = 0;
    for (const auto& x : sym6) count += oracle::compose(x, r) == oracle::compose(r, x);
    return count;
  };
  const Permutation a = P("(1 2 3)(4 5 6)");
  const Permutation b = P("(1 2)(3 4 5)", 6);
  EXPECT_EQ(brute(a), 18u);
  EXPECT_EQ(brute(b), 6u);
  EXPECT_EQ(centralizer_order_sym(cycle_type(a)), 18);
  EXPECT_EQ(centralizer_order_sym(cycle_type(b)), 6);
  EXPECT_EQ(centralizer_order_sym(cycle_type(Permutation::identity(6))), 720);
  EXPECT_EQ(centralizer_order_sym(cycle_type(Permutation::identity(25))),
            BigInt("15511210043330985984000000"));
}

TEST(CentralizerOrder, MatchesBruteForceUpToDegreeSix) {
  for (int n = 1; n <= 6; ++n) {
    const auto all = oracle::all_permutations(n);
    for (const auto& g : all) {
      std::size_t count = 0;
      for (const auto& x : all) count += oracle::compose(x, g) == oracle::compose(g, x);
      ASSERT_EQ(centralizer_order_sym(cycle_type(from_raw(g))), count) << from_raw(g).to_cycle_string();
    }
  }
}

TEST(Conjugacy, Examples) {
  const Permutation c5 = P("(1 2 3 4 5)");
  EXPECT_TRUE(conjugacy_test(c5, c5.pow(2), Ambient::Sym));
  EXPECT_FALSE(conjugacy_test(c5, c5.pow(2), Ambient::Alt));
  EXPECT_FALSE(conjugacy_test(P("(1 2 3)", 4), P("(1 3 2)", 4), Ambient::Alt));
  EXPECT_TRUE(conjugacy_test(P("(1 2 3)", 5), P("(1 3 2)", 5), Ambient::Alt));
  EXPECT_THROW(conjugacy_test(P("(1 2)", 4), P("(1 2)", 4), Ambient::Alt), InvalidArgument);
  EXPECT_THROW(conjugacy_test(P("(1 2)", 4), P("(1 2)", 5), Ambient::Sym), DegreeMismatch);
}

TEST(Conjugacy, AgreesWithExhaustiveConjugatorSearch) {
  for (int n = 1; n <= 6; ++n) {
    const auto all = oracle::all_permutations(n);
    std::vector<oracle::Raw> alt;
    for (const auto& x : all)
      if (oracle::is_even(x)) alt.push_back(x);
    auto conjugate_in = [](const std::vector<oracle::Raw>& ambient, const oracle::Raw& p, const oracle::Raw& q) {
      for (const auto& x : ambient)
        if (oracle::compose(oracle::compose(x, p), oracle::invert(x)) == q) return true;
      return false;
    };
    for (const auto& p : all)
      for (const auto& q : all) {
        const bool sym = conjugacy_test(from_raw(p), from_raw(q), Ambient::Sym);
        ASSERT_EQ(sym, cycle_type(from_raw(p)) == cycle_type(from_raw(q)));
        if (n <= 5) ASSERT_EQ(sym, conjugate_in(all, p, q));
        if (oracle::is_even(p) && oracle::is_even(q)) {
          const bool in_alt = conjugacy_test(from_raw(p), from_raw(q), Ambient::Alt);
          if (in_alt) ASSERT_TRUE(sym);
          ASSERT_EQ(in_alt, conjugate_in(alt, p, q));
        }
      }
  }
}

TEST(MinConjugateDistance, Examples) {
  const Permutation c5 = P("(1 2 3 4 5)");
  EXPECT_EQ(min_conjugate_distance(c5, c5), Rational(0));
  EXPECT_EQ(min_conjugate_distance(c5, c5.pow(2)), Rational(0));

  const Permutation g = P("(1 2 3 4)");
  const Permutation h = g.pow(2);
  std::size_t best = 4;
  for (const auto& x : oracle::all_permutations(4)) {
    const auto conj = oracle::compose(oracle::compose(x, to_raw(h)), oracle::invert(x));
    best = std::min<std::size_t>(best, oracle::moved_points(to_raw(g), conj));
  }
  EXPECT_EQ(min_conjugate_distance(g, h), Rational(static_cast<std::int64_t>(best), 4));
  EXPECT_EQ(min_conjugate_distance(g, h), Rational(1, 2));

  EXPECT_THROW(min_conjugate_distance(Permutation::identity(9), Permutation::identity(9)), CapExceeded);
  EXPECT_NO_THROW(min_conjugate_distance(Permutation::identity(9), Permutation::identity(9), 9));
}

TEST(Permutation, PowerAndOrder) {
  const Permutation g = P("(1 2 3)(4 5)");
  EXPECT_EQ(g.order(), 6u);
  EXPECT_TRUE(g.pow(6).is_identity());
  EXPECT_EQ(g.pow(-1), g.inverse());
  EXPECT_EQ(g.pow(7), g);
  EXPECT_FALSE(g.is_even());
  EXPECT_EQ(g.padded(7).degree(), 7u);
  EXPECT_EQ(g.padded(7).fixed_point_count(), 2u);
}
