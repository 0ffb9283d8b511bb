#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "hilbtan/error.hpp"
#include "hilbtan/ideal.hpp"
#include "hilbtan/staircase.hpp"
#include "worked_examples.hpp"

namespace hilbtan {
namespace {

using V = ExponentVector;

std::vector<V> sorted(std::vector<V> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(ParseIdeal, SturmfelsGenerators) {
  const auto ideal = parse_ideal("x^2,y^2,z^4,x*y,x*z^2,y*z^2", 3);
  EXPECT_EQ(sorted(ideal.generators()),
            sorted({V{2, 0, 0}, V{0, 2, 0}, V{0, 0, 4}, V{1, 1, 0}, V{1, 0, 2}, V{0, 1, 2}}));
}

TEST(ParseIdeal, MaximalIdeal) {
  EXPECT_EQ(parse_ideal("x,y,z", 3).generators(), (std::vector<V>{V{1, 0, 0}, V{0, 1, 0}, V{0, 0, 1}}));
}

TEST(ParseIdeal, DropsRedundantGenerators) {
  EXPECT_EQ(sorted(parse_ideal("x^2,x^3,y", 3).generators()), sorted({V{2, 0, 0}, V{0, 1, 0}}));
}

TEST(ParseIdeal, JuxtapositionWhitespaceAndIndexedNames) {
  EXPECT_EQ(parse_ideal(" x y^2 , z ", 3), parse_ideal("x*y^2,z", 3));
  EXPECT_EQ(parse_ideal("x1^2,x2,x3", 3), parse_ideal("x^2,y,z", 3));
  EXPECT_EQ(parse_ideal("x1*x4^3,x2", 4).generators().size(), 2u);
}

TEST(ParseIdeal, InputOrderIsIrrelevant) {
  EXPECT_EQ(parse_ideal("yz^2,x^2,xy", 3), parse_ideal("xy,yz^2,x^2", 3));
}

TEST(ParseIdeal, Errors) {
  EXPECT_THROW(parse_ideal("", 3), ParseError);
  EXPECT_THROW(parse_ideal("x^", 3), ParseError);
  EXPECT_THROW(parse_ideal("x^0", 3), ParseError);
  EXPECT_THROW(parse_ideal("x,,y", 3), ParseError);
  EXPECT_THROW(parse_ideal("w", 3), ParseError);
  EXPECT_THROW(parse_ideal("x5", 3), ParseError);
  EXPECT_THROW(parse_ideal("x*", 3), ParseError);
  try {
    parse_ideal("x,y+z", 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(ParseIdeal, RenderRoundTrip) {
  for (const auto& e : fixtures::examples()) {
    const auto ideal = parse_ideal(e.ideal, 3);
    EXPECT_EQ(parse_ideal(render(ideal), 3), ideal) << e.name;
  }
  const auto four = parse_ideal("x1^2,x1*x2,x2^3,x3,x4^2", 4);
  EXPECT_EQ(parse_ideal(render(four), 4), four);
}

TEST(Minimalize, Examples) {
  const std::vector<V> gens{V{1, 0}, V{2, 0}, V{0, 1}};
  EXPECT_EQ(sorted(minimalize(gens).generators()), sorted({V{1, 0}, V{0, 1}}));
  auto m2 = power_ideal(3, 2).generators();
  m2.push_back(V{3, 0, 0});
  EXPECT_EQ(minimalize(m2), power_ideal(3, 2));
  EXPECT_THROW(minimalize(std::vector<V>{}), InvalidArgument);
}

TEST(Minimalize, IdempotentAndOrderIndependent) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<V> gens;
    for (int i = 0; i < 8; ++i) gens.push_back(V{e(rng), e(rng), e(rng)});
    const auto once = minimalize(gens);
    EXPECT_EQ(minimalize(once.generators()), once);
    std::shuffle(gens.begin(), gens.end(), rng);
    EXPECT_EQ(minimalize(gens), once);
    for (const auto& g : once.generators())
      for (const auto& h : once.generators())
        if (!(g == h)) {
          EXPECT_FALSE(g.divides(h));
        }
  }
}

TEST(CanonicalOrder, GradedLexLargestFirst) {
  const auto ideal = power_ideal(3, 2);
  EXPECT_EQ(render(ideal), "x^2,x*y,x*z,y^2,y*z,z^2");
  EXPECT_TRUE(canonical_less(V{1, 0, 0}, V{2, 0, 0}));
  EXPECT_TRUE(canonical_less(V{2, 0, 0}, V{1, 1, 0}));
}

TEST(ZeroDimensional, Examples) {
  EXPECT_TRUE(is_zero_dimensional(parse_ideal("x,y,z", 3)));
  EXPECT_FALSE(is_zero_dimensional(parse_ideal("x^2,x*y", 2)));
  EXPECT_TRUE(is_zero_dimensional(parse_ideal(fixtures::example("Sturmfels").ideal, 3)));
}

TEST(BorelFixed, Examples) {
  for (int k = 1; k <= 5; ++k) EXPECT_TRUE(is_borel_fixed(power_ideal(3, static_cast<Exponent>(k))));
  EXPECT_FALSE(is_borel_fixed(parse_ideal("x^2,y^2", 2)));
  EXPECT_TRUE(is_borel_fixed(parse_ideal(fixtures::example("Sturmfels").ideal, 3)));
  EXPECT_FALSE(is_borel_fixed(parse_ideal("x,y^2,z", 3)));
  EXPECT_TRUE(is_borel_fixed(parse_ideal("x,y,z^2", 3)));
}

TEST(PowerIdeal, GeneratorsAndColength) {
  EXPECT_EQ(power_ideal(3, 1), parse_ideal("x,y,z", 3));
  EXPECT_EQ(power_ideal(3, 2).size(), 6u);
  EXPECT_EQ(colength(power_ideal(3, 2)), 4u);
  EXPECT_EQ(colength(power_ideal(3, 5)), 35u);
  for (Exponent k = 1; k <= 8; ++k) EXPECT_EQ(colength(power_ideal(3, k)), static_cast<std::size_t>(binomial(k + 2, 3)));
  EXPECT_EQ(colength(power_ideal(4, 3)), static_cast<std::size_t>(binomial(6, 4)));
}

TEST(MixedGenerators, Examples) {
  EXPECT_EQ(mixed_generators(power_ideal(3, 2)), (std::vector<V>{V{1, 1, 0}, V{1, 0, 1}, V{0, 1, 1}}));
  EXPECT_TRUE(mixed_generators(parse_ideal("x,y,z", 3)).empty());
  EXPECT_EQ(sorted(mixed_generators(parse_ideal(fixtures::example("Sturmfels").ideal, 3))),
            sorted({V{1, 1, 0}, V{1, 0, 2}, V{0, 1, 2}}));
}

TEST(PermuteVariables, Examples) {
  const auto l = parse_ideal(fixtures::example("L").ideal, 3);
  const std::vector<std::size_t> identity{0, 1, 2};
  EXPECT_EQ(permute_variables(l, identity), l);
  const auto swap = swap_permutation(3, 0, 1);
  const auto swapped = permute_variables(l, swap);
  EXPECT_EQ(swapped.pure_powers(), (std::vector<Exponent>{3, 2, 3}));
  EXPECT_EQ(permute_variables(swapped, swap), l);
  const std::vector<std::size_t> bad{0, 0, 1};
  EXPECT_THROW(permute_variables(l, bad), InvalidArgument);
}

TEST(PermuteVariables, PreservesColength) {
  std::vector<std::size_t> perm{0, 1, 2};
  for (const auto& e : fixtures::examples()) {
    const auto ideal = parse_ideal(e.ideal, 3);
    do {
      EXPECT_EQ(colength(permute_variables(ideal, perm)), colength(ideal)) << e.name;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(MonomialIdeal, ConstructorValidates) {
  EXPECT_THROW(MonomialIdeal(3, {}), InvalidArgument);
  EXPECT_THROW(MonomialIdeal(0, {V{}}), InvalidArgument);
  EXPECT_THROW(MonomialIdeal(3, {V{1, 0}}), InvalidArgument);
}

TEST(MonomialIdeal, PurePowers) {
  const auto ideal = parse_ideal(fixtures::example("O").ideal, 3);
  EXPECT_EQ(ideal.pure_powers(), (std::vector<Exponent>{4, 5, 5}));
  EXPECT_THROW(parse_ideal("x,y", 3).pure_powers(), NotZeroDimensional);
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

}  // namespace
}  // namespace hilbtan
