#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "hilbtan/error.hpp"
#include "hilbtan/staircase.hpp"
#include "worked_examples.hpp"

namespace hilbtan {
namespace {

using V = ExponentVector;

// Independent count: every box point below the pure powers not in the ideal.
std::size_t brute_colength(const MonomialIdeal& ideal) {
  const auto m = ideal.pure_powers();
  std::size_t count = 0;
  for (Exponent a = 0; a < m[0]; ++a)
    for (Exponent b = 0; b < m[1]; ++b)
      for (Exponent c = 0; c < m[2]; ++c)
        if (!ideal.contains(V{a, b, c})) ++count;
  return count;
}

TEST(Staircase, ExampleColengths) {
  for (const auto& e : fixtures::examples()) {
    const auto ideal = parse_ideal(e.ideal, 3);
    EXPECT_EQ(static_cast<long>(colength(ideal)), e.colength) << e.name;
    EXPECT_EQ(colength(ideal), brute_colength(ideal)) << e.name;
  }
}

TEST(Staircase, SturmfelsMembers) {
  const Staircase s(parse_ideal(fixtures::example("Sturmfels").ideal, 3));
  ASSERT_EQ(s.size(), 8u);
  std::vector<V> expected{V{0, 0, 0}, V{1, 0, 0}, V{0, 1, 0}, V{0, 0, 1},
                          V{1, 0, 1}, V{0, 1, 1}, V{0, 0, 2}, V{0, 0, 3}};
  std::vector<V> got = s.members();
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
  EXPECT_EQ(s.bounds(), (std::vector<Exponent>{2, 2, 4}));
}

TEST(Staircase, MembersAreCanonicalAndDivisibilityClosed) {
  for (const auto& e : fixtures::examples()) {
    const Staircase s(parse_ideal(e.ideal, 3));
    const auto& members = s.members();
    EXPECT_TRUE(std::is_sorted(members.begin(), members.end(), canonical_less)) << e.name;
    for (std::size_t i = 0; i < members.size(); ++i) {
      EXPECT_EQ(s.find(members[i].values()), static_cast<std::ptrdiff_t>(i));
      for (std::size_t v = 0; v < 3; ++v)
        if (members[i][v] > 0) {
          EXPECT_TRUE(s.contains(members[i].with(v, members[i][v] - 1)));
        }
    }
  }
}

TEST(Staircase, FindRejectsOutsidePoints) {
  const Staircase s(parse_ideal(fixtures::example("L").ideal, 3));
  const std::vector<Exponent> negative{-1, 0, 0};
  EXPECT_EQ(s.find(negative), -1);
  EXPECT_FALSE(s.contains(V{2, 0, 0}));
  EXPECT_FALSE(s.contains(V{9, 9, 9}));
  EXPECT_TRUE(s.contains(V{0, 2, 1}) == false);
  EXPECT_TRUE(s.contains(V{0, 0, 2}));
}

TEST(Staircase, RandomIdealsAgreeWithBruteForce) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(0, 5);
  std::uniform_int_distribution<int> p(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<V> gens{V{p(rng), 0, 0}, V{0, p(rng), 0}, V{0, 0, p(rng)}};
    for (int i = 0; i < 5; ++i) {
      V g{e(rng), e(rng), e(rng)};
      if (g.degree() > 0) gens.push_back(g);
    }
    const auto ideal = minimalize(gens);
    EXPECT_EQ(colength(ideal), brute_colength(ideal));
  }
}

TEST(Staircase, FourVariables) {
  EXPECT_EQ(colength(parse_ideal("x1^2,x2^3,x3,x4^5", 4)), 30u);
  EXPECT_EQ(colength(power_ideal(4, 2)), 5u);
}

TEST(Staircase, Errors) {
  EXPECT_THROW(colength(parse_ideal("x,y", 3)), NotZeroDimensional);
  EXPECT_THROW(colength(power_ideal(3, 9), 100), CapExceeded);
  EXPECT_EQ(colength(power_ideal(3, 9), 165), 165u);
}

}  // namespace
}  // namespace hilbtan
