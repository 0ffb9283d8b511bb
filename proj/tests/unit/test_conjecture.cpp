#include <algorithm>
#include <functional>

#include <gtest/gtest.h>

#include "hilbtan/conjecture.hpp"
#include "hilbtan/error.hpp"
#include "hilbtan/families.hpp"
#include "worked_examples.hpp"

namespace hilbtan {
namespace {

using V = ExponentVector;
using M3 = std::array<Exponent, 3>;

MonomialIdeal example_ideal(const std::string& name) { return parse_ideal(fixtures::example(name).ideal, 3); }

TEST(ColengthBracket, Values) {
  EXPECT_EQ(colength_bracket(3, 1), 1);
  EXPECT_EQ(colength_bracket(3, 3), 1);
  EXPECT_EQ(colength_bracket(3, 4), 2);
  EXPECT_EQ(colength_bracket(3, 9), 2);
  EXPECT_EQ(colength_bracket(3, 10), 3);
  EXPECT_EQ(colength_bracket(3, 40), 5);
  EXPECT_EQ(colength_bracket(2, 6), 3);
  EXPECT_EQ(colength_bracket(1, 7), 7);
  for (std::int64_t k = 1; k <= 12; ++k) {
    EXPECT_EQ(colength_bracket(3, binomial(k + 2, 3)), k);
    EXPECT_EQ(colength_bracket(3, binomial(k + 3, 3) - 1), k);
  }
  EXPECT_THROW(colength_bracket(3, 0), InvalidArgument);
  EXPECT_THROW(colength_bracket(0, 4), InvalidArgument);
}

TEST(NecessaryCondition, Examples) {
  for (const auto& e : fixtures::examples()) {
    const auto report = check_necessary(parse_ideal(e.ideal, 3));
    EXPECT_EQ(report.n, e.colength);
    EXPECT_TRUE(report.passes) << e.name;
    EXPECT_EQ(report.m1, report.k) << e.name;
  }
  const auto thin = check_necessary(parse_ideal("x,y^5,z^5", 3));
  EXPECT_EQ(thin.n, 25);
  EXPECT_EQ(thin.k, 4);
  EXPECT_EQ(thin.m1, 1);
  EXPECT_FALSE(thin.passes);
  EXPECT_THROW(check_necessary(parse_ideal("x,y", 3)), NotZeroDimensional);
}

TEST(ClassifyType, WorkedExampleLabels) {
  for (const auto& e : fixtures::examples()) {
    const auto report = classify_type(parse_ideal(e.ideal, 3));
    EXPECT_EQ(report.subtype, e.label) << e.name;
    EXPECT_EQ(report.n, e.colength) << e.name;
  }
}

TEST(ClassifyType, FamilyLabels) {
  for (FamilyTag tag : kAllFamilyTags) {
    if (tag == FamilyTag::MK) continue;
    const std::int64_t k = tag == FamilyTag::STAR ? 1 : std::max<std::int64_t>(family_min_param(tag), 3);
    const auto report = classify_type(family_ideal({tag, k}));
    EXPECT_EQ(report.subtype, family_claimed_type(tag)) << family_name(tag) << k;
  }
}

TEST(ClassifyType, ReportContents) {
  const auto report = classify_type(example_ideal("O"));
  EXPECT_EQ(report.claimed_type, "III");
  EXPECT_EQ(report.m, (M3{4, 5, 5}));
  EXPECT_EQ(report.k, 4);
  for (const char* pre : {"zero_dimensional", "borel", "necessary", "spanned"}) {
    ASSERT_TRUE(report.conditions.count(pre)) << pre;
    EXPECT_TRUE(report.conditions.at(pre).passed) << pre;
  }
  EXPECT_FALSE(report.boundary_maxima.empty());
  EXPECT_TRUE(report.interior_generators.empty());
}

TEST(ClassifyType, PowerIdealAndPreconditionFailures) {
  // m^k meets the type I conditions with a planar hull.
  const auto mk = classify_type(power_ideal(3, 3));
  EXPECT_EQ(mk.subtype, "I(a)(ii)");
  const auto thin = classify_type(parse_ideal("x,y^5,z^5", 3));
  EXPECT_EQ(thin.subtype, "none");
  EXPECT_FALSE(thin.conditions.at("necessary").passed);
  EXPECT_THROW(classify_type(parse_ideal("x1,x2,x3,x4", 4)), InvalidArgument);
  EXPECT_THROW(classify_type(parse_ideal("x,y", 3)), NotZeroDimensional);
}

TEST(ClassifyType, InvariantUnderVariablePermutation) {
  std::vector<std::size_t> perm{0, 1, 2};
  for (const auto& name : {"L", "F", "V", "M"}) {
    const auto ideal = example_ideal(name);
    const auto base = classify_type(ideal).subtype;
    std::sort(perm.begin(), perm.end());
    do {
      EXPECT_EQ(classify_type(permute_variables(ideal, perm)).subtype, base) << name;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

std::int64_t plane_side(const M3& m, const V& p) {
  return std::int64_t{p[0]} * m[1] * m[2] + std::int64_t{p[1]} * m[0] * m[2] + std::int64_t{p[2]} * m[0] * m[1] -
         std::int64_t{m[0]} * m[1] * m[2];
}

struct Brute {
  std::int64_t count = -1;
  std::uint64_t argmax = 0;
};

// Walks every staircase in the box with pure powers exactly m, as a height
// function h(a, b), and scores the admissible ones directly.
Brute brute_maximum(const M3& m, Side side, std::optional<std::int64_t> target) {
  Brute best;
  std::vector<Exponent> h(static_cast<std::size_t>(m[0] * m[1]), 0);
  auto at = [&](Exponent a, Exponent b) -> Exponent& { return h[static_cast<std::size_t>(a * m[1] + b)]; };
  std::function<void(Exponent)> fill = [&](Exponent cell) {
    if (cell == m[0] * m[1]) {
      if (at(0, 0) != m[2] || at(m[0] - 1, 0) == 0 || at(0, m[1] - 1) == 0) return;
      std::int64_t n = 0;
      std::vector<V> gens{V{m[0], 0, 0}, V{0, m[1], 0}};
      for (Exponent a = 0; a < m[0]; ++a)
        for (Exponent b = 0; b < m[1]; ++b) {
          n += at(a, b);
          gens.push_back(V{a, b, at(a, b)});
        }
      if (target && n != *target) return;
      const auto ideal = minimalize(gens);
      for (const auto& g : mixed_generators(ideal)) {
        const auto s = plane_side(m, g);
        if ((side == Side::lower && s > 0) || (side == Side::upper && s < 0)) return;
      }
      const auto count =
          static_cast<std::int64_t>(boundary_lattice_points(convex_hull(ideal.generators()), side).size());
      if (count > best.count) best = {count, 0};
      if (count == best.count) ++best.argmax;
      return;
    }
    const Exponent a = cell / m[1];
    const Exponent b = cell % m[1];
    Exponent hi = m[2];
    if (a > 0) hi = std::min(hi, at(a - 1, b));
    if (b > 0) hi = std::min(hi, at(a, b - 1));
    for (Exponent v = 0; v <= hi; ++v) {
      at(a, b) = v;
      fill(cell + 1);
    }
    at(a, b) = 0;
  };
  fill(0);
  return best;
}

TEST(MaxBoundary, AgreesWithStaircaseWalk) {
  const std::vector<M3> boxes{{1, 1, 1}, {1, 2, 3}, {2, 2, 2}, {2, 2, 4}, {2, 3, 3}, {3, 3, 3}};
  for (const auto& m : boxes) {
    for (Side side : {Side::lower, Side::upper, Side::both}) {
      std::vector<std::optional<std::int64_t>> targets{std::nullopt};
      for (std::int64_t n = 1; n <= m[0] * m[1] * m[2]; ++n) targets.push_back(n);
      for (const auto& target : targets) {
        BoundarySearchOptions options;
        options.colength = target;
        const auto fast = max_boundary_count(m, side, options);
        const auto slow = brute_maximum(m, side, target);
        EXPECT_EQ(fast.count, slow.count) << m[0] << m[1] << m[2] << side_name(side) << target.value_or(-1);
        if (fast.count >= 0) {
          EXPECT_EQ(fast.argmax_count, slow.argmax);
        }
      }
    }
  }
}

TEST(MaxBoundary, SmallExamples) {
  EXPECT_EQ(max_boundary_count({2, 2, 2}, Side::lower).count, 6);
  BoundarySearchOptions eight;
  eight.colength = 8;
  const auto s = max_boundary_count({2, 2, 4}, Side::lower, eight);
  EXPECT_EQ(s.count, 6);
  EXPECT_NE(std::find(s.witnesses.begin(), s.witnesses.end(), example_ideal("Sturmfels")), s.witnesses.end());
}

TEST(MaxBoundary, EnginesAgreeOnBorelCandidates) {
  for (Exponent a = 1; a <= 3; ++a)
    for (Exponent b = a; b <= 3; ++b)
      for (Exponent c = b; c <= 4; ++c)
        for (Side side : {Side::lower, Side::upper, Side::both})
          for (std::int64_t n = -1; n <= a * b * c; n += 3) {
            BoundarySearchOptions options;
            options.borel_only = true;
            if (n >= 0) options.colength = n;
            const M3 m{a, b, c};
            const auto x = detail::max_boundary_antichains(m, side, options);
            const auto y = detail::max_boundary_borel(m, side, options);
            EXPECT_EQ(x.count, y.count);
            EXPECT_EQ(x.witnesses, y.witnesses);
            if (x.count >= 0) {
              EXPECT_EQ(x.argmax_count, y.argmax_count);
            }
          }
}

TEST(MaxBoundary, WitnessCapKeepsTrueMaximizers) {
  BoundarySearchOptions options;
  options.max_witnesses = 2;
  const auto r = max_boundary_count({3, 3, 3}, Side::both, options);
  EXPECT_LE(r.witnesses.size(), 2u);
  EXPECT_GE(r.argmax_count, r.witnesses.size());
  const auto all = max_boundary_count({3, 3, 3}, Side::both);
  EXPECT_EQ(all.argmax_count, r.argmax_count);
  ASSERT_GE(all.witnesses.size(), r.witnesses.size());
  for (const auto& w : r.witnesses)
    EXPECT_NE(std::find(all.witnesses.begin(), all.witnesses.end(), w), all.witnesses.end()) << render(w);
}

TEST(MaxBoundary, Errors) {
  BoundarySearchOptions tiny;
  tiny.budget = 10;
  EXPECT_THROW(max_boundary_count({4, 5, 5}, Side::both, tiny), BudgetExceeded);
  EXPECT_THROW(max_boundary_count({3, 2, 2}, Side::lower), InvalidArgument);
  EXPECT_THROW(max_boundary_count({0, 2, 2}, Side::lower), InvalidArgument);
  BoundarySearchOptions none;
  none.colength = 1000;
  EXPECT_EQ(max_boundary_count({2, 2, 2}, Side::lower, none).count, -1);
}

}  // namespace
}  // namespace hilbtan
