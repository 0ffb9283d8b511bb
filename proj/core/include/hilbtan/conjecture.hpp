#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbtan/hull.hpp"
#include "hilbtan/ideal.hpp"

namespace hilbtan {

/// The unique k with C(N-1+k, N) <= n < C(N+k, N). Throws InvalidArgument
/// when n == 0 or N == 0.
std::int64_t colength_bracket(std::size_t nvars, std::int64_t n);

struct NecessaryReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  /// Smallest pure-power exponent.
  std::int64_t m1 = 0;
  bool passes = false;
};

/// The necessary condition: m1 equals the bracket integer of the colength.
/// Throws NotZeroDimensional.
NecessaryReport check_necessary(const MonomialIdeal& ideal);

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

struct BoundarySearchOptions {
  /// Only candidates of exactly this colength.
  std::optional<std::int64_t> colength;
  /// Only Borel-fixed candidates (for x > y > z).
  bool borel_only = false;
  /// Search nodes before BudgetExceeded is raised.
  std::uint64_t budget = kDefaultSearchBudget;
  /// Maximizers kept in `witnesses`; argmax_count still counts all of them.
  std::size_t max_witnesses = 64;
};

struct BoundaryMaximum {
  /// Largest lattice-point count, or -1 when no candidate exists.
  std::int64_t count = -1;
  /// Maximizing ideals, canonically sorted, at most max_witnesses of them.
  std::vector<MonomialIdeal> witnesses;
  std::uint64_t argmax_count = 0;
  std::uint64_t candidates = 0;
  std::uint64_t nodes = 0;
};

/// Exhaustive maximum of the number of lattice points on the `side`
/// boundary of conv(J), over ideals J = (x^m1, y^m2, z^m3, mixed generators)
/// whose mixed generators lie on the required side of the plane through the
/// three pure powers (below or on it for lower, above or on it for upper,
/// anywhere for both). Needs m1 <= m2 <= m3. Throws BudgetExceeded.
BoundaryMaximum max_boundary_count(const std::array<Exponent, 3>& m, Side side,
                                   const BoundarySearchOptions& options = {});

namespace detail {

/// The two engines behind max_boundary_count, exposed for cross-checking:
/// branch and bound over generator antichains, and a walk over Borel-fixed
/// staircases (which ignores borel_only and always restricts).
BoundaryMaximum max_boundary_antichains(const std::array<Exponent, 3>& m, Side side,
                                        const BoundarySearchOptions& options);
BoundaryMaximum max_boundary_borel(const std::array<Exponent, 3>& m, Side side,
                                   const BoundarySearchOptions& options);

}  // namespace detail

struct ConditionResult {
  bool evaluated = true;
  bool passed = false;
  std::string detail;
};

struct ClassifyOptions {
  std::uint64_t budget = kDefaultSearchBudget;
  /// Run the maximality search even for types already failing elsewhere.
  bool evaluate_all = false;
  /// Also search candidates of every colength (slow for large m).
  bool any_colength = false;
};

struct TypeReport {
  /// "I", "II", "III" or "none".
  std::string claimed_type = "none";
  /// Full label such as "I(a)(ii)" or "III(a'')(i)", or "none".
  std::string subtype = "none";
  /// Every type whose conditions all hold, in order I, II, III.
  std::vector<std::string> matches;
  /// Pure powers after sorting the variables.
  std::array<Exponent, 3> m{};
  /// Variable renaming applied before the checks (old index -> new index).
  std::vector<std::size_t> permutation;
  std::int64_t n = 0;
  std::int64_t k = 0;
  /// Preconditions ("zero_dimensional", "borel", "necessary", "spanned")
  /// and conditions "a".."e", "a'".."e'", "a''".."e''".
  std::map<std::string, ConditionResult> conditions;
  /// Variable pairs (original indices) whose transposition fixes the ideal.
  std::vector<std::pair<std::size_t, std::size_t>> symmetric_swaps;
  /// Generators strictly inside conv(I).
  std::vector<ExponentVector> interior_generators;
  /// Searches run for (c)/(c')/(c''), keyed "<side>/<family>" with family
  /// one of borel, all, borel-any-colength, all-any-colength.
  std::map<std::string, BoundaryMaximum> boundary_maxima;
};

/// Mechanical check of the three-type hull criterion for a zero-dimensional
/// ideal in three variables. Maximality (c) compares against Borel-fixed
/// ideals with the same pure powers and colength; the unrestricted maximum
/// is reported alongside. Throws InvalidArgument when N != 3 and
/// NotZeroDimensional.
TypeReport classify_type(const MonomialIdeal& ideal, const ClassifyOptions& options = {});

std::string_view side_name(Side side) noexcept;

}  // namespace hilbtan
