#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hilbtan/ideal.hpp"
#include "hilbtan/staircase.hpp"

namespace hilbtan {

/// A first syzygy of the Taylor presentation: generators i < j and their lcm.
struct SyzygyPair {
  std::size_t i;
  std::size_t j;
  ExponentVector lcm;

  friend bool operator==(const SyzygyPair&, const SyzygyPair&) = default;
};

/// All C(g, 2) pairs in (i, j) lexicographic order.
std::vector<SyzygyPair> pairwise_syzygies(const MonomialIdeal& ideal);

/// A Z^N weight: homomorphisms of weight d send x^g to a multiple of x^(g+d).
using Weight = std::vector<std::int32_t>;

struct TangentResult {
  std::int64_t dimension = 0;
  /// Nonzero graded pieces of Hom(I, R/I), present when requested.
  std::optional<std::map<Weight, std::int64_t>> per_weight;
};

struct TangentOptions {
  std::size_t colength_cap = kDefaultColengthCap;
  bool per_weight = false;
};

/// dim Hom_R(I, R/I), the tangent space to the Hilbert scheme of points at
/// I. Each weight contributes (#unknowns - rank) of a small integer system,
/// rank taken by fraction-free elimination. Throws NotZeroDimensional or
/// CapExceeded.
TangentResult tangent_dimension(const MonomialIdeal& ideal, const TangentOptions& options = {});

/// Same overload for callers that already hold the staircase.
TangentResult tangent_dimension(const MonomialIdeal& ideal, const Staircase& standard,
                                bool per_weight = false);

/// Default colength cap of the dense oracle.
inline constexpr std::size_t kDenseOracleCap = 20;

/// Independent oracle: the whole Hom system as one matrix over the
/// rationals (unknowns = coefficient of every standard monomial in the image
/// of every generator), no weight decomposition, Gaussian elimination in GMP
/// rationals.
std::int64_t tangent_dimension_dense(const MonomialIdeal& ideal,
                                     std::size_t colength_cap = kDenseOracleCap);

}  // namespace hilbtan
