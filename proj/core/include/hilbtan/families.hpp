#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hilbtan/ideal.hpp"

namespace hilbtan {

/// The explicit three-variable families. MK is m^k; T1..T7 are the seven
/// near-tetrahedral colength patterns; STAR and DOUBLESTAR are the two
/// families that sit outside the hull conditions.
enum class FamilyTag { MK, T1, T2, T3, T4, T5, T6, T7, STAR, DOUBLESTAR };

inline constexpr std::array<FamilyTag, 10> kAllFamilyTags = {
    FamilyTag::MK, FamilyTag::T1, FamilyTag::T2, FamilyTag::T3,   FamilyTag::T4,
    FamilyTag::T5, FamilyTag::T6, FamilyTag::T7, FamilyTag::STAR, FamilyTag::DOUBLESTAR};

struct FamilyKind {
  FamilyTag tag;
  /// k for MK and T1..T7 and DOUBLESTAR, j for STAR.
  std::int64_t param;
};

std::string_view family_name(FamilyTag tag) noexcept;
/// Case-insensitive; also accepts "*" and "**".
std::optional<FamilyTag> parse_family_tag(std::string_view name);

/// Smallest parameter for which the construction matches its description.
std::int64_t family_min_param(FamilyTag tag) noexcept;

/// Hull-condition type the family is claimed to satisfy, e.g. "I(a)(ii)";
/// "none" for MK, STAR and DOUBLESTAR.
std::string_view family_claimed_type(FamilyTag tag) noexcept;

/// The ideal described by `kind`, built from the mixed generators of m^k by
/// the stated removals and replacements, then minimalized. Throws
/// InvalidArgument when the parameter is below family_min_param.
MonomialIdeal family_ideal(const FamilyKind& kind);

/// Closed-form colength of family_ideal(kind).
std::int64_t predicted_colength(const FamilyKind& kind);
/// Closed-form tangent dimension of family_ideal(kind).
std::int64_t predicted_tangent(const FamilyKind& kind);

/// (x^g1, y^g2, z^g3)^k.
MonomialIdeal fat_point_ideal(const std::array<Exponent, 3>& g, Exponent k);
/// g1 g2 g3 C(k+2, 3).
std::int64_t fat_point_colength(const std::array<Exponent, 3>& g, std::int64_t k);
/// g1 g2 g3 C(k+1, 2) C(k+2, 2).
std::int64_t fat_point_tangent(const std::array<Exponent, 3>& g, std::int64_t k);

}  // namespace hilbtan
