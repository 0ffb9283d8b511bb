#include "hilbtan/families.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "hilbtan/error.hpp"

namespace hilbtan {

namespace {

using Gens = std::vector<ExponentVector>;

ExponentVector mono(Exponent a, Exponent b, Exponent c) { return ExponentVector{a, b, c}; }

/// Mixed monomials of degree d in x, y, z.
Gens mixed_of_degree(Exponent d) {
  Gens out;
  for (Exponent a = 0; a <= d; ++a) {
    for (Exponent b = 0; a + b <= d; ++b) {
      auto m = mono(a, b, d - a - b);
      if (m.support_size() >= 2) out.push_back(std::move(m));
    }
  }
  return out;
}

void remove(Gens& gens, const ExponentVector& m) {
  gens.erase(std::remove(gens.begin(), gens.end(), m), gens.end());
}

void replace(Gens& gens, const ExponentVector& from, ExponentVector to) {
  remove(gens, from);
  gens.push_back(std::move(to));
}

MonomialIdeal build(Gens gens, Exponent px, Exponent py, Exponent pz) {
  gens.push_back(mono(px, 0, 0));
  gens.push_back(mono(0, py, 0));
  gens.push_back(mono(0, 0, pz));
  return minimalize(gens);
}

std::int64_t tetra(std::int64_t k) { return binomial(k + 2, 3); }

std::int64_t t_power(std::int64_t k) { return binomial(k + 1, 2) * binomial(k + 2, 2); }

/// T(m^k) - 3 colength(m^k): the offset shared by the closed formulas.
std::int64_t excess(std::int64_t k) { return t_power(k) - 3 * tetra(k); }

}  // namespace

std::string_view family_name(FamilyTag tag) noexcept {
  switch (tag) {
    case FamilyTag::MK: return "MK";
    case FamilyTag::T1: return "T1";
    case FamilyTag::T2: return "T2";
    case FamilyTag::T3: return "T3";
    case FamilyTag::T4: return "T4";
    case FamilyTag::T5: return "T5";
    case FamilyTag::T6: return "T6";
    case FamilyTag::T7: return "T7";
    case FamilyTag::STAR: return "STAR";
    case FamilyTag::DOUBLESTAR: return "DOUBLESTAR";
  }
  return "?";
}

std::optional<FamilyTag> parse_family_tag(std::string_view name) {
  if (name == "*") return FamilyTag::STAR;
  if (name == "**") return FamilyTag::DOUBLESTAR;
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (FamilyTag tag : kAllFamilyTags) {
    if (family_name(tag) == upper) return tag;
  }
  return std::nullopt;
}

std::int64_t family_min_param(FamilyTag tag) noexcept {
  switch (tag) {
    case FamilyTag::T3:
    case FamilyTag::DOUBLESTAR: return 3;
    case FamilyTag::T4:
    case FamilyTag::T6: return 2;
    default: return 1;
  }
}

std::string_view family_claimed_type(FamilyTag tag) noexcept {
  switch (tag) {
    case FamilyTag::T1:
    case FamilyTag::T2:
    case FamilyTag::T4: return "I(a)(ii)";
    case FamilyTag::T5: return "I(a)(iii)";
    case FamilyTag::T3: return "III(a'')(i)";
    case FamilyTag::T6: return "III(a'')(ii)";
    case FamilyTag::T7: return "II";
    default: return "none";
  }
}

MonomialIdeal family_ideal(const FamilyKind& kind) {
  if (kind.param < family_min_param(kind.tag) || kind.param > 1000) {
    throw InvalidArgument("parameter " + std::to_string(kind.param) + " is out of range for family " +
                          std::string(family_name(kind.tag)));
  }
  const auto k = static_cast<Exponent>(kind.param);
  switch (kind.tag) {
    case FamilyTag::MK: return power_ideal(3, k);
    case FamilyTag::T1: return build(mixed_of_degree(k), k, k, k + 1);
    case FamilyTag::T2: return build(mixed_of_degree(k), k, k, k + 2);
    case FamilyTag::T3:
    case FamilyTag::T4: {
      Gens gens = mixed_of_degree(k);
      replace(gens, mono(1, 0, k - 1), mono(1, 0, k));
      replace(gens, mono(0, 1, k - 1), mono(0, 1, k));
      return build(std::move(gens), k, k, kind.tag == FamilyTag::T3 ? k + 1 : k + 2);
    }
    case FamilyTag::T5: {
      Gens gens = mixed_of_degree(k);
      for (Exponent i = 1; i < k; ++i) remove(gens, mono(0, i, k - i));
      for (Exponent i = 1; i <= k; ++i) gens.push_back(mono(0, i, k + 1 - i));
      return build(std::move(gens), k, k + 1, k + 1);
    }
    case FamilyTag::T6: {
      Gens gens;
      for (auto& m : mixed_of_degree(k)) {
        if (m[0] > 1) gens.push_back(std::move(m));
      }
      for (auto& m : mixed_of_degree(k + 1)) {
        if (m[0] <= 1) gens.push_back(std::move(m));
      }
      return build(std::move(gens), k, k + 1, k + 1);
    }
    case FamilyTag::T7: {
      Gens gens = mixed_of_degree(k + 1);
      remove(gens, mono(k, 1, 0));
      remove(gens, mono(k, 0, 1));
      return build(std::move(gens), k, k + 1, k + 1);
    }
    case FamilyTag::STAR: {
      const Exponent d = 2 * k + 1;
      Gens gens = mixed_of_degree(d);
      replace(gens, mono(1, 0, d - 1), mono(1, 0, d));
      replace(gens, mono(0, 1, d - 1), mono(0, 1, d));
      return build(std::move(gens), d, d, d + 3);
    }
    case FamilyTag::DOUBLESTAR: {
      // The replaced x-term is xz^(k-1); the y,z-part of degree k moves up
      // to degree k+1 (mixed monomials only, the pure powers are listed).
      Gens gens = mixed_of_degree(k);
      replace(gens, mono(1, 0, k - 1), mono(1, 0, k));
      for (Exponent i = 1; i < k; ++i) remove(gens, mono(0, i, k - i));
      for (Exponent i = 1; i <= k; ++i) gens.push_back(mono(0, i, k + 1 - i));
      return build(std::move(gens), k, k + 1, k + 2);
    }
  }
  throw InvalidArgument("unknown family");
}

std::int64_t predicted_colength(const FamilyKind& kind) {
  const std::int64_t k = kind.param;
  switch (kind.tag) {
    case FamilyTag::MK: return tetra(k);
    case FamilyTag::T1: return tetra(k) + 1;
    case FamilyTag::T2: return tetra(k) + 2;
    case FamilyTag::T3: return tetra(k) + 3;
    case FamilyTag::T4: return tetra(k) + 4;
    case FamilyTag::T5: return tetra(k) + k + 1;
    case FamilyTag::T6: return tetra(k) + 2 * k + 1;
    case FamilyTag::T7: return tetra(k + 1) - 1;
    case FamilyTag::STAR: return tetra(2 * k + 1) + 5;
    case FamilyTag::DOUBLESTAR: return tetra(k) + k + 3;
  }
  return 0;
}

std::int64_t predicted_tangent(const FamilyKind& kind) {
  const std::int64_t k = kind.param;
  const std::int64_t c3 = 3 * predicted_colength(kind);
  switch (kind.tag) {
    case FamilyTag::MK: return t_power(k);
    case FamilyTag::T1: return t_power(k) + 3;
    case FamilyTag::T2: return t_power(k) + 6;
    case FamilyTag::T3: return c3 + excess(k);
    case FamilyTag::T4: return c3 + excess(k) + 6;
    case FamilyTag::T5: return c3 + excess(k) + k * (k - 1);
    case FamilyTag::T6: return c3 + excess(k) + 4 * binomial(k, 2) + 6;
    case FamilyTag::T7: return c3 + excess(k + 1) - k * (k + 5);
    case FamilyTag::STAR: return c3 + excess(2 * k + 1) + 6;
    case FamilyTag::DOUBLESTAR: return c3 + excess(k) + binomial(k + 2, 2) + binomial(k - 2, 2);
  }
  return 0;
}

MonomialIdeal fat_point_ideal(const std::array<Exponent, 3>& g, Exponent k) {
  if (k < 1 || g[0] < 1 || g[1] < 1 || g[2] < 1) {
    throw InvalidArgument("fat point needs positive degrees and power");
  }
  Gens gens;
  for (Exponent a = 0; a <= k; ++a) {
    for (Exponent b = 0; a + b <= k; ++b) {
      gens.push_back(mono(a * g[0], b * g[1], (k - a - b) * g[2]));
    }
  }
  return minimalize(gens);
}

std::int64_t fat_point_colength(const std::array<Exponent, 3>& g, std::int64_t k) {
  return std::int64_t{g[0]} * g[1] * g[2] * tetra(k);
}

std::int64_t fat_point_tangent(const std::array<Exponent, 3>& g, std::int64_t k) {
  return std::int64_t{g[0]} * g[1] * g[2] * binomial(k + 1, 2) * binomial(k + 2, 2);
}

}  // namespace hilbtan
