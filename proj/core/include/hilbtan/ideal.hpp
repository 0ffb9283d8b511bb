#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hilbtan {

/// Exponents are machine integers bounded by 2^31 - 1.
using Exponent = std::int32_t;

/// A point of N^N: the exponent of a monomial. Every entry is nonnegative.
class ExponentVector {
 public:
  ExponentVector() = default;
  /// The zero vector in `nvars` variables.
  explicit ExponentVector(std::size_t nvars) : e_(nvars, 0) {}
  ExponentVector(std::initializer_list<Exponent> e);
  explicit ExponentVector(std::vector<Exponent> e);

  std::size_t size() const noexcept { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  std::span<const Exponent> values() const noexcept { return e_; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  /// Total degree.
  std::int64_t degree() const noexcept;
  /// Number of strictly positive entries.
  std::size_t support_size() const noexcept;
  /// True iff this monomial divides `other` (componentwise <=).
  bool divides(const ExponentVector& other) const noexcept;

  /// Copy with entry `i` replaced by `value` (which must be >= 0).
  ExponentVector with(std::size_t i, Exponent value) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  /// Plain lexicographic comparison of the raw entries (container order);
  /// see `canonical_less` for the generator order.
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ <=> b.e_;
  }

 private:
  std::vector<Exponent> e_;
};

/// Componentwise maximum.
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);

/// Canonical generator order: by total degree, and within one degree
/// lexicographically with x1 > x2 > ... > xN listed from the largest
/// monomial down, e.g. x^2, x*y, y^2, x*z, ...
bool canonical_less(const ExponentVector& a, const ExponentVector& b) noexcept;

/// A monomial ideal held by its canonical minimal generating set: an
/// antichain under divisibility, duplicate free, sorted by `canonical_less`.
class MonomialIdeal {
 public:
  /// Minimalizes and canonicalizes `generators`. Throws InvalidArgument on
  /// an empty list, nvars == 0, or a generator of the wrong length.
  MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> generators);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  /// True iff the monomial with exponent `m` lies in the ideal.
  bool contains(const ExponentVector& m) const noexcept;
  bool contains(std::span<const Exponent> m) const noexcept;

  /// Exponent of the pure power generator x_var^e, if one exists.
  std::optional<Exponent> pure_power(std::size_t var) const noexcept;
  /// All pure powers (m_1, ..., m_N); throws NotZeroDimensional.
  std::vector<Exponent> pure_powers() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<ExponentVector> gens_;
};

/// Deletes every vector divisible by another one and sorts canonically.
MonomialIdeal minimalize(std::span<const ExponentVector> generators);

/// Parses "x^2,y^2,z^4,x*y,x*z^2,y*z^2". Variables are x1..xN; for
/// N <= 3 the letters x, y, z (as many as there are variables) work too.
/// Factors may be joined by '*' or juxtaposed; whitespace is ignored.
MonomialIdeal parse_ideal(std::string_view text, std::size_t nvars);

/// Inverse of parse_ideal: comma separated canonical generators, written
/// with x, y, z when N <= 3 and x1..xN otherwise.
std::string render(const MonomialIdeal& ideal);
std::string render_monomial(const ExponentVector& m);

bool is_zero_dimensional(const MonomialIdeal& ideal) noexcept;

/// Characteristic-0 Borel criterion for the order x1 > x2 > ... > xN: for
/// every generator g with g[j] > 0 and every i < j, g - e_j + e_i lies in
/// the ideal.
bool is_borel_fixed(const MonomialIdeal& ideal) noexcept;

/// m^k: all monomials of degree k in N variables.
MonomialIdeal power_ideal(std::size_t nvars, Exponent k);

/// Generators involving at least two distinct variables, canonical order.
std::vector<ExponentVector> mixed_generators(const MonomialIdeal& ideal);

/// Renames variable v to perm[v] (0-based). Throws InvalidArgument unless
/// perm is a bijection of {0, ..., N-1}.
MonomialIdeal permute_variables(const MonomialIdeal& ideal,
                                std::span<const std::size_t> perm);

/// The transposition of variables i and j.
std::vector<std::size_t> swap_permutation(std::size_t nvars, std::size_t i,
                                          std::size_t j);

/// Binomial coefficient for small nonnegative arguments (0 when k > n).
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace hilbtan
