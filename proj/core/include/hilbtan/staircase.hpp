#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hilbtan/ideal.hpp"

namespace hilbtan {

/// Default bound on the colength of materialized staircases.
inline constexpr std::size_t kDefaultColengthCap = 512;

/// The standard monomials of a zero-dimensional monomial ideal: a finite
/// divisibility-closed set whose size is the colength.
class Staircase {
 public:
  /// Throws NotZeroDimensional, or CapExceeded when more than `cap`
  /// standard monomials exist.
  explicit Staircase(const MonomialIdeal& ideal,
                     std::size_t cap = kDefaultColengthCap);

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return members_.size(); }
  /// Members in canonical order.
  const std::vector<ExponentVector>& members() const noexcept { return members_; }
  /// Pure powers of the ideal; every member is strictly below them.
  const std::vector<Exponent>& bounds() const noexcept { return bounds_; }

  /// Index into members() of `m`, or -1 when `m` is not a standard monomial
  /// (this includes vectors with negative entries).
  std::ptrdiff_t find(std::span<const Exponent> m) const noexcept;
  bool contains(std::span<const Exponent> m) const noexcept { return find(m) >= 0; }
  bool contains(const ExponentVector& m) const noexcept { return find(m.values()) >= 0; }

 private:
  std::size_t nvars_;
  std::vector<Exponent> bounds_;
  std::vector<ExponentVector> members_;
  // Dense index over the bounding box when it is small; otherwise lookups
  // binary-search the canonically sorted members.
  std::vector<std::int64_t> strides_;
  std::vector<std::int32_t> grid_;
  bool dense_ = false;
};

inline Staircase staircase(const MonomialIdeal& ideal,
                           std::size_t cap = kDefaultColengthCap) {
  return Staircase(ideal, cap);
}

/// |staircase(I)|. Throws like Staircase.
std::size_t colength(const MonomialIdeal& ideal,
                     std::size_t cap = kDefaultColengthCap);

}  // namespace hilbtan
