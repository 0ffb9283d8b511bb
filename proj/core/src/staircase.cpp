#include "hilbtan/staircase.hpp"

#include <algorithm>

#include "hilbtan/error.hpp"

namespace hilbtan {

namespace {

constexpr std::int64_t kDenseVolumeLimit = std::int64_t{1} << 22;

}  // namespace

Staircase::Staircase(const MonomialIdeal& ideal, std::size_t cap)
    : nvars_(ideal.nvars()), bounds_(ideal.pure_powers()) {
  // Standard monomials are down-closed, so fixing coordinates one at a time
  // and stopping at the first monomial in the ideal visits all of them.
  std::vector<Exponent> e(nvars_, 0);
  auto recurse = [&](auto&& self, std::size_t v) -> void {
    for (e[v] = 0; !ideal.contains(std::span<const Exponent>(e)); ++e[v]) {
      if (v + 1 == nvars_) {
        if (members_.size() == cap) {
          throw CapExceeded("colength exceeds cap " + std::to_string(cap));
        }
        members_.emplace_back(e);
      } else {
        self(self, v + 1);
      }
    }
    e[v] = 0;
  };
  recurse(recurse, 0);
  std::sort(members_.begin(), members_.end(), canonical_less);

  std::int64_t volume = 1;
  strides_.resize(nvars_);
  dense_ = true;
  for (std::size_t v = nvars_; v-- > 0;) {
    strides_[v] = volume;
    if (volume > kDenseVolumeLimit / bounds_[v]) {
      dense_ = false;
      break;
    }
    volume *= bounds_[v];
  }
  if (dense_) {
    grid_.assign(static_cast<std::size_t>(volume), -1);
    for (std::size_t i = 0; i < members_.size(); ++i) {
      std::int64_t k = 0;
      for (std::size_t v = 0; v < nvars_; ++v) k += members_[i][v] * strides_[v];
      grid_[static_cast<std::size_t>(k)] = static_cast<std::int32_t>(i);
    }
  }
}

std::ptrdiff_t Staircase::find(std::span<const Exponent> m) const noexcept {
  if (m.size() != nvars_) return -1;
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (m[v] < 0 || m[v] >= bounds_[v]) return -1;
  }
  if (dense_) {
    std::int64_t k = 0;
    for (std::size_t v = 0; v < nvars_; ++v) k += m[v] * strides_[v];
    return grid_[static_cast<std::size_t>(k)];
  }
  const ExponentVector probe(std::vector<Exponent>(m.begin(), m.end()));
  auto it = std::lower_bound(members_.begin(), members_.end(), probe, canonical_less);
  if (it == members_.end() || *it != probe) return -1;
  return it - members_.begin();
}

std::size_t colength(const MonomialIdeal& ideal, std::size_t cap) {
  return Staircase(ideal, cap).size();
}

}  // namespace hilbtan
