#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hilbtan {

/// Row-major integer matrix used by the exact rank routines.
template <typename Int>
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void swap_rows(std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(r, c), (*this)(s, c));
  }

  template <typename Other>
  IntMatrix<Other> convert() const {
    IntMatrix<Other> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = Other((*this)(r, c));
    return out;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> a_;
};

namespace detail {

inline bool checked_step(std::int64_t pivot, std::int64_t x, std::int64_t factor,
                         std::int64_t y, std::int64_t divisor, std::int64_t& out) {
  std::int64_t p = 0;
  std::int64_t q = 0;
  if (__builtin_mul_overflow(pivot, x, &p)) return false;
  if (__builtin_mul_overflow(factor, y, &q)) return false;
  std::int64_t d = 0;
  if (__builtin_sub_overflow(p, q, &d)) return false;
  out = d / divisor;
  return true;
}

inline bool checked_step(const mpz_class& pivot, const mpz_class& x, const mpz_class& factor,
                         const mpz_class& y, const mpz_class& divisor, mpz_class& out) {
  out = pivot * x - factor * y;
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), divisor.get_mpz_t());
  return true;
}

}  // namespace detail

/// Rank by fraction-free (Bareiss) elimination to row echelon form, in
/// place. Every intermediate entry is a minor of the input, so each division
/// is exact. Returns nullopt if a machine-integer step overflows.
template <typename Int>
std::optional<std::size_t> bareiss_rank_in_place(IntMatrix<Int>& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Int previous(1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && a(pivot_row, c) == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    a.swap_rows(rank, pivot_row);
    const Int pivot = a(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Int factor = a(r, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int value;
        if (!detail::checked_step(pivot, a(r, j), factor, a(rank, j), previous, value)) {
          return std::nullopt;
        }
        a(r, j) = value;
      }
      a(r, c) = 0;
    }
    previous = pivot;
    ++rank;
  }
  return rank;
}

/// Exact rank of an integer matrix: machine integers first, GMP integers if
/// an intermediate value overflows.
inline std::size_t bareiss_rank(const IntMatrix<std::int64_t>& a) {
  IntMatrix<std::int64_t> work = a;
  if (auto r = bareiss_rank_in_place(work)) return *r;
  IntMatrix<mpz_class> wide = a.convert<mpz_class>();
  return *bareiss_rank_in_place(wide);
}

}  // namespace hilbtan
