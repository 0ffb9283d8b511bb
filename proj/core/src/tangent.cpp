#include "hilbtan/tangent.hpp"

#include <algorithm>
#include <numeric>

#include <gmpxx.h>

#include "hilbtan/bareiss.hpp"
#include "hilbtan/error.hpp"

namespace hilbtan {

std::vector<SyzygyPair> pairwise_syzygies(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  std::vector<SyzygyPair> pairs;
  pairs.reserve(gens.size() * (gens.size() - 1) / 2);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      pairs.push_back({i, j, lcm(gens[i], gens[j])});
    }
  }
  return pairs;
}

TangentResult tangent_dimension(const MonomialIdeal& ideal, const TangentOptions& options) {
  if (!is_zero_dimensional(ideal)) throw NotZeroDimensional();
  const Staircase standard(ideal, options.colength_cap);
  return tangent_dimension(ideal, standard, options.per_weight);
}

TangentResult tangent_dimension(const MonomialIdeal& ideal, const Staircase& standard,
                                bool per_weight) {
  if (!is_zero_dimensional(ideal)) throw NotZeroDimensional();
  const std::size_t nv = ideal.nvars();
  const std::size_t ng = ideal.size();
  const auto& gens = ideal.generators();
  const auto pairs = pairwise_syzygies(ideal);

  // Candidate weights are s - g_i over standard s and generators i; any other
  // weight has no unknowns. weights[e*nv..] holds the weight of entry e.
  const std::size_t entries = standard.size() * ng;
  std::vector<std::int32_t> weights(entries * nv);
  std::vector<std::uint32_t> owner(entries);
  {
    std::size_t e = 0;
    for (const auto& s : standard.members()) {
      for (std::size_t i = 0; i < ng; ++i, ++e) {
        for (std::size_t v = 0; v < nv; ++v) weights[e * nv + v] = s[v] - gens[i][v];
        owner[e] = static_cast<std::uint32_t>(i);
      }
    }
  }
  std::vector<std::uint32_t> order(entries);
  std::iota(order.begin(), order.end(), 0u);
  auto weight_less = [&](std::uint32_t a, std::uint32_t b) {
    const auto* wa = &weights[a * nv];
    const auto* wb = &weights[b * nv];
    for (std::size_t v = 0; v < nv; ++v) {
      if (wa[v] != wb[v]) return wa[v] < wb[v];
    }
    return owner[a] < owner[b];
  };
  std::sort(order.begin(), order.end(), weight_less);

  TangentResult result;
  if (per_weight) result.per_weight.emplace();

  std::vector<std::int32_t> column(ng, -1);
  std::vector<std::int32_t> target(nv);
  std::vector<std::pair<std::int32_t, std::int32_t>> rows;
  for (std::size_t begin = 0; begin < entries;) {
    const std::int32_t* d = &weights[order[begin] * nv];
    std::size_t end = begin;
    std::fill(column.begin(), column.end(), -1);
    std::int32_t unknowns = 0;
    while (end < entries && std::equal(d, d + nv, &weights[order[end] * nv])) {
      column[owner[order[end]]] = unknowns++;
      ++end;
    }

    // (lcm/g_i) phi(g_i) - (lcm/g_j) phi(g_j) has the single monomial lcm + d;
    // it constrains only when that monomial is standard.
    rows.clear();
    for (const auto& p : pairs) {
      const std::int32_t ci = column[p.i];
      const std::int32_t cj = column[p.j];
      if (ci < 0 && cj < 0) continue;
      for (std::size_t v = 0; v < nv; ++v) target[v] = p.lcm[v] + d[v];
      if (!standard.contains(std::span<const std::int32_t>(target))) continue;
      rows.emplace_back(ci, cj);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    std::size_t rank = 0;
    if (!rows.empty()) {
      IntMatrix<std::int64_t> system(rows.size(), static_cast<std::size_t>(unknowns));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].first >= 0) system(r, static_cast<std::size_t>(rows[r].first)) = 1;
        if (rows[r].second >= 0) system(r, static_cast<std::size_t>(rows[r].second)) = -1;
      }
      rank = bareiss_rank(system);
    }
    const std::int64_t contribution = unknowns - static_cast<std::int64_t>(rank);
    result.dimension += contribution;
    if (per_weight && contribution > 0) {
      result.per_weight->emplace(Weight(d, d + nv), contribution);
    }
    begin = end;
  }
  return result;
}

namespace {

using RationalRow = std::vector<std::pair<std::size_t, mpq_class>>;

/// Reduces `row` against the pivot rows (keyed by leading column); returns
/// true if a nonzero remainder was added as a new pivot.
bool insert_row(std::map<std::size_t, RationalRow>& pivots, RationalRow row) {
  while (!row.empty()) {
    auto it = pivots.find(row.front().first);
    if (it == pivots.end()) {
      pivots.emplace(row.front().first, std::move(row));
      return true;
    }
    const RationalRow& pivot = it->second;
    const mpq_class factor = row.front().second / pivot.front().second;
    RationalRow next;
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < row.size() || b < pivot.size()) {
      if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
        next.push_back(row[a++]);
      } else if (a == row.size() || pivot[b].first < row[a].first) {
        next.emplace_back(pivot[b].first, -factor * pivot[b].second);
        ++b;
      } else {
        mpq_class value = row[a].second - factor * pivot[b].second;
        if (value != 0) next.emplace_back(row[a].first, std::move(value));
        ++a;
        ++b;
      }
    }
    row = std::move(next);
  }
  return false;
}

}  // namespace

std::int64_t tangent_dimension_dense(const MonomialIdeal& ideal, std::size_t colength_cap) {
  if (!is_zero_dimensional(ideal)) throw NotZeroDimensional();
  const Staircase standard(ideal, colength_cap);
  const std::size_t nv = ideal.nvars();
  const std::size_t ng = ideal.size();
  const std::size_t n = standard.size();
  const auto& gens = ideal.generators();
  const auto pairs = pairwise_syzygies(ideal);

  // Unknown (i, s): coefficient of x^s in phi(x^{g_i}); column i*n + s.
  // Equation (pair p, standard t): row p*n + t.
  const std::size_t cols = ng * n;
  const std::size_t rows = pairs.size() * n;
  std::vector<std::int8_t> matrix(rows * cols, 0);
  std::vector<std::int32_t> image(nv);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& pair = pairs[p];
    for (int side = 0; side < 2; ++side) {
      const std::size_t gi = side == 0 ? pair.i : pair.j;
      const std::int8_t sign = side == 0 ? 1 : -1;
      for (std::size_t s = 0; s < n; ++s) {
        const auto& mono = standard.members()[s];
        for (std::size_t v = 0; v < nv; ++v) image[v] = mono[v] + pair.lcm[v] - gens[gi][v];
        const std::ptrdiff_t t = standard.find(image);
        if (t < 0) continue;
        matrix[(p * n + static_cast<std::size_t>(t)) * cols + gi * n + s] += sign;
      }
    }
  }

  std::map<std::size_t, RationalRow> pivots;
  for (std::size_t r = 0; r < rows; ++r) {
    RationalRow row;
    for (std::size_t c = 0; c < cols; ++c) {
      if (const auto value = matrix[r * cols + c]; value != 0) row.emplace_back(c, mpq_class(value));
    }
    insert_row(pivots, std::move(row));
  }
  return static_cast<std::int64_t>(cols) - static_cast<std::int64_t>(pivots.size());
}

}  // namespace hilbtan
