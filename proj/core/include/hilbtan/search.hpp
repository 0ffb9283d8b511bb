#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hilbtan/ideal.hpp"

namespace hilbtan {

/// Default and hard limits on the colength of exhaustive scans.
inline constexpr std::int64_t kDefaultSearchCap = 30;
inline constexpr std::int64_t kHardSearchCap = 40;

/// Number of plane partitions of n, from the generating function
/// prod (1 - q^k)^(-k) via the divisor-sum recurrence. No ideals are built.
/// Throws InvalidArgument outside 0 <= n <= 100.
std::uint64_t count_ideals(std::int64_t n);

/// Every zero-dimensional monomial ideal of colength n in x, y, z, exactly
/// once, in a fixed order: staircases are plane partitions h[i][j] (height
/// of the column over x^i y^j) filled row by row with the larger heights
/// first. `visit` may return false to stop early. Throws InvalidArgument
/// when n < 1 and CapExceeded when n > cap (itself at most kHardSearchCap).
void enumerate_ideals(std::int64_t n, const std::function<bool(const MonomialIdeal&)>& visit,
                      std::int64_t cap = kDefaultSearchCap);

/// Collecting form of enumerate_ideals.
std::vector<MonomialIdeal> enumerate_ideals(std::int64_t n, std::int64_t cap = kDefaultSearchCap);

struct SearchOptions {
  /// Only Borel-fixed ideals (x > y > z), filtered before computing T.
  bool borel_only = false;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t workers = 1;
  /// Directory holding the JSONL cache, replayed before and appended during
  /// the scan.
  std::optional<std::string> cache_dir;
  std::int64_t cap = kDefaultSearchCap;
};

struct SearchResult {
  std::int64_t n = 0;
  std::int64_t max_tangent = -1;
  /// All maximizers, canonically sorted.
  std::vector<MonomialIdeal> argmax;
  std::uint64_t ideals_scanned = 0;
  /// Scanned ideals whose T came from the cache.
  std::uint64_t cache_hits = 0;
  bool borel_only = false;
  std::int64_t elapsed_ms = 0;
};

/// Cache file inside a cache directory.
std::string cache_file(const std::string& dir);

/// Maximum tangent dimension over all (or all Borel-fixed) monomial ideals
/// of colength n, with every maximizer. The subtrees below each first row
/// are independent tasks; their results are merged by (max, union of
/// argmax), so the output does not depend on `workers`. Throws
/// InvalidArgument, CapExceeded, or Error on an unwritable cache.
SearchResult max_tangent(std::int64_t n, const SearchOptions& options = {});

/// One row of the colength table.
struct TableFixture {
  std::int64_t n = 0;
  /// The row as printed, one string per listed ideal; empty for gap rows.
  std::vector<std::string> literal;
  /// The same ideals as parseable generator lists ((x,y,z)^k written out);
  /// they differ from `literal` in content only where `note` says so.
  std::vector<std::string> corrected;
  /// "", "*" or "**": main hull criterion, or one of the two outside
  /// families.
  std::string marker;
  /// The row says no example satisfies any of the criteria.
  bool gap = false;
  /// What was corrected and why; empty when nothing was.
  std::string note;
};

/// The colength table for n = 1..40.
const std::vector<TableFixture>& table_fixtures();

struct TableRow {
  std::int64_t n = 0;
  std::optional<TableFixture> fixture;
  std::int64_t computed_max = -1;
  std::vector<MonomialIdeal> argmax;
  /// classify_type label of each argmax ideal, in argmax order.
  std::vector<std::string> type_labels;
  /// Every listed ideal is a maximizer (gap rows: no maximizer has a type).
  bool match = false;
  std::string detail;
  std::int64_t elapsed_ms = 0;
};

/// Scans n = 1..n_max and compares with the table. Throws CapExceeded when
/// n_max > options.cap.
std::vector<TableRow> reproduce_table(std::int64_t n_max, const SearchOptions& options = {});

}  // namespace hilbtan
