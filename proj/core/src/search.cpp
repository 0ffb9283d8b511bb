#include "hilbtan/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "hilbtan/conjecture.hpp"
#include "hilbtan/error.hpp"
#include "hilbtan/tangent.hpp"

namespace hilbtan {

std::uint64_t count_ideals(std::int64_t n) {
  if (n < 0 || n > 100) throw InvalidArgument("count_ideals needs 0 <= n <= 100");
  // n pp(n) = sum_{k=1..n} sigma_2(k) pp(n-k), sigma_2(k) = sum of d^2 over d | k.
  std::vector<std::uint64_t> sigma(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t d = 1; d <= n; ++d)
    for (std::int64_t k = d; k <= n; k += d) sigma[static_cast<std::size_t>(k)] += static_cast<std::uint64_t>(d * d);
  std::vector<std::uint64_t> pp(static_cast<std::size_t>(n) + 1, 0);
  pp[0] = 1;
  for (std::int64_t m = 1; m <= n; ++m) {
    std::uint64_t acc = 0;
    for (std::int64_t k = 1; k <= m; ++k) acc += sigma[static_cast<std::size_t>(k)] * pp[static_cast<std::size_t>(m - k)];
    pp[static_cast<std::size_t>(m)] = acc / static_cast<std::uint64_t>(m);
  }
  return pp[static_cast<std::size_t>(n)];
}

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

void check_colength(std::int64_t n, std::int64_t cap) {
  if (cap < 1 || cap > kHardSearchCap) {
    throw InvalidArgument("search cap must lie in 1.." + std::to_string(kHardSearchCap));
  }
  if (n < 1) throw InvalidArgument("colength must be positive");
  if (n > cap) {
    throw CapExceeded("colength " + std::to_string(n) + " exceeds the search cap " + std::to_string(cap));
  }
}

std::int64_t height(const Rows& h, std::size_t i, std::size_t j) {
  return i < h.size() && j < h[i].size() ? h[i][j] : 0;
}

/// The generators x^i y^j z^c are the cells just above a column (c =
/// h[i][j]) that are not blocked by a taller neighbour towards the origin.
MonomialIdeal ideal_of_heights(const Rows& h) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i <= h.size(); ++i) {
    const std::size_t width = i < h.size() ? h[i].size() : 0;
    for (std::size_t j = 0; j <= width; ++j) {
      const std::int64_t c = height(h, i, j);
      if (i > 0 && height(h, i - 1, j) <= c) continue;
      if (j > 0 && height(h, i, j - 1) <= c) continue;
      gens.push_back(ExponentVector{static_cast<Exponent>(i), static_cast<Exponent>(j), static_cast<Exponent>(c)});
    }
  }
  return MonomialIdeal(3, std::move(gens));
}

/// Row-by-row filling of plane partitions; each entry is bounded by its
/// neighbours above and to the left, larger entries are tried first.
class PlanePartitionWalk {
 public:
  explicit PlanePartitionWalk(const std::function<bool(const Rows&)>& emit) : emit_(emit) {}

  /// Completes `rows` (whose last row is finished) with `rest` more cells.
  bool complete(Rows& rows, std::int64_t rest) {
    if (rest == 0) return emit_(rows);
    rows.emplace_back();
    const bool go_on = fill(rows, rest);
    rows.pop_back();
    return go_on;
  }

  /// All first rows of size at most n, in walk order, each with the cells
  /// left over.
  static std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> first_rows(std::int64_t n) {
    std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> out;
    std::vector<std::int64_t> row;
    std::function<void(std::int64_t)> grow = [&](std::int64_t rest) {
      if (rest == 0) {
        out.emplace_back(row, 0);
        return;
      }
      const std::int64_t bound = row.empty() ? rest : std::min(rest, row.back());
      for (std::int64_t v = bound; v >= 1; --v) {
        row.push_back(v);
        grow(rest - v);
        row.pop_back();
      }
      if (!row.empty()) out.emplace_back(row, rest);
    };
    grow(n);
    return out;
  }

 private:
  bool fill(Rows& rows, std::int64_t rest) {
    // Deeper calls append rows, so the current row is re-indexed each time.
    const std::size_t i = rows.size() - 1;
    const std::size_t j = rows[i].size();
    std::int64_t bound = rest;
    if (j > 0) bound = std::min(bound, rows[i].back());
    if (i > 0) bound = std::min(bound, height(rows, i - 1, j));
    for (std::int64_t v = bound; v >= 1; --v) {
      rows[i].push_back(v);
      const bool go_on = rest == v ? emit_(rows) : fill(rows, rest - v);
      rows[i].pop_back();
      if (!go_on) return false;
    }
    if (j == 0) return true;
    return complete(rows, rest);
  }

  const std::function<bool(const Rows&)>& emit_;
};

}  // namespace

void enumerate_ideals(std::int64_t n, const std::function<bool(const MonomialIdeal&)>& visit, std::int64_t cap) {
  check_colength(n, cap);
  const std::function<bool(const Rows&)> emit = [&](const Rows& rows) { return visit(ideal_of_heights(rows)); };
  PlanePartitionWalk walk(emit);
  for (const auto& [first, rest] : PlanePartitionWalk::first_rows(n)) {
    Rows rows{first};
    if (!walk.complete(rows, rest)) return;
  }
}

std::vector<MonomialIdeal> enumerate_ideals(std::int64_t n, std::int64_t cap) {
  std::vector<MonomialIdeal> out;
  enumerate_ideals(n, [&](const MonomialIdeal& ideal) {
    out.push_back(ideal);
    return true;
  }, cap);
  return out;
}

std::string cache_file(const std::string& dir) { return (std::filesystem::path(dir) / "tangent.jsonl").string(); }

namespace {

/// Append-only JSONL store of tangent dimensions; one writer at a time.
class TangentCache {
 public:
  TangentCache(const std::optional<std::string>& dir, std::int64_t n) : n_(n) {
    if (!dir) return;
    std::filesystem::create_directories(*dir);
    path_ = cache_file(*dir);
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      // A torn last line from an interrupted run is skipped.
      const auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object()) continue;
      if (!j.contains("n") || !j.contains("ideal") || !j.contains("t")) continue;
      if (!j["n"].is_number_integer() || !j["ideal"].is_string() || !j["t"].is_number_integer()) continue;
      if (j["n"].get<std::int64_t>() != n) continue;
      known_[j["ideal"].get<std::string>()] = j["t"].get<std::int64_t>();
    }
    out_.open(path_, std::ios::app);
    if (!out_) throw Error("cannot write cache file " + path_);
  }

  std::optional<std::int64_t> find(const std::string& key) const {
    auto it = known_.find(key);
    if (it == known_.end()) return std::nullopt;
    return it->second;
  }

  void append(const std::string& key, std::int64_t t) {
    if (path_.empty()) return;
    const nlohmann::ordered_json j{{"n", n_}, {"ideal", key}, {"t", t}};
    std::lock_guard lock(mutex_);
    out_ << j.dump() << '\n';
    out_.flush();
  }

 private:
  std::int64_t n_;
  std::string path_;
  std::unordered_map<std::string, std::int64_t> known_;
  std::ofstream out_;
  std::mutex mutex_;
};

struct Partial {
  std::int64_t max = -1;
  std::vector<MonomialIdeal> argmax;
  std::uint64_t scanned = 0;
  std::uint64_t hits = 0;

  void offer(std::int64_t t, const MonomialIdeal& ideal) {
    if (t < max) return;
    if (t > max) {
      max = t;
      argmax.clear();
    }
    argmax.push_back(ideal);
  }

  void merge(Partial&& o) {
    scanned += o.scanned;
    hits += o.hits;
    if (o.max < max) return;
    if (o.max > max) {
      max = o.max;
      argmax.clear();
    }
    for (auto& ideal : o.argmax) argmax.push_back(std::move(ideal));
  }
};

bool ideal_less(const MonomialIdeal& a, const MonomialIdeal& b) {
  return std::lexicographical_compare(a.generators().begin(), a.generators().end(), b.generators().begin(),
                                      b.generators().end(), canonical_less);
}

std::int64_t millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SearchResult max_tangent(std::int64_t n, const SearchOptions& options) {
  check_colength(n, options.cap);
  const auto start = std::chrono::steady_clock::now();
  TangentCache cache(options.cache_dir, n);
  const auto tasks = PlanePartitionWalk::first_rows(n);
  std::vector<Partial> partials(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      for (std::size_t t = next++; t < tasks.size(); t = next++) {
        Partial& part = partials[t];
        const std::function<bool(const Rows&)> emit = [&](const Rows& rows) {
          const MonomialIdeal ideal = ideal_of_heights(rows);
          if (options.borel_only && !is_borel_fixed(ideal)) return true;
          ++part.scanned;
          const std::string key = render(ideal);
          std::int64_t value = 0;
          if (auto hit = cache.find(key)) {
            ++part.hits;
            value = *hit;
          } else {
            value = tangent_dimension(ideal).dimension;
            cache.append(key, value);
          }
          part.offer(value, ideal);
          return true;
        };
        PlanePartitionWalk walk(emit);
        Rows rows{tasks[t].first};
        walk.complete(rows, tasks[t].second);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = tasks.size();
    }
  };

  std::size_t workers = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.workers;
  workers = std::min(workers, std::max<std::size_t>(tasks.size(), 1));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  Partial total;
  for (auto& part : partials) total.merge(std::move(part));
  std::sort(total.argmax.begin(), total.argmax.end(), ideal_less);

  SearchResult result;
  result.n = n;
  result.max_tangent = total.max;
  result.argmax = std::move(total.argmax);
  result.ideals_scanned = total.scanned;
  result.cache_hits = total.hits;
  result.borel_only = options.borel_only;
  result.elapsed_ms = millis_since(start);
  return result;
}

const std::vector<TableFixture>& table_fixtures() {
  static const std::vector<TableFixture> rows = [] {
    auto row = [](std::int64_t n, std::vector<std::string> literal, std::string marker = "") {
      TableFixture f;
      f.n = n;
      f.corrected = literal;
      f.literal = std::move(literal);
      f.marker = std::move(marker);
      return f;
    };
    auto power = [](std::int64_t n, int k, std::string expanded) {
      TableFixture f;
      f.n = n;
      f.literal = {"(x,y,z)^" + std::to_string(k)};
      f.corrected = {std::move(expanded)};
      return f;
    };
    auto gap = [](std::int64_t n) {
      TableFixture f;
      f.n = n;
      f.gap = true;
      return f;
    };
    auto fixed = [](TableFixture f, std::string corrected, std::string note) {
      f.corrected = {std::move(corrected)};
      f.note = std::move(note);
      return f;
    };
    const std::string m5 =
        "x^5,x^4y,x^4z,x^3y^2,x^3yz,x^3z^2,x^2y^3,x^2y^2z,x^2yz^2,x^2z^3,xy^4,xy^3z,xy^2z^2,xyz^3,xz^4,"
        "y^5,y^4z,y^3z^2,y^2z^3,yz^4,z^5";
    std::vector<TableFixture> t{
        row(1, {"x,y,z"}),
        row(2, {"x,y,z^2"}),
        row(3, {"x,y^2,z^2,yz"}),
        power(4, 2, "x^2,xy,xz,y^2,yz,z^2"),
        row(5, {"x^2,y^2,z^3,xy,yz,xz"}),
        row(6, {"x^2,y^2,z^4,xy,yz,xz"}),
        fixed(row(7, {"x^2,y^3,z^3,xz,yz,yz^2,y^2z"}), "x^2,y^3,z^3,xy,xz,yz^2,y^2z",
              "yz read as xy: as printed yz divides yz^2 and y^2z and the colength is 8; the corrected "
              "ideal is the worked example L"),
        row(8, {"x^2,y^2,z^4,xy,yz^2,xz^2"}),
        row(9, {"x^2,y^3,z^3,yz^2,xz^2,y^2z,xy^2,xyz"}),
        power(10, 3, "x^3,x^2y,x^2z,xy^2,xyz,xz^2,y^3,y^2z,yz^2,z^3"),
        row(11, {"x^3,y^3,z^4,yz^2,xz^2,y^2z,xyz,x^2z,xy^2,x^2y"}),
        row(12, {"x^3,y^3,z^5,yz^2,xz^2,y^2z,xyz,x^2z,xy^2,x^2y"}),
        row(13, {"x^3,y^3,z^4,y^2z,xyz,x^2z,xy^2,x^2y,xz^3,yz^3"}),
        row(14, {"x^3,y^3,z^5,y^2z,xyz,x^2z,xy^2,x^2y,yz^3,xz^3",
                 "x^3,y^4,z^4,xz^2,xyz,x^2z,xy^2,x^2y,yz^3,y^2z^2,y^3z"}),
        fixed(row(15, {"x^3,y^3,z^6,y^2z,xyz,x^2,xy^2,x^2y,yz^3,xz^3"}, "*"),
              "x^3,y^3,z^6,y^2z,xyz,x^2z,xy^2,x^2y,yz^3,xz^3",
              "x^2 read as x^2z: as printed x^2 divides x^3 and x^2y and the colength is 14; the corrected "
              "ideal is the STAR family at j=1"),
        row(16, {"x^3,y^4,z^5,xyz,x^2z,xy^2,x^2y,yz^3,xz^3,y^2z^2,y^3z"}, "**"),
        row(17, {"x^3,y^4,z^4,x^2z,x^2y,yz^3,xz^3,y^2z^2,xyz^2,y^3z,xy^2z,xy^3"}),
        gap(18),
        row(19, {"x^3,y^4,z^4,yz^3,xz^3,y^2z^2,xyz^2,x^2z^2,y^3z,xy^2z,x^2yz,xy^3,x^2y^2"}),
        power(20, 4, "x^4,x^3y,x^3z,x^2y^2,x^2yz,x^2z^2,xy^3,xy^2z,xyz^2,xz^3,y^4,y^3z,y^2z^2,yz^3,z^4"),
        row(21, {"x^4,y^4,z^5,yz^3,xz^3,y^2z^2,xyz^2,x^2z^2,y^3z,xy^2z,x^2yz,x^3z,xy^3,x^2y^2,x^3y"}),
        row(22, {"x^4,y^4,z^6,yz^3,xz^3,y^2z^2,xyz^2,x^2z^2,y^3z,xy^2z,x^2yz,x^3z,xy^3,x^2y^2,x^3y"}),
        row(23, {"x^4,y^4,z^5,y^2z^2,xyz^2,x^2z^2,y^3z,xy^2z,x^2yz,x^3z,xy^3,x^2y^2,x^3y,yz^4,xz^4"}),
        row(24, {"x^4,y^4,z^6,y^2z^2,xyz^2,x^2z^2,y^3z,xy^2z,x^2yz,x^3z,xy^3,x^2y^2,x^3y,yz^4,xz^4"}),
        row(25, {"x^4,y^5,z^5,xz^3,xyz^2,x^2z^2,xy^2z,x^2yz,x^3z,xy^3,x^2y^2,x^3y,yz^4,y^2z^3,y^3z^2,y^4z"}),
        gap(26),
        fixed(row(27, {"x^4,y^5,z^6,yz^4,y^2z^3,y^3z^2,y^4z,xz^4,x^2z^2,x^3z,xy^3,y^3x,x^2y^2,xyz^2,xy^2z,x^2yz"},
                  "**"),
              "x^4,y^5,z^6,yz^4,y^2z^3,y^3z^2,y^4z,xz^4,x^2z^2,x^3z,xy^3,x^3y,x^2y^2,xyz^2,xy^2z,x^2yz",
              "y^3x read as x^3y: as printed it repeats xy^3 and the colength is 28; the corrected ideal is the "
              "DOUBLESTAR family at k=4"),
        gap(28),
        row(29, {"x^4,y^5,z^5,x^2z^2,x^2yz,x^3z,x^2y^2,x^3y,yz^4,xz^4,y^2z^3,xyz^3,y^3z^2,xy^2z^2,y^4z,xy^3z,xy^4"}),
        gap(30),
        gap(31),
        gap(32),
        gap(33),
        row(34, {"x^4,y^5,z^5,yz^4,y^2z^3,y^3z^2,y^4z,x^3yz,x^2yz^2,x^2y^2z,xy^2z^2,xyz^3,xy^3z,x^2z^3,xz^4,"
                 "x^2y^3,xy^4,x^3z^2,x^3y^2"}),
        power(35, 5, m5),
        row(36, {"x^5,y^5,z^6,yz^4,y^2z^3,y^3z^2,y^4z,x^3yz,x^2yz^2,x^2y^2z,xy^2z^2,xyz^3,xy^3z,x^2z^3,xz^4,"
                 "x^2y^3,xy^4,x^3z^2,x^3y^2,x^4y,x^4z"}),
        row(37, {"x^5,y^5,z^7,yz^4,y^2z^3,y^3z^2,y^4z,x^3yz,x^2yz^2,x^2y^2z,xy^2z^2,xyz^3,xy^3z,x^2z^3,xz^4,"
                 "x^2y^3,xy^4,x^3z^2,x^3y^2,x^4y,x^4z"}),
        row(38, {"x^5,y^5,z^6,xy^4,x^2y^3,x^3y^2,x^4y,xz^5,yz^5,x^2z^3,y^2z^3,xyz^3,x^3z^2,y^3z^2,xy^2z^2,"
                 "x^2yz^2,x^4z,y^4z,x^2y^2z,xy^3z,x^3yz"}),
        row(39, {"x^5,y^5,z^7,xz^5,yz^5,x^4z,y^4z,x^4y,xy^4,x^3y^2,x^2y^3,x^3z^2,x^2z^3,y^3z^2,y^2z^3,x^3yz,"
                 "xy^3z,xyz^3,x^2y^2z,x^2yz^2,xy^2z^2"}),
        fixed(row(40, {"x^5,y^5,z^8,y^2z^3,xyz^3,x^2z^3,y^3z^2,xy^2z^2,x^2yz^2,x^3z^2,y^4z,xy^3z,x^2y^2z,x^3yx,"
                       "x^4z,xy^4,x^2y^3,x^3y^2,x^4y,yz^5,xz^5"},
                      "*"),
              "x^5,y^5,z^8,y^2z^3,xyz^3,x^2z^3,y^3z^2,xy^2z^2,x^2yz^2,x^3z^2,y^4z,xy^3z,x^2y^2z,x^3yz,x^4z,xy^4,"
              "x^2y^3,x^3y^2,x^4y,yz^5,xz^5",
              "x^3yx read as x^3yz: the printed monomial is x^4y, already listed, and the colength is 41; the "
              "corrected ideal is the STAR family at j=2"),
    };
    return t;
  }();
  return rows;
}

std::vector<TableRow> reproduce_table(std::int64_t n_max, const SearchOptions& options) {
  check_colength(n_max, options.cap);
  const auto& fixtures = table_fixtures();
  std::vector<TableRow> out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto start = std::chrono::steady_clock::now();
    TableRow row;
    row.n = n;
    auto it = std::find_if(fixtures.begin(), fixtures.end(), [&](const TableFixture& f) { return f.n == n; });
    if (it != fixtures.end()) row.fixture = *it;
    SearchResult search = max_tangent(n, options);
    row.computed_max = search.max_tangent;
    row.argmax = std::move(search.argmax);
    bool any_typed = false;
    for (const auto& ideal : row.argmax) {
      const auto report = classify_type(ideal);
      any_typed = any_typed || report.subtype != "none";
      row.type_labels.push_back(report.subtype);
    }
    if (!row.fixture) {
      row.match = true;
      row.detail = "no table row";
    } else if (row.fixture->gap) {
      row.match = !any_typed;
      row.detail = row.match ? "no maximizer satisfies the hull criterion" : "a maximizer satisfies the hull criterion";
    } else {
      std::vector<std::string> missing;
      for (const auto& text : row.fixture->corrected) {
        const MonomialIdeal ideal = parse_ideal(text, 3);
        if (std::find(row.argmax.begin(), row.argmax.end(), ideal) == row.argmax.end()) missing.push_back(text);
      }
      row.match = missing.empty();
      row.detail = row.match ? "every listed ideal is a maximizer" : "not a maximizer: " + missing.front();
    }
    row.elapsed_ms = millis_since(start);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace hilbtan
