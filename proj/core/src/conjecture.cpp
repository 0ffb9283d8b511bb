#include "hilbtan/conjecture.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "hilbtan/error.hpp"
#include "hilbtan/staircase.hpp"

namespace hilbtan {

std::int64_t colength_bracket(std::size_t nvars, std::int64_t n) {
  if (nvars == 0 || n < 1) throw InvalidArgument("colength bracket needs N >= 1 and n >= 1");
  const auto big_n = static_cast<std::int64_t>(nvars);
  std::int64_t k = 0;
  while (binomial(big_n + k, big_n) <= n) ++k;
  return k;
}

NecessaryReport check_necessary(const MonomialIdeal& ideal) {
  const auto powers = ideal.pure_powers();
  NecessaryReport report;
  report.n = static_cast<std::int64_t>(colength(ideal));
  report.k = colength_bracket(ideal.nvars(), report.n);
  report.m1 = *std::min_element(powers.begin(), powers.end());
  report.passes = report.m1 == report.k;
  return report;
}

std::string_view side_name(Side side) noexcept {
  switch (side) {
    case Side::lower: return "lower";
    case Side::upper: return "upper";
    case Side::both: return "both";
  }
  return "?";
}

namespace {

using Int = std::int64_t;
using Triple = std::array<Exponent, 3>;

/// Sign of p1/m1 + p2/m2 + p3/m3 - 1, scaled by m1 m2 m3.
Int plane_side(const Triple& m, const Point3& p) {
  return p[0] * m[1] * m[2] + p[1] * m[0] * m[2] + p[2] * m[0] * m[1] -
         Int{m[0]} * m[1] * m[2];
}

bool allowed_on(Side side, Int s) {
  return side == Side::both || (side == Side::lower ? s <= 0 : s >= 0);
}

std::array<Point3, 3> pure_points(const Triple& m) {
  return {Point3{m[0], 0, 0}, Point3{0, m[1], 0}, Point3{0, 0, m[2]}};
}

ExponentVector to_exponent(const Point3& p) {
  return ExponentVector{static_cast<Exponent>(p[0]), static_cast<Exponent>(p[1]),
                        static_cast<Exponent>(p[2])};
}

Point3 to_point(const ExponentVector& e) { return {e[0], e[1], e[2]}; }

void validate(const Triple& m) {
  if (m[0] < 1 || m[1] < 1 || m[2] < 1) throw InvalidArgument("pure powers must be positive");
  if (m[0] > m[1] || m[1] > m[2]) throw InvalidArgument("pure powers must satisfy m1 <= m2 <= m3");
  if (Int{m[0]} * m[1] * m[2] > 4096) throw InvalidArgument("pure powers too large for exhaustive search");
}

bool ideal_less(const MonomialIdeal& a, const MonomialIdeal& b) {
  return std::lexicographical_compare(a.generators().begin(), a.generators().end(),
                                      b.generators().begin(), b.generators().end(), canonical_less);
}

/// Records the running maximum and its maximizers.
class ArgmaxTracker {
 public:
  explicit ArgmaxTracker(std::size_t keep) : keep_(keep) {}

  Int best() const noexcept { return best_; }

  void offer(Int value, const std::function<MonomialIdeal()>& make) {
    if (value < best_) return;
    if (value > best_) {
      best_ = value;
      witnesses_.clear();
      count_ = 0;
    }
    ++count_;
    if (witnesses_.size() < keep_) witnesses_.push_back(make());
  }

  void finish(BoundaryMaximum& out) {
    std::sort(witnesses_.begin(), witnesses_.end(), ideal_less);
    out.count = best_;
    out.witnesses = std::move(witnesses_);
    out.argmax_count = count_;
  }

 private:
  std::size_t keep_;
  Int best_ = -1;
  std::uint64_t count_ = 0;
  std::vector<MonomialIdeal> witnesses_;
};

// Boundary lattice points meet every line of direction (1,1,1) at most
// twice: at the top of the chord (an upper facet) and at its bottom (a lower
// facet, or a side wall). LineSpan records where conv(P) meets one line
// base + t(1,1,1), as ceilings and floors of the chord ends.
struct LineSpan {
  bool hit = false;
  Int lo_ceil = 0, lo_floor = 0, hi_ceil = 0, hi_floor = 0;
  bool upper = false;  // the top end is a lattice point
  bool lower = false;  // the bottom end is a lattice point on a lower facet
};

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

Int dot(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

class LineProbe {
 public:
  explicit LineProbe(const Triple& m) {
    for (Int a = 0; a <= m[0]; ++a)
      for (Int b = 0; b <= m[1]; ++b)
        for (Int c = 0; c <= m[2]; ++c)
          if (a == 0 || b == 0 || c == 0) bases_.push_back({a, b, c});
  }

  std::size_t size() const noexcept { return bases_.size(); }

  void spans(std::span<const Point3> pts, int dim, const std::vector<Facet>& facets,
             std::vector<LineSpan>& out) const {
    out.assign(bases_.size(), LineSpan{});
    for (std::size_t l = 0; l < bases_.size(); ++l) {
      if (dim == 3) {
        span3(bases_[l], facets, out[l]);
      } else {
        span2(bases_[l], pts, facets.front(), out[l]);
      }
    }
  }

 private:
  static void span3(const Point3& base, const std::vector<Facet>& facets, LineSpan& o) {
    // lo = lo_num/lo_den, hi = hi_num/hi_den; a zero denominator is unbounded.
    Int lo_num = 0, lo_den = 0, hi_num = 0, hi_den = 0;
    for (const auto& f : facets) {
      const Int s = f.normal[0] + f.normal[1] + f.normal[2];
      const Int r = f.offset - dot(f.normal, base);
      if (s == 0) {
        if (r < 0) return;
      } else if (s > 0) {
        if (hi_den == 0 || r * hi_den < hi_num * s) hi_num = r, hi_den = s;
      } else if (lo_den == 0 || -r * lo_den > lo_num * -s) {
        lo_num = -r, lo_den = -s;
      }
    }
    if (lo_den == 0 || hi_den == 0 || lo_num * hi_den > hi_num * lo_den) return;
    o.hit = true;
    o.lo_ceil = ceil_div(lo_num, lo_den);
    o.lo_floor = floor_div(lo_num, lo_den);
    o.hi_ceil = ceil_div(hi_num, hi_den);
    o.hi_floor = floor_div(hi_num, hi_den);
    o.upper = o.hi_ceil == o.hi_floor;
    if (o.lo_ceil == o.lo_floor) {
      const Int t = o.lo_ceil;
      const Point3 x{base[0] + t, base[1] + t, base[2] + t};
      for (const auto& f : facets) {
        if (f.offset < 0 && dot(f.normal, x) == f.offset) {
          o.lower = true;
          break;
        }
      }
    }
  }

  static void span2(const Point3& base, std::span<const Point3> pts, const Facet& f, LineSpan& o) {
    const Int s = f.normal[0] + f.normal[1] + f.normal[2];
    if (s == 0) return;
    const Int r = f.offset - dot(f.normal, base);
    // Meeting point base + (r/s)(1,1,1), tested in coordinates scaled by s.
    const Point3 x{s * base[0] + r, s * base[1] + r, s * base[2] + r};
    const auto& ids = f.vertex_ids;
    for (std::size_t e = 0; e < ids.size(); ++e) {
      const Point3& a = pts[ids[e]];
      const Point3& b = pts[ids[(e + 1) % ids.size()]];
      const Point3 u{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
      const Point3 v{x[0] - s * a[0], x[1] - s * a[1], x[2] - s * a[2]};
      const Point3 c{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
      if (dot(c, f.normal) * (s > 0 ? 1 : -1) < 0) return;
    }
    o.hit = true;
    o.lo_ceil = o.hi_ceil = ceil_div(r, s);
    o.lo_floor = o.hi_floor = floor_div(r, s);
    o.upper = o.lower = r % s == 0;
  }

  std::vector<Point3> bases_;
};

Int exact_count(std::span<const LineSpan> spans, Side side) {
  Int count = 0;
  for (const auto& x : spans) {
    if (!x.hit) continue;
    if (side == Side::upper) {
      count += x.upper;
    } else if (side == Side::lower) {
      count += x.lower;
    } else if (x.lo_ceil == x.hi_ceil && x.lo_floor == x.hi_floor) {
      count += x.upper || x.lower;
    } else {
      count += Int{x.upper} + Int{x.lower};
    }
  }
  return count;
}

/// Upper bound on the count of any hull squeezed between `inner` and
/// `outer`: the top (bottom) of each chord lies between the two hulls' tops
/// (bottoms) and counts only if a lattice point fits there.
Int squeeze_bound(std::span<const LineSpan> inner, std::span<const LineSpan> outer, Side side) {
  Int bound = 0;
  for (std::size_t l = 0; l < outer.size(); ++l) {
    const auto& mx = outer[l];
    if (!mx.hit || mx.hi_floor < mx.lo_ceil) continue;
    const auto& mn = inner[l];
    const bool up = (mn.hit ? mn.hi_ceil : mx.lo_ceil) <= mx.hi_floor;
    const bool low = mx.lo_ceil <= (mn.hit ? mn.lo_floor : mx.hi_floor);
    if (side == Side::upper) {
      bound += up;
    } else if (side == Side::lower) {
      bound += low;
    } else {
      bound += std::min<Int>(mx.hi_floor - mx.lo_ceil + 1, Int{up} + Int{low});
    }
  }
  return bound;
}

/// Cells of the box [0,m1) x [0,m2) x [0,m3) as a bitset.
class BoxSet {
 public:
  explicit BoxSet(std::size_t cells = 0) : words_((cells + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  BoxSet& operator|=(const BoxSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

bool borel_closed(std::span<const Point3> gens) {
  auto in_ideal = [&](const Point3& q) {
    return std::any_of(gens.begin(), gens.end(), [&](const Point3& g) {
      return g[0] <= q[0] && g[1] <= q[1] && g[2] <= q[2];
    });
  };
  for (const auto& g : gens) {
    for (int j = 1; j < 3; ++j) {
      if (g[j] == 0) continue;
      for (int i = 0; i < j; ++i) {
        Point3 q = g;
        --q[j];
        ++q[i];
        if (!in_ideal(q)) return false;
      }
    }
  }
  return true;
}

MonomialIdeal ideal_of(std::span<const Point3> points) {
  std::vector<ExponentVector> gens;
  gens.reserve(points.size());
  for (const auto& p : points) gens.push_back(to_exponent(p));
  return minimalize(gens);
}

class AntichainSearch {
 public:
  AntichainSearch(const Triple& m, Side side, const BoundarySearchOptions& options)
      : m_(m), side_(side), options_(options), probe_(m), tracker_(options.max_witnesses) {
    for (Exponent a = 0; a < m[0]; ++a)
      for (Exponent b = 0; b < m[1]; ++b)
        for (Exponent c = 0; c < m[2]; ++c) {
          const Point3 p{a, b, c};
          if ((a > 0) + (b > 0) + (c > 0) < 2) continue;
          if (allowed_on(side, plane_side(m, p))) points_.push_back(p);
        }
    // Points far from the simplex first: deciding them early shrinks the
    // outer hull fastest.
    std::sort(points_.begin(), points_.end(), [&](const Point3& p, const Point3& q) {
      const Int dp = std::abs(plane_side(m, p));
      const Int dq = std::abs(plane_side(m, q));
      return dp != dq ? dp > dq : p > q;
    });
    const std::size_t n = points_.size();
    comparable_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& p = points_[i];
        const auto& q = points_[j];
        const bool le = p[0] <= q[0] && p[1] <= q[1] && p[2] <= q[2];
        const bool ge = p[0] >= q[0] && p[1] >= q[1] && p[2] >= q[2];
        comparable_[i * n + j] = le || ge;
      }
    if (options.colength) {
      box_cells_ = static_cast<std::size_t>(m[0]) * m[1] * m[2];
      upsets_.assign(n, BoxSet(box_cells_));
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t cell = 0;
        for (Exponent a = 0; a < m[0]; ++a)
          for (Exponent b = 0; b < m[1]; ++b)
            for (Exponent c = 0; c < m[2]; ++c, ++cell)
              if (points_[i][0] <= a && points_[i][1] <= b && points_[i][2] <= c) upsets_[i].set(cell);
      }
    }
  }

  BoundaryMaximum run() {
    std::vector<std::size_t> all(points_.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    visit(all);
    BoundaryMaximum out;
    tracker_.finish(out);
    out.candidates = candidates_;
    out.nodes = nodes_;
    return out;
  }

 private:
  void visit(const std::vector<std::size_t>& rest) {
    if (++nodes_ > options_.budget) {
      throw BudgetExceeded("boundary search exceeded its budget of " +
                           std::to_string(options_.budget) + " nodes");
    }
    std::int64_t colength_now = -1;
    if (options_.colength) {
      BoxSet inner(box_cells_);
      for (auto i : chosen_) inner |= upsets_[i];
      BoxSet outer = inner;
      for (auto i : rest) outer |= upsets_[i];
      colength_now = static_cast<std::int64_t>(box_cells_ - inner.count());
      const auto colength_min = static_cast<std::int64_t>(box_cells_ - outer.count());
      // Adding generators only shrinks the staircase.
      if (colength_now < *options_.colength || colength_min > *options_.colength) return;
    }

    std::vector<Point3> inner_pts(pures_.begin(), pures_.end());
    for (auto i : chosen_) inner_pts.push_back(points_[i]);
    std::vector<Point3> outer_pts = inner_pts;
    for (auto i : rest) outer_pts.push_back(points_[i]);

    const int inner_dim = geometry::hull_facets(inner_pts, facets_);
    probe_.spans(inner_pts, inner_dim, facets_, inner_spans_);
    const bool admissible = (!options_.colength || colength_now == *options_.colength) &&
                            (!options_.borel_only || borel_closed(inner_pts));
    if (admissible) {
      ++candidates_;
      tracker_.offer(exact_count(inner_spans_, side_), [&] { return ideal_of(inner_pts); });
    }
    if (rest.empty()) return;

    const int outer_dim = geometry::hull_facets(outer_pts, facets_);
    probe_.spans(outer_pts, outer_dim, facets_, outer_spans_);
    if (squeeze_bound(inner_spans_, outer_spans_, side_) < tracker_.best()) return;

    const std::size_t n = points_.size();
    for (std::size_t a = 0; a < rest.size(); ++a) {
      std::vector<std::size_t> next;
      for (std::size_t b = a + 1; b < rest.size(); ++b) {
        if (!comparable_[rest[a] * n + rest[b]]) next.push_back(rest[b]);
      }
      chosen_.push_back(rest[a]);
      visit(next);
      chosen_.pop_back();
    }
  }

  Triple m_;
  Side side_;
  BoundarySearchOptions options_;
  LineProbe probe_;
  ArgmaxTracker tracker_;
  std::array<Point3, 3> pures_ = pure_points(m_);
  std::vector<Point3> points_;
  std::vector<char> comparable_;
  std::size_t box_cells_ = 0;
  std::vector<BoxSet> upsets_;
  std::vector<std::size_t> chosen_;
  std::vector<Facet> facets_;
  std::vector<LineSpan> inner_spans_;
  std::vector<LineSpan> outer_spans_;
  std::uint64_t nodes_ = 0;
  std::uint64_t candidates_ = 0;
};

// Borel-fixed ideals with pure powers m correspond to staircases in the box
// that are closed under divisors and under moving exponent from an earlier
// variable to a later one. Cells are decided in an order where each cell's
// closure requirements come first.
class BorelSearch {
 public:
  BorelSearch(const Triple& m, Side side, const BoundarySearchOptions& options)
      : m_(m), side_(side), options_(options), tracker_(options.max_witnesses) {
    for (Exponent a = 0; a < m[0]; ++a)
      for (Exponent b = 0; b < m[1]; ++b)
        for (Exponent c = 0; c < m[2]; ++c) cells_.push_back({a, b, c});
    std::sort(cells_.begin(), cells_.end(), [](const Point3& p, const Point3& q) {
      const Int dp = p[0] + p[1] + p[2];
      const Int dq = q[0] + q[1] + q[2];
      return dp != dq ? dp < dq : p < q;
    });
    std::vector<std::size_t> order(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) order[index(cells_[i])] = i;
    needs_.resize(cells_.size());
    blocked_.assign(cells_.size(), 0);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const Point3& c = cells_[i];
      for (int v = 0; v < 3; ++v) {
        if (c[v] == 0) continue;
        Point3 d = c;
        --d[v];
        needs_[i].push_back(order[index(d)]);
      }
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          if (c[a] == 0) continue;
          Point3 d = c;
          --d[a];
          ++d[b];
          if (d[b] >= m[b]) {
            blocked_[i] = 1;
          } else {
            needs_[i].push_back(order[index(d)]);
          }
        }
    }
    in_.assign(cells_.size(), 0);
  }

  BoundaryMaximum run() {
    visit(0, 0);
    BoundaryMaximum out;
    tracker_.finish(out);
    out.candidates = candidates_;
    out.nodes = nodes_;
    return out;
  }

 private:
  std::size_t index(const Point3& p) const {
    return static_cast<std::size_t>((p[0] * m_[1] + p[1]) * m_[2] + p[2]);
  }

  void visit(std::size_t i, std::int64_t size) {
    if (++nodes_ > options_.budget) {
      throw BudgetExceeded("boundary search exceeded its budget of " +
                           std::to_string(options_.budget) + " nodes");
    }
    if (options_.colength) {
      if (size > *options_.colength) return;
      if (size + static_cast<std::int64_t>(cells_.size() - i) < *options_.colength) return;
    }
    if (i == cells_.size()) {
      leaf(size);
      return;
    }
    const Point3& c = cells_[i];
    const bool on_axis = (c[0] > 0) + (c[1] > 0) + (c[2] > 0) <= 1;
    if (!on_axis) visit(i + 1, size);
    const bool can_add = !blocked_[i] && std::all_of(needs_[i].begin(), needs_[i].end(),
                                                     [&](std::size_t j) { return in_[j] != 0; });
    if (can_add) {
      in_[i] = 1;
      visit(i + 1, size + 1);
      in_[i] = 0;
    }
  }

  void leaf(std::int64_t size) {
    if (options_.colength && size != *options_.colength) return;
    std::vector<ExponentVector> gens{to_exponent({m_[0], 0, 0}), to_exponent({0, m_[1], 0}),
                                     to_exponent({0, 0, m_[2]})};
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (in_[i]) continue;
      const Point3& c = cells_[i];
      bool minimal = true;
      for (int v = 0; v < 3 && minimal; ++v) {
        if (c[v] == 0) continue;
        Point3 d = c;
        --d[v];
        minimal = in_[position(d)] != 0;
      }
      if (!minimal) continue;
      if (!allowed_on(side_, plane_side(m_, c))) return;
      gens.push_back(to_exponent(c));
    }
    ++candidates_;
    const auto hull = convex_hull(gens);
    const auto value = static_cast<Int>(boundary_lattice_points(hull, side_).size());
    tracker_.offer(value, [&] { return minimalize(gens); });
  }

  std::size_t position(const Point3& p) {
    if (positions_.empty()) {
      positions_.resize(cells_.size());
      for (std::size_t i = 0; i < cells_.size(); ++i) positions_[index(cells_[i])] = i;
    }
    return positions_[index(p)];
  }

  Triple m_;
  Side side_;
  BoundarySearchOptions options_;
  ArgmaxTracker tracker_;
  std::vector<Point3> cells_;
  std::vector<std::vector<std::size_t>> needs_;
  std::vector<char> blocked_;
  std::vector<char> in_;
  std::vector<std::size_t> positions_;
  std::uint64_t nodes_ = 0;
  std::uint64_t candidates_ = 0;
};

}  // namespace

namespace detail {

BoundaryMaximum max_boundary_antichains(const Triple& m, Side side,
                                        const BoundarySearchOptions& options) {
  validate(m);
  return AntichainSearch(m, side, options).run();
}

BoundaryMaximum max_boundary_borel(const Triple& m, Side side, const BoundarySearchOptions& options) {
  validate(m);
  return BorelSearch(m, side, options).run();
}

}  // namespace detail

BoundaryMaximum max_boundary_count(const Triple& m, Side side, const BoundarySearchOptions& options) {
  return options.borel_only ? detail::max_boundary_borel(m, side, options)
                            : detail::max_boundary_antichains(m, side, options);
}

namespace {

std::string describe(const Triple& m) {
  return "(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + ")";
}

std::string describe_points(const std::vector<ExponentVector>& pts, std::size_t limit = 6) {
  std::string out;
  for (std::size_t i = 0; i < pts.size() && i < limit; ++i) {
    if (i) out += ", ";
    out += render_monomial(pts[i]);
  }
  if (pts.size() > limit) out += ", ...";
  return out;
}

std::string boundary_words(Side side) {
  return side == Side::both ? "lower and upper boundary" : std::string(side_name(side)) + " boundary";
}

bool is_simplex(const Hull& hull, const std::vector<Facet>& facets, const Triple& m) {
  if (facets.size() != 1) return false;
  std::set<Point3> corners;
  for (auto id : facets.front().vertex_ids) corners.insert(to_point(hull.points[id]));
  const auto pures = pure_points(m);
  return corners == std::set<Point3>(pures.begin(), pures.end());
}

struct Geometry {
  Hull hull;
  Triple m;
  std::int64_t n;
  std::set<ExponentVector> gens;
};

ConditionResult check_simplex(const Geometry& g, Side side) {
  const auto facets = boundary(g.hull, side);
  ConditionResult r;
  r.passed = is_simplex(g.hull, facets, g.m);
  r.detail = boundary_words(side) + " has " + std::to_string(facets.size()) +
             (facets.size() == 1 ? " facet" : " facets") +
             (r.passed ? ", the simplex on the pure powers" : ", not the simplex on the pure powers");
  return r;
}

ConditionResult check_full(const Geometry& g, Side side) {
  const auto points = boundary_lattice_points(g.hull, side);
  std::vector<ExponentVector> missing;
  std::vector<ExponentVector> off;
  for (const auto& p : points)
    if (!g.gens.count(p)) missing.push_back(p);
  for (const auto& p : g.gens)
    if (!points.count(p)) off.push_back(p);
  ConditionResult r;
  r.passed = missing.empty() && off.empty();
  r.detail = std::to_string(points.size()) + " lattice points on the " + boundary_words(side) + ", " + std::to_string(g.gens.size()) + " generators";
  if (!off.empty()) r.detail += "; generators off it: " + describe_points(off);
  if (!missing.empty()) r.detail += "; lattice points that are not generators: " + describe_points(missing);
  return r;
}

ConditionResult check_symmetry(const std::vector<std::pair<std::size_t, std::size_t>>& swaps) {
  static constexpr const char* names[] = {"x", "y", "z"};
  ConditionResult r;
  r.passed = !swaps.empty();
  if (swaps.empty()) {
    r.detail = "no transposition of variables fixes the ideal";
  } else {
    r.detail = "fixed by";
    for (const auto& [i, j] : swaps) r.detail += std::string(" ") + names[i] + "<->" + names[j];
  }
  return r;
}

ConditionResult check_maximal(const Geometry& g, Side side, const ClassifyOptions& options,
                              std::map<std::string, BoundaryMaximum>& maxima) {
  const auto own = static_cast<std::int64_t>(boundary_lattice_points(g.hull, side).size());
  const std::string key(side_name(side));
  ConditionResult r;
  auto search = [&](const std::string& family, bool borel, bool same_colength) -> const BoundaryMaximum* {
    BoundarySearchOptions so;
    so.borel_only = borel;
    so.budget = options.budget;
    if (same_colength) so.colength = g.n;
    try {
      return &(maxima[key + "/" + family] = max_boundary_count(g.m, side, so));
    } catch (const BudgetExceeded&) {
      return nullptr;
    }
  };
  const BoundaryMaximum* borel = search("borel", true, true);
  const BoundaryMaximum* all = search("all", false, true);
  if (options.any_colength) {
    search("borel-any-colength", true, false);
    search("all-any-colength", false, false);
  }
  if (!borel) {
    r.passed = false;
    r.detail = "search budget exceeded";
    return r;
  }
  r.passed = borel->count >= 0 && own == borel->count;
  r.detail = std::to_string(own) + " lattice points on the " + boundary_words(side) + "; maximum " +
             std::to_string(borel->count) + " among " + std::to_string(borel->candidates) +
             " Borel-fixed candidates with m=" + describe(g.m) + " and colength " + std::to_string(g.n) +
             "; unrestricted maximum " + (all ? std::to_string(all->count) : std::string("not reached (budget)"));
  return r;
}

ConditionResult not_evaluated() {
  ConditionResult r;
  r.evaluated = false;
  r.detail = "not evaluated: the type already fails";
  return r;
}

bool all_pass(const std::map<std::string, ConditionResult>& c, std::initializer_list<const char*> keys) {
  return std::all_of(keys.begin(), keys.end(), [&](const char* k) {
    auto it = c.find(k);
    return it != c.end() && it->second.evaluated && it->second.passed;
  });
}

}  // namespace

TypeReport classify_type(const MonomialIdeal& ideal, const ClassifyOptions& options) {
  if (ideal.nvars() != 3) throw InvalidArgument("hull classification needs exactly 3 variables");
  const auto powers = ideal.pure_powers();

  // Rename variables so that m1 <= m2 <= m3, preferring a renaming that
  // leaves the ideal Borel-fixed.
  std::vector<std::size_t> perm{0, 1, 2};
  std::optional<std::vector<std::size_t>> chosen;
  std::optional<std::vector<std::size_t>> fallback;
  do {
    Triple m{};
    for (std::size_t v = 0; v < 3; ++v) m[perm[v]] = powers[v];
    if (m[0] > m[1] || m[1] > m[2]) continue;
    if (!fallback) fallback = perm;
    if (is_borel_fixed(permute_variables(ideal, perm))) {
      chosen = perm;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  perm = chosen ? *chosen : *fallback;
  const MonomialIdeal sorted = permute_variables(ideal, perm);

  TypeReport report;
  report.permutation = perm;
  for (std::size_t v = 0; v < 3; ++v) report.m[perm[v]] = powers[v];
  report.n = static_cast<std::int64_t>(colength(sorted));
  report.k = colength_bracket(3, report.n);
  const Triple& m = report.m;
  const std::int64_t k = report.k;
  auto& c = report.conditions;

  Geometry g{convex_hull(sorted.generators()), m, report.n,
             std::set<ExponentVector>(sorted.generators().begin(), sorted.generators().end())};

  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (is_swap_symmetric(ideal, i, j)) report.symmetric_swaps.emplace_back(i, j);

  std::vector<std::size_t> inverse(3);
  for (std::size_t v = 0; v < 3; ++v) inverse[perm[v]] = v;
  if (g.hull.dim == 3) {
    for (const auto& gen : sorted.generators()) {
      const bool on_face = std::any_of(g.hull.facets.begin(), g.hull.facets.end(), [&](const Facet& f) {
        return dot(f.normal, to_point(gen)) == f.offset;
      });
      if (!on_face) {
        ExponentVector original(3);
        for (std::size_t v = 0; v < 3; ++v) original = original.with(inverse[v], gen[v]);
        report.interior_generators.push_back(original);
      }
    }
  }

  c["zero_dimensional"] = {true, true, "all pure powers present"};
  const bool borel = is_borel_fixed(sorted);
  c["borel"] = {true, borel, borel ? "Borel-fixed after sorting the pure powers" : "not Borel-fixed in any order with m1 <= m2 <= m3"};
  c["necessary"] = {true, m[0] == k,
                    "colength " + std::to_string(report.n) + " gives k=" + std::to_string(k) +
                        ", m1=" + std::to_string(m[0])};
  c["spanned"] = {true, report.interior_generators.empty(),
                  report.interior_generators.empty()
                      ? "every generator lies on the hull boundary"
                      : "generators inside the hull: " + describe_points(report.interior_generators)};
  const bool pre = all_pass(c, {"zero_dimensional", "borel", "necessary", "spanned"});
  const auto swaps = check_symmetry(report.symmetric_swaps);

  // Type I.
  {
    const bool eq12 = m[0] == m[1];
    const bool eq23 = m[1] == m[2];
    const bool i = eq12 || eq23;
    const bool ii = !eq12 || m[2] <= m[1] + 2;
    const bool iii = !eq23 || m[0] >= m[1] - 1;
    c["a"] = {true, i && ii && iii,
              "m=" + describe(m) + ": (i) " + (i ? "holds" : "fails") + ", (ii) " + (ii ? "holds" : "fails") +
                  ", (iii) " + (iii ? "holds" : "fails")};
    c["b"] = check_simplex(g, Side::upper);
    c["d"] = swaps;
    c["e"] = check_full(g, Side::lower);
    const bool rest = pre && all_pass(c, {"a", "b", "d", "e"});
    c["c"] = rest || options.evaluate_all ? check_maximal(g, Side::lower, options, report.boundary_maxima)
                                          : not_evaluated();
    if (rest && c["c"].passed) report.matches.push_back(eq12 ? "I(a)(ii)" : "I(a)(iii)");
  }
  // Type II.
  {
    const bool a = m[0] == k && m[1] == k + 1 && m[2] == k + 1;
    c["a'"] = {true, a, "m=" + describe(m) + (a ? " is" : " is not") + " (k,k+1,k+1) for k=" + std::to_string(k)};
    c["b'"] = check_simplex(g, Side::lower);
    c["d'"] = swaps;
    c["e'"] = check_full(g, Side::upper);
    const bool rest = pre && all_pass(c, {"a'", "b'", "d'", "e'"});
    c["c'"] = rest || options.evaluate_all ? check_maximal(g, Side::upper, options, report.boundary_maxima)
                                           : not_evaluated();
    if (rest && c["c'"].passed) report.matches.push_back("II");
  }
  // Type III.
  {
    const bool first = m[0] == k && m[1] == k && m[2] == k + 1;
    const bool second = m[0] == k && m[1] == k + 1 && m[2] == k + 1;
    c["a''"] = {true, first || second,
                "m=" + describe(m) + (first ? " is (k,k,k+1)" : second ? " is (k,k+1,k+1)" : " matches neither pattern") +
                    " for k=" + std::to_string(k)};
    std::size_t above = 0, below = 0;
    std::vector<ExponentVector> inside;
    for (const auto& gen : sorted.generators()) {
      const Int s = plane_side(m, to_point(gen));
      if (s > 0) ++above;
      if (s < 0) ++below;
      if (s == 0 && gen.support_size() == 3) inside.push_back(gen);
    }
    c["b''"] = {true, above > 0 && below > 0 && inside.empty(),
                std::to_string(above) + " generators strictly above the simplex, " + std::to_string(below) +
                    " strictly below" +
                    (inside.empty() ? ", none inside it" : ", inside it: " + describe_points(inside))};
    c["d''"] = swaps;
    c["e''"] = check_full(g, Side::both);
    const bool rest = pre && all_pass(c, {"a''", "b''", "d''", "e''"});
    c["c''"] = rest || options.evaluate_all ? check_maximal(g, Side::both, options, report.boundary_maxima)
                                            : not_evaluated();
    if (rest && c["c''"].passed) report.matches.push_back(first ? "III(a'')(i)" : "III(a'')(ii)");
  }

  if (!report.matches.empty()) {
    report.subtype = report.matches.front();
    report.claimed_type = report.subtype.substr(0, report.subtype.find('('));
  }
  return report;
}

}  // namespace hilbtan
