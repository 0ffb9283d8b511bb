#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hilbtan/ideal.hpp"

namespace hilbtan {

using Point3 = std::array<std::int64_t, 3>;

/// A 2-face of a 3D hull (or the single face of a planar one).
struct Facet {
  /// Primitive outward normal (gcd of entries is 1).
  Point3 normal;
  /// normal . x <= offset on the hull, with equality on the facet.
  std::int64_t offset;
  /// Corner indices into Hull::points, counter-clockwise seen from outside.
  std::vector<std::size_t> vertex_ids;
};

struct Hull {
  std::vector<ExponentVector> points;
  /// Indices into `points`, sorted.
  std::vector<std::size_t> vertices;
  /// Sorted by (normal, offset).
  std::vector<Facet> facets;
  /// Intrinsic dimension 0..3.
  int dim = 0;
};

enum class Side { lower, upper, both };

/// Exact convex hull of 3D lattice points (duplicates are dropped). Uses
/// incremental insertion with integer orientation tests; planar, collinear
/// and single-point inputs give dim 2, 1, 0. A planar hull reports its one
/// face with the normal oriented so that normal.(1,1,1) > 0 (or the first
/// nonzero entry positive when that sum is 0).
Hull convex_hull(std::span<const ExponentVector> points);

/// Facets visible from the origin (offset < 0) or from (+inf,+inf,+inf)
/// (normal.(1,1,1) > 0); `both` is their union. A planar hull returns its
/// face for every side. Throws InvalidArgument when dim < 2.
std::vector<Facet> boundary(const Hull& hull, Side side);

/// Lattice points on the closed union of the side's facets.
std::set<ExponentVector> boundary_lattice_points(const Hull& hull, Side side);

/// Lattice points on one closed facet of `hull`.
std::vector<ExponentVector> facet_lattice_points(const Hull& hull, const Facet& facet);

/// True iff swapping variables i and j maps the ideal to itself.
bool is_swap_symmetric(const MonomialIdeal& ideal, std::size_t i, std::size_t j);

/// ASCII OFF: "OFF", counts line "V F E", integer vertex lines, then one
/// "k i0 i1 ..." line per facet. Throws InvalidArgument when dim < 2.
std::string export_off(const Hull& hull);

struct OffMesh {
  std::vector<Point3> vertices;
  std::vector<std::vector<std::size_t>> faces;
};

/// Reads the OFF subset written by export_off (integer coordinates).
OffMesh read_off(std::string_view text);

namespace geometry {

/// Hull facets of raw points; the building block behind convex_hull. Facet
/// vertex ids index `points`. Returns the intrinsic dimension.
int hull_facets(std::span<const Point3> points, std::vector<Facet>& facets);

/// Number of lattice points on the closed union of the given facets.
std::size_t count_lattice_points(std::span<const Point3> points,
                                 std::span<const Facet* const> facets);

bool is_lower(const Facet& f) noexcept;
bool is_upper(const Facet& f) noexcept;

}  // namespace geometry

}  // namespace hilbtan
