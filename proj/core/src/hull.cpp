#include "hilbtan/hull.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hilbtan/error.hpp"

namespace hilbtan {

namespace geometry {

namespace {

Point3 sub(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Point3 cross(const Point3& a, const Point3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::int64_t dot(const Point3& a, const Point3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

bool is_zero(const Point3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

Point3 primitive(Point3 a) {
  const std::int64_t g = std::gcd(std::gcd(a[0], a[1]), a[2]);
  if (g > 1) {
    for (auto& x : a) x /= g;
  }
  return a;
}

/// Corners of the convex polygon spanned by `ids` (all on the plane with
/// normal `normal`), counter-clockwise seen from the side `normal` points to.
std::vector<std::size_t> polygon_corners(std::span<const Point3> pts, std::vector<std::size_t> ids,
                                         const Point3& normal) {
  std::size_t axis = 0;
  for (std::size_t k = 1; k < 3; ++k) {
    if (std::abs(normal[k]) > std::abs(normal[axis])) axis = k;
  }
  const std::size_t u = (axis + 1) % 3;
  const std::size_t w = (axis + 2) % 3;
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    if (pts[a][u] != pts[b][u]) return pts[a][u] < pts[b][u];
    return pts[a][w] < pts[b][w];
  });
  ids.erase(std::unique(ids.begin(), ids.end(),
                        [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
            ids.end());
  if (ids.size() < 3) return ids;
  auto turn = [&](std::size_t o, std::size_t a, std::size_t b) {
    return (pts[a][u] - pts[o][u]) * (pts[b][w] - pts[o][w]) -
           (pts[a][w] - pts[o][w]) * (pts[b][u] - pts[o][u]);
  };
  std::vector<std::size_t> chain(2 * ids.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    while (k >= 2 && turn(chain[k - 2], chain[k - 1], ids[i]) <= 0) --k;
    chain[k++] = ids[i];
  }
  for (std::size_t i = ids.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(chain[k - 2], chain[k - 1], ids[i]) <= 0) --k;
    chain[k++] = ids[i];
  }
  chain.resize(k - 1);
  if (normal[axis] < 0) std::reverse(chain.begin(), chain.end());
  return chain;
}

struct Triangle {
  std::size_t a, b, c;
  Point3 normal;
  bool alive;
};

}  // namespace

bool is_lower(const Facet& f) noexcept { return f.offset < 0; }

bool is_upper(const Facet& f) noexcept { return f.normal[0] + f.normal[1] + f.normal[2] > 0; }

int hull_facets(std::span<const Point3> pts, std::vector<Facet>& facets) {
  facets.clear();
  const std::size_t n = pts.size();
  if (n == 0) throw InvalidArgument("convex hull of an empty point set");
  std::size_t i1 = 1;
  while (i1 < n && pts[i1] == pts[0]) ++i1;
  if (i1 == n) return 0;
  const Point3 e1 = sub(pts[i1], pts[0]);
  std::size_t i2 = i1 + 1;
  while (i2 < n && is_zero(cross(e1, sub(pts[i2], pts[0])))) ++i2;
  if (i2 == n) return 1;
  const Point3 plane = cross(e1, sub(pts[i2], pts[0]));
  std::size_t i3 = i2 + 1;
  while (i3 < n && dot(plane, sub(pts[i3], pts[0])) == 0) ++i3;

  if (i3 == n) {
    Point3 normal = primitive(plane);
    const std::int64_t sum = normal[0] + normal[1] + normal[2];
    const bool flip = sum < 0 || (sum == 0 && (normal[0] < 0 || (normal[0] == 0 && normal[1] < 0)));
    if (flip) normal = {-normal[0], -normal[1], -normal[2]};
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    facets.push_back({normal, dot(normal, pts[0]), polygon_corners(pts, std::move(all), normal)});
    return 2;
  }

  std::vector<Triangle> tris;
  std::vector<std::int32_t> owner(n * n, -1);
  auto add = [&](std::size_t a, std::size_t b, std::size_t c) {
    const Point3 normal = cross(sub(pts[b], pts[a]), sub(pts[c], pts[a]));
    const auto id = static_cast<std::int32_t>(tris.size());
    tris.push_back({a, b, c, normal, true});
    owner[a * n + b] = id;
    owner[b * n + c] = id;
    owner[c * n + a] = id;
  };
  // Orient the first tetrahedron so every face normal points away from the
  // opposite vertex.
  std::size_t t0 = 0, t1 = i1, t2 = i2;
  if (dot(plane, sub(pts[i3], pts[0])) > 0) std::swap(t1, t2);
  add(t0, t1, t2);
  add(t0, i3, t1);
  add(t1, i3, t2);
  add(t2, i3, t0);

  std::vector<std::size_t> visible;
  std::vector<std::pair<std::size_t, std::size_t>> horizon;
  for (std::size_t q = 1; q < n; ++q) {
    if (q == i1 || q == i2 || q == i3) continue;
    visible.clear();
    for (std::size_t t = 0; t < tris.size(); ++t) {
      if (tris[t].alive && dot(tris[t].normal, sub(pts[q], pts[tris[t].a])) > 0) visible.push_back(t);
    }
    if (visible.empty()) continue;
    for (std::size_t t : visible) tris[t].alive = false;
    horizon.clear();
    for (std::size_t t : visible) {
      const std::size_t v[3] = {tris[t].a, tris[t].b, tris[t].c};
      for (int e = 0; e < 3; ++e) {
        const std::size_t a = v[e];
        const std::size_t b = v[(e + 1) % 3];
        const std::int32_t twin = owner[b * n + a];
        if (twin >= 0 && tris[static_cast<std::size_t>(twin)].alive) horizon.emplace_back(a, b);
        owner[a * n + b] = -1;
      }
    }
    for (const auto& [a, b] : horizon) add(a, b, q);
  }

  std::map<std::pair<Point3, std::int64_t>, std::vector<std::size_t>> planes;
  for (const auto& t : tris) {
    if (!t.alive) continue;
    const Point3 normal = primitive(t.normal);
    auto& ids = planes[{normal, dot(normal, pts[t.a])}];
    ids.insert(ids.end(), {t.a, t.b, t.c});
  }
  for (auto& [key, ids] : planes) {
    facets.push_back({key.first, key.second, polygon_corners(pts, std::move(ids), key.first)});
  }
  return 3;
}

namespace {

template <typename Emit>
void for_each_facet_lattice_point(std::span<const Point3> pts, const Facet& f, Emit&& emit) {
  std::size_t axis = 0;
  for (std::size_t k = 1; k < 3; ++k) {
    if (std::abs(f.normal[k]) > std::abs(f.normal[axis])) axis = k;
  }
  const std::size_t u = (axis + 1) % 3;
  const std::size_t w = (axis + 2) % 3;
  std::int64_t lo_u = pts[f.vertex_ids[0]][u], hi_u = lo_u;
  std::int64_t lo_w = pts[f.vertex_ids[0]][w], hi_w = lo_w;
  for (std::size_t id : f.vertex_ids) {
    lo_u = std::min(lo_u, pts[id][u]);
    hi_u = std::max(hi_u, pts[id][u]);
    lo_w = std::min(lo_w, pts[id][w]);
    hi_w = std::max(hi_w, pts[id][w]);
  }
  const std::size_t k = f.vertex_ids.size();
  Point3 p{};
  for (p[u] = lo_u; p[u] <= hi_u; ++p[u]) {
    for (p[w] = lo_w; p[w] <= hi_w; ++p[w]) {
      const std::int64_t rest = f.offset - f.normal[u] * p[u] - f.normal[w] * p[w];
      if (rest % f.normal[axis] != 0) continue;
      p[axis] = rest / f.normal[axis];
      bool inside = true;
      for (std::size_t e = 0; e < k && inside; ++e) {
        const Point3& a = pts[f.vertex_ids[e]];
        const Point3& b = pts[f.vertex_ids[(e + 1) % k]];
        inside = dot(cross(sub(b, a), sub(p, a)), f.normal) >= 0;
      }
      if (inside) emit(p);
    }
  }
}

}  // namespace

std::size_t count_lattice_points(std::span<const Point3> pts, std::span<const Facet* const> facets) {
  std::vector<Point3> found;
  for (const Facet* f : facets) {
    for_each_facet_lattice_point(pts, *f, [&](const Point3& p) { found.push_back(p); });
  }
  std::sort(found.begin(), found.end());
  return static_cast<std::size_t>(std::unique(found.begin(), found.end()) - found.begin());
}

}  // namespace geometry

namespace {

std::vector<Point3> to_points(std::span<const ExponentVector> points) {
  std::vector<Point3> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back({p[0], p[1], p[2]});
  return out;
}

}  // namespace

Hull convex_hull(std::span<const ExponentVector> points) {
  if (points.empty()) throw InvalidArgument("convex hull of an empty point set");
  Hull hull;
  for (const auto& p : points) {
    if (p.size() != 3) throw InvalidArgument("hull classification needs exactly 3 variables");
    if (std::find(hull.points.begin(), hull.points.end(), p) == hull.points.end()) {
      hull.points.push_back(p);
    }
  }
  const auto pts = to_points(hull.points);
  hull.dim = geometry::hull_facets(pts, hull.facets);
  std::sort(hull.facets.begin(), hull.facets.end(), [](const Facet& a, const Facet& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });
  if (hull.dim >= 2) {
    for (const auto& f : hull.facets) {
      hull.vertices.insert(hull.vertices.end(), f.vertex_ids.begin(), f.vertex_ids.end());
    }
  } else if (hull.dim == 1) {
    const auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    hull.vertices = {static_cast<std::size_t>(lo - pts.begin()),
                     static_cast<std::size_t>(hi - pts.begin())};
  } else {
    hull.vertices = {0};
  }
  std::sort(hull.vertices.begin(), hull.vertices.end());
  hull.vertices.erase(std::unique(hull.vertices.begin(), hull.vertices.end()), hull.vertices.end());
  return hull;
}

std::vector<Facet> boundary(const Hull& hull, Side side) {
  if (hull.dim < 2) throw InvalidArgument("boundary needs a hull of dimension 2 or 3");
  if (hull.dim == 2) return hull.facets;
  std::vector<Facet> out;
  for (const auto& f : hull.facets) {
    const bool keep = side == Side::lower   ? geometry::is_lower(f)
                      : side == Side::upper ? geometry::is_upper(f)
                                            : geometry::is_lower(f) || geometry::is_upper(f);
    if (keep) out.push_back(f);
  }
  return out;
}

std::vector<ExponentVector> facet_lattice_points(const Hull& hull, const Facet& facet) {
  const auto pts = to_points(hull.points);
  std::vector<ExponentVector> out;
  geometry::for_each_facet_lattice_point(pts, facet, [&](const Point3& p) {
    out.push_back(ExponentVector{static_cast<Exponent>(p[0]), static_cast<Exponent>(p[1]),
                                 static_cast<Exponent>(p[2])});
  });
  return out;
}

std::set<ExponentVector> boundary_lattice_points(const Hull& hull, Side side) {
  std::set<ExponentVector> out;
  for (const auto& f : boundary(hull, side)) {
    for (auto& p : facet_lattice_points(hull, f)) out.insert(std::move(p));
  }
  return out;
}

bool is_swap_symmetric(const MonomialIdeal& ideal, std::size_t i, std::size_t j) {
  if (i == j) throw InvalidArgument("swap needs two distinct variables");
  return permute_variables(ideal, swap_permutation(ideal.nvars(), i, j)) == ideal;
}

std::string export_off(const Hull& hull) {
  if (hull.dim < 2) throw InvalidArgument("OFF export needs a hull of dimension 2 or 3");
  std::vector<std::size_t> order = hull.vertices;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return hull.points[a] < hull.points[b]; });
  std::map<std::size_t, std::size_t> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
  std::size_t edges = 0;
  for (const auto& f : hull.facets) edges += f.vertex_ids.size();
  if (hull.dim == 3) edges /= 2;

  std::ostringstream out;
  out << "OFF\n" << order.size() << ' ' << hull.facets.size() << ' ' << edges << '\n';
  for (std::size_t id : order) {
    const auto& p = hull.points[id];
    out << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
  }
  for (const auto& f : hull.facets) {
    out << f.vertex_ids.size();
    for (std::size_t id : f.vertex_ids) out << ' ' << index.at(id);
    out << '\n';
  }
  return out.str();
}

OffMesh read_off(std::string_view text) {
  std::istringstream lines{std::string(text)};
  std::string line;
  std::vector<std::string> tokens;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string word;
    while (words >> word) tokens.push_back(word);
  }
  std::size_t pos = 0;
  auto next = [&]() -> std::int64_t {
    if (pos >= tokens.size()) throw InvalidArgument("truncated OFF data");
    try {
      return std::stoll(tokens[pos++]);
    } catch (const std::exception&) {
      throw InvalidArgument("bad OFF token '" + tokens[pos - 1] + "'");
    }
  };
  if (tokens.empty() || tokens[pos++] != "OFF") throw InvalidArgument("missing OFF header");
  const auto nv = next();
  const auto nf = next();
  next();
  if (nv < 0 || nf < 0) throw InvalidArgument("negative OFF counts");
  OffMesh mesh;
  for (std::int64_t i = 0; i < nv; ++i) mesh.vertices.push_back({next(), next(), next()});
  for (std::int64_t i = 0; i < nf; ++i) {
    const auto k = next();
    std::vector<std::size_t> face;
    for (std::int64_t j = 0; j < k; ++j) {
      const auto id = next();
      if (id < 0 || id >= nv) throw InvalidArgument("OFF face index out of range");
      face.push_back(static_cast<std::size_t>(id));
    }
    mesh.faces.push_back(std::move(face));
  }
  return mesh;
}

}  // namespace hilbtan
