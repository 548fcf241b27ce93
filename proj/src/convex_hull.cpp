#include "zonocert/convex_hull.hpp"
#include "zonocert/errors.hpp"
#include "zonocert/linalg.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace zonocert {

namespace {

using IntPoint = std::vector<Integer>;

struct Scaled {
  std::vector<IntPoint> points; // deduplicated, sorted
  Integer scale;                // common denominator
};

Scaled to_integer_points(const std::vector<RatVector>& points, std::size_t dim) {
  Scaled s;
  s.scale = 1;
  for (const auto& p : points) {
    if (p.size() != dim) throw Error(ErrorKind::DimensionMismatch, "hull point has wrong length");
    for (const auto& x : p) mpz_lcm(s.scale.get_mpz_t(), s.scale.get_mpz_t(), x.get_den_mpz_t());
  }
  std::set<IntPoint> unique;
  for (const auto& p : points) {
    IntPoint q(dim);
    for (std::size_t i = 0; i < dim; ++i) q[i] = p[i].get_num() * (s.scale / p[i].get_den());
    unique.insert(std::move(q));
  }
  s.points.assign(unique.begin(), unique.end());
  return s;
}

RatVector unscale(const IntPoint& p, const Integer& scale) {
  RatVector r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = rat(p[i], scale);
  return r;
}

HullFacet make_facet(const IntPoint& normal, const IntPoint& on_plane, const Integer& scale) {
  RatVector n(normal.size());
  for (std::size_t i = 0; i < normal.size(); ++i) n[i] = Rational(normal[i]);
  n = primitive_integer(n);
  Rational offset = dot(n, unscale(on_plane, scale));
  return {std::move(n), std::move(offset)};
}

Integer cross2(const IntPoint& o, const IntPoint& a, const IntPoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

HullResult hull_1d(const Scaled& s) {
  if (s.points.size() < 2) throw Error(ErrorKind::SpanDeficient, "points do not span a segment");
  const IntPoint& lo = s.points.front();
  const IntPoint& hi = s.points.back();
  HullResult h;
  h.vertices = {unscale(lo, s.scale), unscale(hi, s.scale)};
  h.facets = {make_facet({Integer(-1)}, lo, s.scale), make_facet({Integer(1)}, hi, s.scale)};
  std::sort(h.facets.begin(), h.facets.end());
  return h;
}

HullResult hull_2d(const Scaled& s) {
  const auto& pts = s.points; // already lexicographically sorted
  if (pts.size() < 3) throw Error(ErrorKind::SpanDeficient, "points do not span the plane");
  std::vector<IntPoint> chain(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross2(chain[k - 2], chain[k - 1], p) <= 0) --k;
    chain[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(chain[k - 2], chain[k - 1], pts[i]) <= 0) --k;
    chain[k++] = pts[i];
  }
  chain.resize(k - 1);
  if (chain.size() < 3) throw Error(ErrorKind::SpanDeficient, "points do not span the plane");

  HullResult h;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const IntPoint& a = chain[i];
    const IntPoint& b = chain[(i + 1) % chain.size()];
    h.vertices.push_back(unscale(a, s.scale));
    h.facets.push_back(make_facet({b[1] - a[1], a[0] - b[0]}, a, s.scale));
  }
  std::sort(h.facets.begin(), h.facets.end());
  return h;
}

IntPoint sub3(const IntPoint& a, const IntPoint& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

IntPoint cross3(const IntPoint& u, const IntPoint& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Integer dot3(const IntPoint& u, const IntPoint& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

struct Face {
  std::array<std::size_t, 3> v;
  IntPoint normal;
  Integer offset;
  bool alive = true;
};

HullResult hull_3d(const Scaled& s) {
  const auto& pts = s.points;
  const std::size_t n = pts.size();
  auto degenerate = [] { return Error(ErrorKind::SpanDeficient, "points do not span 3-space"); };

  // initial tetrahedron
  std::size_t i0 = 0, i1 = n, i2 = n, i3 = n;
  for (std::size_t i = 1; i < n && i1 == n; ++i)
    if (pts[i] != pts[i0]) i1 = i;
  if (i1 == n) throw degenerate();
  for (std::size_t i = 1; i < n && i2 == n; ++i) {
    IntPoint c = cross3(sub3(pts[i1], pts[i0]), sub3(pts[i], pts[i0]));
    if (c[0] != 0 || c[1] != 0 || c[2] != 0) i2 = i;
  }
  if (i2 == n) throw degenerate();
  IntPoint base_normal = cross3(sub3(pts[i1], pts[i0]), sub3(pts[i2], pts[i0]));
  for (std::size_t i = 1; i < n && i3 == n; ++i)
    if (dot3(base_normal, sub3(pts[i], pts[i0])) != 0) i3 = i;
  if (i3 == n) throw degenerate();

  // 4 * centroid of the tetrahedron stays strictly inside every face
  IntPoint inside4(3);
  for (std::size_t c = 0; c < 3; ++c) inside4[c] = pts[i0][c] + pts[i1][c] + pts[i2][c] + pts[i3][c];

  std::vector<Face> faces;
  auto add_face = [&](std::size_t a, std::size_t b, std::size_t c) {
    Face f;
    f.v = {a, b, c};
    f.normal = cross3(sub3(pts[b], pts[a]), sub3(pts[c], pts[a]));
    f.offset = dot3(f.normal, pts[a]);
    if (dot3(f.normal, inside4) > 4 * f.offset) {
      std::swap(f.v[1], f.v[2]);
      for (auto& x : f.normal) x = -x;
      f.offset = -f.offset;
    }
    faces.push_back(std::move(f));
  };
  add_face(i0, i1, i2);
  add_face(i0, i1, i3);
  add_face(i0, i2, i3);
  add_face(i1, i2, i3);

  for (std::size_t p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (faces[f].alive && dot3(faces[f].normal, pts[p]) > faces[f].offset) visible.push_back(f);
    if (visible.empty()) continue;

    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (auto f : visible)
      for (int k = 0; k < 3; ++k) edges.emplace(faces[f].v[k], faces[f].v[(k + 1) % 3]);
    std::vector<std::pair<std::size_t, std::size_t>> horizon;
    for (const auto& [a, b] : edges)
      if (!edges.count({b, a})) horizon.emplace_back(a, b);
    for (auto f : visible) faces[f].alive = false;
    for (const auto& [a, b] : horizon) {
      Face f;
      f.v = {a, b, p};
      f.normal = cross3(sub3(pts[b], pts[a]), sub3(pts[p], pts[a]));
      f.offset = dot3(f.normal, pts[a]);
      faces.push_back(std::move(f));
    }
  }

  std::set<HullFacet> planes;
  std::set<std::size_t> on_hull;
  for (const auto& f : faces) {
    if (!f.alive) continue;
    planes.insert(make_facet(f.normal, pts[f.v[0]], s.scale));
    on_hull.insert(f.v.begin(), f.v.end());
  }

  HullResult h;
  h.facets.assign(planes.begin(), planes.end());
  for (auto idx : on_hull) {
    RatVector x = unscale(pts[idx], s.scale);
    std::vector<RatVector> active;
    for (const auto& pl : h.facets)
      if (dot(pl.normal, x) == pl.offset) active.push_back(pl.normal);
    if (rank(active) == 3) h.vertices.push_back(std::move(x));
  }
  std::sort(h.vertices.begin(), h.vertices.end());
  return h;
}

} // namespace

HullResult convex_hull(const std::vector<RatVector>& points, std::size_t dim) {
  if (dim > 3) throw Error(ErrorKind::DimensionTooLarge, "convex hull supports dimension <= 3");
  if (dim == 0) throw Error(ErrorKind::DimensionTooSmall, "convex hull needs dimension >= 1");
  Scaled s = to_integer_points(points, dim);
  switch (dim) {
  case 1: return hull_1d(s);
  case 2: return hull_2d(s);
  default: return hull_3d(s);
  }
}

} // namespace zonocert
