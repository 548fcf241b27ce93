#include "zonocert/export.hpp"
#include "zonocert/convex_hull.hpp"
#include "zonocert/linalg.hpp"
#include "zonocert/parallelohedron.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace zonocert {

int default_render_digits() {
  if (const char* env = std::getenv("ZONOCERT_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 40) return static_cast<int>(v);
  }
  return 12;
}

namespace {

std::vector<RatVector> patch_translations(const std::optional<LatticeBasis>& lattice, std::size_t dim, unsigned radius) {
  if (!lattice || radius == 0) return {zero_vector(dim)};
  const long r = static_cast<long>(radius);
  std::vector<RatVector> out;
  std::vector<long> k(dim, -r);
  while (true) {
    RatVector coords(dim);
    for (std::size_t i = 0; i < dim; ++i) coords[i] = k[i];
    out.push_back(lattice->matrix() * coords);
    std::size_t i = 0;
    while (i < dim && k[i] == r) k[i++] = -r;
    if (i == dim) break;
    ++k[i];
  }
  return out;
}

std::string svg_document(const Zonotope& z, const std::vector<RatVector>& translations,
                         const std::vector<RatVector>& arrows, int digits) {
  const auto polygon = convex_hull(signed_sums(z), 2).vertices;
  auto num = [&](const Rational& r) { return to_decimal(r, digits); };

  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  auto grow = [&](const RatVector& p) {
    const double x = p[0].get_d(), y = -p[1].get_d();
    lo_x = std::min(lo_x, x);
    hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y);
    hi_y = std::max(hi_y, y);
  };
  for (const auto& t : translations)
    for (const auto& v : polygon) grow(add(v, t));
  for (const auto& a : arrows) grow(a);
  const double pad = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y);

  std::ostringstream out;
  out.precision(digits);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lo_x - pad << ' ' << lo_y - pad << ' '
      << (hi_x - lo_x) + 2 * pad << ' ' << (hi_y - lo_y) + 2 * pad << "\">\n";
  out << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n";
  out << "  <g class=\"cells\" fill=\"none\" stroke=\"black\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\">\n";
  for (const auto& t : translations) {
    out << "    <polygon class=\"cell\" points=\"";
    for (std::size_t i = 0; i < polygon.size(); ++i) {
      RatVector p = add(polygon[i], t);
      out << (i ? " " : "") << num(p[0]) << ',' << num(-p[1]);
    }
    out << "\"/>\n";
  }
  out << "  </g>\n";
  if (!arrows.empty()) {
    out << "  <g class=\"facet-vectors\" stroke=\"red\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\">\n";
    for (const auto& a : arrows)
      out << "    <line class=\"facet-vector\" x1=\"0\" y1=\"0\" x2=\"" << num(a[0]) << "\" y2=\"" << num(-a[1])
          << "\" marker-end=\"url(#arrow)\"/>\n";
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

// Vertex indices of each facet polygon, counter-clockwise seen from outside.
std::vector<std::vector<std::size_t>> facet_polygons(const Zonotope& z, const std::vector<RatVector>& verts) {
  std::vector<std::vector<std::size_t>> polys;
  for (const auto& f : facets(z)) {
    for (int s : {1, -1}) {
      const RatVector n = scale(f.normal, Rational(s));
      const RatVector c = scale(f.center, Rational(s));
      std::vector<std::size_t> on;
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (dot(n, verts[i]) == f.support) on.push_back(i);
      auto frame = null_space(RatMatrix::from_rows({n}));
      const RatVector& u = frame[0];
      const RatVector& v = frame[1];
      auto coords = [&](std::size_t i) {
        RatVector rel = subtract(verts[i], c);
        return std::pair<Rational, Rational>{dot(u, rel), dot(v, rel)};
      };
      auto half = [](const std::pair<Rational, Rational>& p) {
        return (p.second > 0 || (p.second == 0 && p.first > 0)) ? 0 : 1;
      };
      std::sort(on.begin(), on.end(), [&](std::size_t a, std::size_t b) {
        auto pa = coords(a), pb = coords(b);
        if (half(pa) != half(pb)) return half(pa) < half(pb);
        return pa.first * pb.second - pa.second * pb.first > 0;
      });
      RatMatrix orient = RatMatrix::from_columns({u, v, n}, 3);
      if (det(orient) < 0) std::reverse(on.begin(), on.end());
      polys.push_back(std::move(on));
    }
  }
  return polys;
}

std::string obj_document(const Zonotope& z, const std::vector<RatVector>& translations, int digits) {
  const auto verts = vertices_oracle(z);
  const auto polys = facet_polygons(z, verts);
  std::ostringstream out;
  out << "# zonocert Dirichlet-Voronoi zonotope: " << verts.size() << " vertices, " << polys.size()
      << " facets per cell, " << translations.size() << " cell(s)\n";
  std::size_t base = 1;
  for (std::size_t t = 0; t < translations.size(); ++t) {
    out << "o cell_" << t << '\n';
    for (const auto& v : verts) {
      RatVector p = add(v, translations[t]);
      out << "v " << to_decimal(p[0], digits) << ' ' << to_decimal(p[1], digits) << ' ' << to_decimal(p[2], digits) << '\n';
    }
    for (const auto& poly : polys) {
      out << 'f';
      for (auto i : poly) out << ' ' << base + i;
      out << '\n';
    }
    base += verts.size();
  }
  return out.str();
}

void check_dimension(std::size_t d, ExportFormat format) {
  if (format == ExportFormat::Svg && d != 2)
    throw Error(ErrorKind::DimensionMismatch, "SVG export needs dimension 2, got " + std::to_string(d));
  if (format == ExportFormat::Obj && d != 3)
    throw Error(ErrorKind::DimensionMismatch, "OBJ export needs dimension 3, got " + std::to_string(d));
}

} // namespace

std::string export_geometry(const NormalSet& ns, const ExportOptions& options) {
  check_dimension(ns.dimension(), options.format);
  const Zonotope z = dv_zonotope(ns);
  const std::optional<LatticeBasis> lattice = lattice_of_dicing(ns);
  const auto translations = patch_translations(lattice, ns.dimension(), options.patch_radius);
  if (options.format == ExportFormat::Obj) return obj_document(z, translations, options.digits);
  std::vector<RatVector> arrows;
  for (const auto& v : facet_vectors(ns).vectors) {
    arrows.push_back(v);
    arrows.push_back(negate(v));
  }
  return svg_document(z, translations, arrows, options.digits);
}

std::string export_geometry(const Zonotope& z, const ExportOptions& options) {
  check_dimension(z.dimension(), options.format);
  if (options.patch_radius != 0)
    throw Error(ErrorKind::InvalidInput, "a bare zonotope has no lattice; use a normal set for patches");
  const auto translations = patch_translations(std::nullopt, z.dimension(), 0);
  if (options.format == ExportFormat::Obj) return obj_document(z, translations, options.digits);
  return svg_document(z, translations, {}, options.digits);
}

} // namespace zonocert
