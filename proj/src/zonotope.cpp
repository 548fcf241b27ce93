#include "zonocert/zonotope.hpp"
#include "zonocert/convex_hull.hpp"
#include "zonocert/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace zonocert {

Zonotope::Zonotope(std::size_t dim, const std::vector<RatVector>& generators) : dim_(dim) {
  if (dim_ == 0) throw Error(ErrorKind::InvalidInput, "zonotope dimension must be positive");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const RatVector& v = generators[i];
    if (v.size() != dim_)
      throw Error(ErrorKind::InvalidInput, "generators[" + std::to_string(i) + "] has wrong length");
    if (is_zero(v)) throw Error(ErrorKind::InvalidInput, "generators[" + std::to_string(i) + "] is zero");
    auto it = std::find_if(generators_.begin(), generators_.end(),
                           [&](const RatVector& g) { return parallel(g, v); });
    if (it == generators_.end()) {
      generators_.push_back(v);
      continue;
    }
    // same line: lengths add, orientation of the earlier generator wins
    *it = dot(*it, v) > 0 ? add(*it, v) : subtract(*it, v);
  }
  if (rank(generators_) < dim_)
    throw Error(ErrorKind::SpanDeficient, "zonotope generators do not span the ambient space");
}

std::string_view to_string(RidgeShape shape) {
  switch (shape) {
  case RidgeShape::Parallelogram: return "Parallelogram";
  case RidgeShape::Hexagon: return "Hexagon";
  case RidgeShape::Other: return "Other";
  }
  return "Other";
}

std::vector<FacetDescriptor> facets(const Zonotope& z) {
  const std::size_t d = z.dimension();
  const auto& gens = z.generators();
  std::vector<FacetDescriptor> out;
  std::set<RatVector> seen;

  if (d == 1) {
    // the only facet pair is the pair of endpoints
    RatVector n{Rational(1)};
    FacetDescriptor f{n, support_value(z, n), {}, zero_vector(1)};
    for (const auto& g : gens) f.center[0] += (g[0] > 0 ? g[0] : -g[0]) / 2;
    out.push_back(std::move(f));
    return out;
  }

  for_each_subset(gens.size(), d - 1, [&](const IndexSet& subset) {
    std::vector<RatVector> rows;
    for (auto i : subset) rows.push_back(gens[i]);
    RatMatrix m = RatMatrix::from_rows(rows);
    if (rank(m) != d - 1) return;
    RatVector normal = kernel_line(m);
    if (!seen.insert(normal).second) return;

    FacetDescriptor f;
    f.normal = normal;
    f.support = 0;
    f.center = zero_vector(d);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Rational p = dot(normal, gens[i]);
      if (p == 0) {
        f.generator_subset.push_back(i);
        continue;
      }
      f.support += abs(p) / 2;
      f.center = add(f.center, scale(gens[i], Rational(sign(p)) / 2));
    }
    out.push_back(std::move(f));
  });
  return out;
}

std::vector<RidgeClass> ridge_classification(const Zonotope& z) {
  const std::size_t d = z.dimension();
  if (d < 2) throw Error(ErrorKind::DimensionTooSmall, "ridge classification needs dimension >= 2");
  const auto& gens = z.generators();
  std::vector<RidgeClass> out;
  std::set<std::vector<RatVector>> seen;

  for_each_subset(gens.size(), d - 2, [&](const IndexSet& subset) {
    std::vector<RatVector> rows;
    for (auto i : subset) rows.push_back(gens[i]);
    RatMatrix m = rows.empty() ? RatMatrix(0, d) : RatMatrix::from_rows(rows);
    if (rank(m) != d - 2) return;
    std::vector<RatVector> key;
    if (!rows.empty())
      for (const auto& r : rref(m).row_vectors())
        if (!is_zero(r)) key.push_back(r);
    if (!seen.insert(key).second) return;

    // the two annihilators of the flat give an exact map R^d / flat -> Q^2
    std::vector<RatVector> complement = null_space(m);
    RidgeClass rc;
    std::set<RatVector> directions;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      RatVector image{dot(complement[0], gens[i]), dot(complement[1], gens[i])};
      if (is_zero(image)) {
        rc.flat.push_back(i);
        continue;
      }
      directions.insert(primitive_direction(image));
    }
    rc.direction_count = directions.size();
    rc.classification = rc.direction_count == 2   ? RidgeShape::Parallelogram
                        : rc.direction_count == 3 ? RidgeShape::Hexagon
                                                  : RidgeShape::Other;
    out.push_back(std::move(rc));
  });
  return out;
}

VenkovReport venkov_check(const Zonotope& z) {
  VenkovReport report;
  report.ridges = ridge_classification(z);
  for (std::size_t i = 0; i < report.ridges.size(); ++i)
    if (report.ridges[i].classification == RidgeShape::Other) {
      report.witness = i;
      break;
    }
  report.parallelohedron = !report.witness.has_value();
  return report;
}

Rational support_value(const Zonotope& z, std::span<const Rational> direction) {
  if (direction.size() != z.dimension())
    throw Error(ErrorKind::DimensionMismatch, "direction has wrong length");
  if (is_zero(direction)) throw Error(ErrorKind::ZeroDirection, "support direction is zero");
  Rational h = 0;
  for (const auto& g : z.generators()) h += abs(dot(direction, g));
  return h / 2;
}

std::vector<RatVector> signed_sums(const Zonotope& z) {
  const std::size_t n = z.size();
  if (n > 20) throw Error(ErrorKind::InvalidInput, "too many generators for signed-sum enumeration");
  std::vector<RatVector> pts;
  pts.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RatVector p = zero_vector(z.dimension());
    for (std::size_t i = 0; i < n; ++i) {
      const Rational half = (mask >> i & 1U) ? Rational(1, 2) : Rational(-1, 2);
      for (std::size_t c = 0; c < p.size(); ++c) p[c] += half * z.generators()[i][c];
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

std::vector<RatVector> vertices_oracle(const Zonotope& z) {
  if (z.dimension() > 3) throw Error(ErrorKind::DimensionTooLarge, "vertex oracle supports dimension <= 3");
  std::vector<RatVector> v = convex_hull(signed_sums(z), z.dimension()).vertices;
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace zonocert
