#pragma once

#include "zonocert/matrix.hpp"

#include <compare>
#include <vector>

namespace zonocert {

/// Supporting hyperplane {x : normal.x = offset} of a hull facet; the
/// normal is a primitive integer vector pointing outwards.
struct HullFacet {
  RatVector normal;
  Rational offset;
  bool operator==(const HullFacet&) const = default;
  auto operator<=>(const HullFacet& rhs) const {
    if (normal != rhs.normal) return normal < rhs.normal ? std::strong_ordering::less : std::strong_ordering::greater;
    if (offset != rhs.offset) return offset < rhs.offset ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

struct HullResult {
  /// Extreme points only. Counter-clockwise in 2D, lexicographic otherwise.
  std::vector<RatVector> vertices;
  /// One entry per distinct facet hyperplane, sorted.
  std::vector<HullFacet> facets;
};

/// Exact convex hull of a full-dimensional point set in dimension 1..3
/// (monotone chain in 2D, incremental beneath-beyond in 3D). Duplicate and
/// non-extreme points are dropped.
/// Throws Error{DimensionTooLarge} for dim > 3, Error{SpanDeficient} if the
/// points do not span.
HullResult convex_hull(const std::vector<RatVector>& points, std::size_t dim);

} // namespace zonocert
