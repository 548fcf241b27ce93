#pragma once

#include "zonocert/dicing.hpp"
#include "zonocert/matrix.hpp"

#include <optional>
#include <vector>

namespace zonocert {

/// Centered zonotope { sum t_i v_i : t_i in [-1/2, 1/2] }.
class Zonotope {
public:
  /// Parallel generators are merged into one by summing lengths. Throws
  /// Error{InvalidInput} for a zero generator or wrong length and
  /// Error{SpanDeficient} if the generators do not span Q^dim.
  Zonotope(std::size_t dim, const std::vector<RatVector>& generators);

  std::size_t dimension() const noexcept { return dim_; }
  const std::vector<RatVector>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }

  bool operator==(const Zonotope&) const = default;

private:
  std::size_t dim_;
  std::vector<RatVector> generators_;
};

/// One facet of a +/- pair. The facet is {x : normal.x = support}, a
/// translate by `center` of the zonotope spanned by `generator_subset`.
struct FacetDescriptor {
  RatVector normal;
  Rational support;
  IndexSet generator_subset;
  RatVector center;
};

enum class RidgeShape { Parallelogram, Hexagon, Other };
std::string_view to_string(RidgeShape shape);

/// Projection of the zonotope along a codimension-2 flat of its generators.
struct RidgeClass {
  IndexSet flat; // generators lying in the flat
  std::size_t direction_count = 0;
  RidgeShape classification = RidgeShape::Other;
};

struct VenkovReport {
  bool parallelohedron = false;
  // Both hold for every zonotope: it is symmetric about the origin and each
  // facet is itself a zonotope.
  bool centrally_symmetric = true;
  bool facets_centrally_symmetric = true;
  std::vector<RidgeClass> ridges;
  std::optional<std::size_t> witness; // first ridge that is neither 4- nor 6-gon
};

/// One descriptor per +/- facet pair, in order of first appearance over the
/// lexicographic (d-1)-subsets of generators.
std::vector<FacetDescriptor> facets(const Zonotope& z);

/// Throws Error{DimensionTooSmall} for d < 2.
std::vector<RidgeClass> ridge_classification(const Zonotope& z);

VenkovReport venkov_check(const Zonotope& z);

/// Half-width 1/2 sum |direction.v_i|. Throws Error{ZeroDirection}.
Rational support_value(const Zonotope& z, std::span<const Rational> direction);

/// All 2^n signed half-sums, unfiltered.
std::vector<RatVector> signed_sums(const Zonotope& z);

/// Brute-force vertex set: hull of the signed half-sums, sorted
/// lexicographically. Throws Error{DimensionTooLarge} for d > 3.
std::vector<RatVector> vertices_oracle(const Zonotope& z);

} // namespace zonocert
