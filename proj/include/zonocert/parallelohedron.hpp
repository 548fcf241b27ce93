#pragma once

#include "zonocert/dicing.hpp"
#include "zonocert/lattice.hpp"
#include "zonocert/zonotope.hpp"

#include <string>
#include <vector>

namespace zonocert {

/// Positive definite form phi(x) = x^T Q x.
class QuadraticForm {
public:
  /// Throws Error{NotPositiveDefinite} unless Q is symmetric with positive
  /// leading principal minors.
  explicit QuadraticForm(RatMatrix q);

  const RatMatrix& matrix() const noexcept { return q_; }
  std::size_t dimension() const noexcept { return q_.rows(); }
  Rational operator()(std::span<const Rational> x) const;
  /// Bilinear form x^T Q y.
  Rational pair(std::span<const Rational> x, std::span<const Rational> y) const;
  const RatMatrix& inverse() const noexcept { return inverse_; }

  bool operator==(const QuadraticForm&) const = default;

private:
  RatMatrix q_;
  RatMatrix inverse_;
};

/// Facet vectors N(Z), one per +/- pair. vectors[k] is the lattice vector
/// whose bisector carries facet facet_link[k] of the DV zonotope.
struct FacetVectorSet {
  std::vector<RatVector> vectors;
  std::vector<std::size_t> facet_link;
  bool operator==(const FacetVectorSet&) const = default;
};

/// edge_set.edges[edge] == sign * facet_vectors.vectors[facet_vector].
struct EdgeFacetMatch {
  std::size_t edge;
  std::size_t facet_vector;
  int sign;
  bool operator==(const EdgeFacetMatch&) const = default;
};

class MismatchError : public Error {
public:
  MismatchError(std::vector<RatVector> missing, std::vector<RatVector> extra);
  /// Edges with no matching facet vector.
  const std::vector<RatVector>& missing() const noexcept { return missing_; }
  /// Facet vectors with no matching edge.
  const std::vector<RatVector>& extra() const noexcept { return extra_; }

private:
  std::vector<RatVector> missing_;
  std::vector<RatVector> extra_;
};

struct BasisSelection {
  std::vector<std::size_t> indices; // into FacetVectorSet::vectors
  std::vector<int> signs;           // basis vector i = signs[i] * vectors[indices[i]]
  Rational lattice_coordinate_det;
};

struct VoronoiCertificate {
  NormalSet normal_set;
  EdgeSet edge_set;
  QuadraticForm form;
  Zonotope zonotope;
  FacetVectorSet facet_vectors;
  std::vector<EdgeFacetMatch> ne_bijection;
  LatticeBasis lattice;
  DicingRep representation;
  BasisSelection basis;
  bool verified = false;
};

struct DvCell {
  std::vector<RatVector> vertices;       // sorted
  std::vector<RatVector> lattice_points; // nonzero points within the bound
  Rational bound;                        // phi bound used for enumeration
};

struct DeloneVertex {
  RatVector vertex;
  Rational radius;                      // min phi(vertex - p)
  std::vector<RatVector> equidistant;   // lattice points achieving it
};

struct DeloneReport {
  std::vector<DeloneVertex> vertices;
};

/// Q = sum w_d d d^T.
QuadraticForm quadratic_form(const NormalSet& ns);

/// z_d = Q^-1 (w_d d), in input order.
std::vector<RatVector> zone_vectors(const NormalSet& ns);

/// Throws NotADicing if the normals fail the edge-set conditions.
Zonotope dv_zonotope(const NormalSet& ns);

/// Brute-force Dirichlet-Voronoi cell of `lattice` under `q` for d <= 3 by
/// intersecting the bisector half-spaces of every lattice point with
/// phi <= bound. The bound is `radius_multiplier` times the largest phi over
/// the basis vectors and their pairwise sums and differences.
///
/// Completeness is certified: every vertex must be phi-equidistant to at
/// least d+1 enumerated points, and every point that can carry a facet
/// (phi <= 4 * max phi(vertex)) must lie within the bound. Otherwise throws
/// Error{EnumerationInsufficient}; retry with a larger multiplier.
DvCell dv_cell_oracle(const LatticeBasis& lattice, const QuadraticForm& q,
                      const Rational& radius_multiplier = Rational(4));

/// Throws Error{NotInLattice} if a bisector vector leaves the lattice.
FacetVectorSet facet_vectors(const NormalSet& ns);

/// Throws MismatchError when the two sets differ.
std::vector<EdgeFacetMatch> check_n_equals_e(const FacetVectorSet& fv, const EdgeSet& es);

/// Picks the facet vectors dual to the representation's basis normals.
/// Throws Error{BasisCheckFailed}.
BasisSelection extract_basis(const FacetVectorSet& fv, const EdgeSet& es, const DicingRep& rep,
                             const std::vector<EdgeFacetMatch>& matching, const LatticeBasis& lattice,
                             const NormalSet& ns);

/// Throws Error{DualityViolation} with the offending vertex, Error{DimensionTooLarge}.
DeloneReport delone_duality_check(const NormalSet& ns, const Rational& radius_multiplier = Rational(4));

/// Runs the whole pipeline and the independent verifier. Errors carry the
/// failing stage: edge-set, lattice, quadratic-form, zonotope, facet-vectors,
/// matching, representation, basis, verify.
VoronoiCertificate certify_second_voronoi(const NormalSet& ns);

struct VerificationResult {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Re-checks every certificate invariant from the stored fields only.
VerificationResult verify_certificate(const VoronoiCertificate& cert);

} // namespace zonocert
