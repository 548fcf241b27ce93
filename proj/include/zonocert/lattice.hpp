#pragma once

#include "zonocert/matrix.hpp"

#include <vector>

namespace zonocert {

/// Full-rank lattice in Q^d, stored as a d x d matrix whose columns are the
/// basis vectors.
class LatticeBasis {
public:
  /// Throws Error{Singular} if the columns are dependent, Error{NotSquare}
  /// if the matrix is not d x d.
  explicit LatticeBasis(RatMatrix basis);

  const RatMatrix& matrix() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.cols(); }
  RatVector vector(std::size_t i) const { return basis_.column(i); }
  std::vector<RatVector> vectors() const { return basis_.column_vectors(); }

  /// Coordinates of x in this basis.
  RatVector coordinates(std::span<const Rational> x) const;
  bool contains(std::span<const Rational> x) const;
  /// Signed covolume: det of the basis matrix.
  Rational determinant() const;

  bool operator==(const LatticeBasis& rhs) const = default;

private:
  RatMatrix basis_;
  RatMatrix inverse_;
};

/// Lattice of all integer combinations of `generators`, in column Hermite
/// normal form: lower triangular, positive diagonal, entries left of the
/// diagonal reduced into [0, diagonal).
/// Throws Error{DegenerateSpan} if the generators do not span Q^dim.
LatticeBasis hnf_lattice_basis(const std::vector<RatVector>& generators, std::size_t dim);

/// Basis whose matrix is the inverse transpose of b's.
LatticeBasis dual_lattice_basis(const LatticeBasis& b);

/// Same lattice test via canonical forms.
bool same_lattice(const LatticeBasis& a, const LatticeBasis& b);

} // namespace zonocert
