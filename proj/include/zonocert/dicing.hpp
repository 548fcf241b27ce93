#pragma once

#include "zonocert/errors.hpp"
#include "zonocert/lattice.hpp"
#include "zonocert/matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace zonocert {

using IndexSet = std::vector<std::size_t>;

/// Half set of dicing normals (one per +/- pair) with positive weights.
///
/// Each normal d describes the family of hyperplanes {x : d.x = k}, k
/// integer, through the origin.
class NormalSet {
public:
  /// Throws Error{InvalidInput} unless: dim >= 2, every normal has length
  /// dim and is nonzero, no two normals are parallel, the normals span Q^dim,
  /// and there is one positive weight per normal.
  NormalSet(std::size_t dim, std::vector<RatVector> normals, std::vector<Rational> weights);
  /// Unit weights.
  NormalSet(std::size_t dim, std::vector<RatVector> normals);

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t size() const noexcept { return normals_.size(); }
  const std::vector<RatVector>& normals() const noexcept { return normals_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const RatVector& normal(std::size_t i) const { return normals_.at(i); }
  const Rational& weight(std::size_t i) const { return weights_.at(i); }

  /// d x n matrix with the normals as columns.
  RatMatrix matrix() const;

  bool operator==(const NormalSet&) const = default;

private:
  std::size_t dim_;
  std::vector<RatVector> normals_;
  std::vector<Rational> weights_;
};

/// Dicing edge vectors, one representative per +/- pair. `provenance[k]`
/// lists every normal orthogonal to edge k (the union of the (d-1)-subsets
/// whose kernel produced it).
struct EdgeSet {
  std::size_t dim = 0;
  std::vector<RatVector> edges;
  std::vector<IndexSet> provenance;

  RatMatrix matrix() const { return RatMatrix::from_columns(edges, dim); }
  bool operator==(const EdgeSet&) const = default;
};

/// One (d-1)-subset whose kernel direction cannot be scaled to pair with
/// every normal in {0, +-1}.
struct EdgeWitness {
  IndexSet subset;
  RatVector kernel;
  std::vector<Rational> products;
};

class NotADicing : public Error {
public:
  explicit NotADicing(std::vector<EdgeWitness> witnesses);
  /// The first failing subset in lexicographic order.
  const EdgeWitness& witness() const { return witnesses_.front(); }
  /// Every failing subset.
  const std::vector<EdgeWitness>& witnesses() const noexcept { return witnesses_; }

private:
  std::vector<EdgeWitness> witnesses_;
};

/// Normals and edges after the change of coordinates L that makes them
/// 0/+-1 matrices containing the standard basis.
struct DicingRep {
  RatMatrix transform;      // L
  RatMatrix normals_matrix; // D' = (L^-1)^T D
  RatMatrix edges_matrix;   // E' = L E, with the columns of `basis_edges` sign-flipped to +e_i
  IndexSet basis_normals;   // first d independent normals, in input order
  IndexSet basis_edges;     // basis_edges[i] is the edge dual to basis_normals minus its i-th entry
  std::vector<int> edge_signs; // E' column k = edge_signs[k] * L e_k
  bool totally_unimodular = false;
};

/// Edge set characterized by conditions (E1)/(E2): one edge per hyperplane
/// spanned by d-1 normals, scaled so every normal pairs with it in {0,+-1}.
/// Throws NotADicing listing every subset that admits no such scaling.
EdgeSet compute_edge_set(const NormalSet& ns);

/// Basis of {x : d.x in Z for every normal d}: the dual of the lattice
/// spanned by the normals, in Hermite normal form. Throws NotADicing, and
/// Error{NotInLattice} if an edge falls outside the result.
LatticeBasis lattice_of_dicing(const NormalSet& ns);

/// Brute-force minor test. Throws Error{NonIntegerEntries}.
bool is_totally_unimodular(const RatMatrix& m);

/// Throws Error{RepresentationCheckFailed} if any 0/+-1, standard-basis or
/// total-unimodularity check fails.
DicingRep unimodular_representation(const NormalSet& ns, const EdgeSet& es);

/// Normals map through (L^-1)^T, edges through L; weights and provenance are
/// kept. Throws Error{Singular}.
std::pair<NormalSet, EdgeSet> apply_affine(const NormalSet& ns, const EdgeSet& es, const RatMatrix& l);

/// Indices of the first `dim` linearly independent vectors, in order.
IndexSet first_independent(const std::vector<RatVector>& vectors, std::size_t dim);

/// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class F> void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  IndexSet idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(static_cast<const IndexSet&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

} // namespace zonocert
