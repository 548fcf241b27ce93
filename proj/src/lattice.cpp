#include "zonocert/lattice.hpp"
#include "zonocert/errors.hpp"
#include "zonocert/linalg.hpp"

namespace zonocert {

LatticeBasis::LatticeBasis(RatMatrix basis) : basis_(std::move(basis)) {
  if (!basis_.square()) throw Error(ErrorKind::NotSquare, "lattice basis must be d x d");
  inverse_ = inverse(basis_);
}

RatVector LatticeBasis::coordinates(std::span<const Rational> x) const { return inverse_ * x; }

bool LatticeBasis::contains(std::span<const Rational> x) const {
  return is_integral(coordinates(x));
}

Rational LatticeBasis::determinant() const { return det(basis_); }

namespace {

using IntColumns = std::vector<std::vector<Integer>>;

// Column operation: (ci, cj) <- (s*ci + t*cj, u*ci + v*cj), with sv - tu = 1.
void combine(IntColumns& a, std::size_t i, std::size_t j, const Integer& s, const Integer& t,
             const Integer& u, const Integer& v) {
  for (std::size_t r = 0; r < a[i].size(); ++r) {
    Integer x = a[i][r], y = a[j][r];
    a[i][r] = s * x + t * y;
    a[j][r] = u * x + v * y;
  }
}

} // namespace

LatticeBasis hnf_lattice_basis(const std::vector<RatVector>& generators, std::size_t dim) {
  for (const auto& g : generators)
    if (g.size() != dim) throw Error(ErrorKind::DimensionMismatch, "generator has wrong length");
  if (dim == 0 || rank(generators) < dim)
    throw Error(ErrorKind::DegenerateSpan, "generators do not span the ambient space");

  Integer den = 1;
  for (const auto& g : generators)
    for (const auto& x : g) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());

  // a[col][row]
  IntColumns a(generators.size(), std::vector<Integer>(dim));
  for (std::size_t c = 0; c < generators.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r)
      a[c][r] = generators[c][r].get_num() * (den / generators[c][r].get_den());

  const std::size_t m = a.size();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (a[j][i] == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[i][i].get_mpz_t(), a[j][i].get_mpz_t());
      Integer u = -(a[j][i] / g), v = a[i][i] / g;
      combine(a, i, j, s, t, u, v);
    }
    if (a[i][i] == 0) throw Error(ErrorKind::DegenerateSpan, "generators do not span the ambient space");
    if (a[i][i] < 0)
      for (auto& x : a[i]) x = -x;
    for (std::size_t j = 0; j < i; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[j][i].get_mpz_t(), a[i][i].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t r = 0; r < dim; ++r) a[j][r] -= q * a[i][r];
    }
  }

  RatMatrix basis(dim, dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) basis(r, c) = rat(a[c][r], den);
  return LatticeBasis(std::move(basis));
}

LatticeBasis dual_lattice_basis(const LatticeBasis& b) {
  return LatticeBasis(inverse(b.matrix()).transpose());
}

bool same_lattice(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.dimension() != b.dimension()) return false;
  return hnf_lattice_basis(a.vectors(), a.dimension()) == hnf_lattice_basis(b.vectors(), b.dimension());
}

} // namespace zonocert
