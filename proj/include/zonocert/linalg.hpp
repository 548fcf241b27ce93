#pragma once

#include "zonocert/matrix.hpp"

#include <vector>

namespace zonocert {

/// Rank over Q, by fraction-free (Bareiss) elimination on integer rows.
std::size_t rank(const RatMatrix& m);
std::size_t rank(const std::vector<RatVector>& rows);

/// Spanning vector of the one-dimensional null space of `m` (rank cols-1).
/// Normalized to a primitive integer vector with positive leading entry.
/// Throws Error{RankMismatch} otherwise.
RatVector kernel_line(const RatMatrix& m);

/// Basis of the null space {x : m x = 0}, one vector per free column of the
/// reduced row echelon form.
std::vector<RatVector> null_space(const RatMatrix& m);

/// Reduced row echelon form; the nonzero rows are a canonical basis of the
/// row space.
RatMatrix rref(const RatMatrix& m);

Rational det(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);

/// Solves m x = b for square nonsingular m.
RatVector solve(const RatMatrix& m, std::span<const Rational> b);

} // namespace zonocert
