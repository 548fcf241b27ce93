#include "zonocert/linalg.hpp"
#include "zonocert/errors.hpp"

#include <utility>

namespace zonocert {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Clears denominators row by row. Returns the product of the row scale
// factors so determinants can be recovered.
Integer to_integer_rows(const RatMatrix& m, IntRows& out) {
  out.assign(m.rows(), std::vector<Integer>(m.cols()));
  Integer total = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r][c] = m(r, c).get_num() * (den / m(r, c).get_den());
    total *= den;
  }
  return total;
}

// Bareiss fraction-free elimination in place. Returns the rank; `sign`
// tracks row swaps and `last_pivot` ends as the determinant for a square
// full-rank input.
std::size_t bareiss(IntRows& a, std::size_t cols, int& sign, Integer& last_pivot) {
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  last_pivot = prev;
  return r;
}

} // namespace

std::size_t rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntRows a;
  to_integer_rows(m, a);
  int sign = 1;
  Integer piv;
  return bareiss(a, m.cols(), sign, piv);
}

std::size_t rank(const std::vector<RatVector>& rows) {
  if (rows.empty()) return 0;
  return rank(RatMatrix::from_rows(rows));
}

Rational det(const RatMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "det: matrix is not square");
  if (m.rows() == 0) return 1;
  IntRows a;
  Integer scale = to_integer_rows(m, a);
  int sign = 1;
  Integer piv;
  if (bareiss(a, m.cols(), sign, piv) < m.rows()) return 0;
  return rat(piv * sign, scale);
}

RatMatrix rref(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return a;
}

std::vector<RatVector> null_space(const RatMatrix& m) {
  const std::size_t n = m.cols();
  RatMatrix a = rref(m);
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c)
      if (a(r, c) != 0) {
        pivot_col.push_back(c);
        is_pivot[c] = true;
        break;
      }
  }
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v = zero_vector(n);
    v[f] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatVector kernel_line(const RatMatrix& m) {
  const std::size_t d = m.cols();
  std::size_t rk = rank(m);
  if (d == 0 || rk + 1 != d)
    throw Error(ErrorKind::RankMismatch,
                "kernel_line: rank " + std::to_string(rk) + " but " + std::to_string(d) +
                    " columns need rank " + std::to_string(d == 0 ? 0 : d - 1));
  auto ns = null_space(m);
  return primitive_direction(ns.front());
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "inverse: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RatMatrix red = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (red(i, i) != 1) throw Error(ErrorKind::Singular, "inverse: matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  return inv;
}

RatVector solve(const RatMatrix& m, std::span<const Rational> b) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "solve: matrix is not square");
  const std::size_t n = m.rows();
  if (b.size() != n) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length mismatch");
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  RatMatrix red = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (red(i, i) != 1) throw Error(ErrorKind::Singular, "solve: matrix is singular");
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = red(i, n);
  return x;
}

} // namespace zonocert
