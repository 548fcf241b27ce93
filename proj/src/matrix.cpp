#include "zonocert/matrix.hpp"
#include "zonocert/errors.hpp"

#include <cassert>

namespace zonocert {

RatVector zero_vector(std::size_t dim) { return RatVector(dim, Rational(0)); }

RatVector unit_vector(std::size_t dim, std::size_t axis) {
  RatVector v = zero_vector(dim);
  v.at(axis) = 1;
  return v;
}

RatVector make_vector(std::initializer_list<long> entries) {
  RatVector v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector add(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "add: length mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector subtract(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "subtract: length mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector scale(std::span<const Rational> a, const Rational& s) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

RatVector negate(std::span<const Rational> a) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool is_zero(std::span<const Rational> a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

bool is_integral(std::span<const Rational> a) {
  for (const auto& x : a)
    if (!is_integer(x)) return false;
  return true;
}

bool parallel(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  // all 2x2 minors vanish
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

RatVector primitive_integer(std::span<const Rational> v) {
  if (is_zero(v)) throw Error(ErrorKind::ZeroDirection, "cannot normalize the zero vector");
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> ints(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i] / g);
  return r;
}

RatVector primitive_direction(std::span<const Rational> v) {
  RatVector r = primitive_integer(v);
  for (const auto& x : r) {
    if (x == 0) continue;
    if (x < 0) r = negate(r);
    break;
  }
  return r;
}

std::string to_string(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw Error(ErrorKind::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVector> v;
  for (const auto& r : rows) v.push_back(make_vector(r));
  return from_rows(v);
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols, std::size_t dim) {
  RatMatrix m(dim, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != dim) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<RatVector> RatMatrix::row_vectors() const {
  std::vector<RatVector> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<RatVector> RatMatrix::column_vectors() const {
  std::vector<RatVector> out;
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::select_columns(std::span<const std::size_t> idx) const {
  RatMatrix m(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) m(r, c) = (*this)(r, idx[c]);
  return m;
}

RatMatrix RatMatrix::select_rows(std::span<const std::size_t> idx) const {
  RatMatrix m(idx.size(), cols_);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(idx[r], c);
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  RatMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) p(i, j) += a * rhs(k, j);
    }
  return p;
}

RatVector RatMatrix::operator*(std::span<const Rational> v) const {
  if (cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  RatVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  RatMatrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += rhs.data_[i];
  return s;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
  RatMatrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

bool RatMatrix::all_integer() const { return is_integral(data_); }

RatMatrix outer(std::span<const Rational> a, std::span<const Rational> b) {
  RatMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
  return m;
}

} // namespace zonocert
