#pragma once

#include "zonocert/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace zonocert {

using RatVector = std::vector<Rational>;

RatVector zero_vector(std::size_t dim);
RatVector unit_vector(std::size_t dim, std::size_t axis);
RatVector make_vector(std::initializer_list<long> entries);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RatVector add(std::span<const Rational> a, std::span<const Rational> b);
RatVector subtract(std::span<const Rational> a, std::span<const Rational> b);
RatVector scale(std::span<const Rational> a, const Rational& s);
RatVector negate(std::span<const Rational> a);
bool is_zero(std::span<const Rational> a);
bool is_integral(std::span<const Rational> a);

/// True if a and b are nonzero and a = t*b for some rational t.
bool parallel(std::span<const Rational> a, std::span<const Rational> b);

/// Scales a nonzero vector to a primitive integer vector whose first
/// nonzero entry is positive.
RatVector primitive_direction(std::span<const Rational> v);

/// Same as `primitive_direction` but keeps the original orientation.
RatVector primitive_integer(std::span<const Rational> v);

std::string to_string(std::span<const Rational> v);

/// Dense row-major rational matrix with fixed shape.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  /// The vectors become the columns of the matrix; `dim` is needed when
  /// the list is empty.
  static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t dim);
  static RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  std::vector<RatVector> row_vectors() const;
  std::vector<RatVector> column_vectors() const;

  RatMatrix transpose() const;
  RatMatrix select_columns(std::span<const std::size_t> idx) const;
  RatMatrix select_rows(std::span<const std::size_t> idx) const;

  RatMatrix operator*(const RatMatrix& rhs) const;
  RatVector operator*(std::span<const Rational> v) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator*(const Rational& s) const;

  bool operator==(const RatMatrix& rhs) const = default;

  bool all_integer() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Outer product a*b^T.
RatMatrix outer(std::span<const Rational> a, std::span<const Rational> b);

} // namespace zonocert
