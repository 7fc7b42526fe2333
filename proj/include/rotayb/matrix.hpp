#pragma once

#include "rotayb/scalar.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rotayb {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix from_rows(const std::vector<Vector> &rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector> &cols, std::size_t rows);
  static Matrix diagonal(const Vector &diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Scalar> row_span(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_row(std::size_t r, const Vector &v);
  void set_column(std::size_t c, const Vector &v);

  Matrix transpose() const;
  bool is_zero() const;

  /// Matrix times coordinate column.
  Vector apply(const Vector &x) const;

  Matrix &operator+=(const Matrix &other);
  Matrix &operator-=(const Matrix &other);
  Matrix &operator*=(const Scalar &c);

  friend bool operator==(const Matrix &a, const Matrix &b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(Matrix a, const Matrix &b);
Matrix operator-(Matrix a, const Matrix &b);
Matrix operator*(const Matrix &a, const Matrix &b);
Matrix operator*(const Scalar &c, Matrix m);
Matrix operator-(Matrix m);

Matrix power(const Matrix &a, unsigned exponent);
Scalar trace(const Matrix &a);

/// Horizontal concatenation [a | b].
Matrix hconcat(const Matrix &a, const Matrix &b);
/// Vertical concatenation.
Matrix vconcat(const Matrix &a, const Matrix &b);

std::string format_matrix(const Matrix &m);

} // namespace rotayb
