#include "rotayb/matrix.hpp"

#include "rotayb/error.hpp"

#include <sstream>

namespace rotayb {

namespace {

void require_same_shape(const Matrix &a, const Matrix &b, const char *op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + " of " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector> &rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector> &cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    m.set_column(c, cols[c]);
  return m;
}

Matrix Matrix::diagonal(const Vector &diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m(i, i) = diag[i];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  auto s = row_span(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vector &v) {
  if (v.size() != cols_)
    throw Error(ErrorCode::DimensionMismatch, "row length " + std::to_string(v.size()) +
                                                  ", expected " + std::to_string(cols_));
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(r, c) = v[c];
}

void Matrix::set_column(std::size_t c, const Vector &v) {
  if (v.size() != rows_)
    throw Error(ErrorCode::DimensionMismatch, "column length " + std::to_string(v.size()) +
                                                  ", expected " + std::to_string(rows_));
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto &x : data_)
    if (x != 0)
      return false;
  return true;
}

Vector Matrix::apply(const Vector &x) const {
  if (x.size() != cols_)
    throw Error(ErrorCode::DimensionMismatch, "applying " + std::to_string(rows_) + "x" +
                                                  std::to_string(cols_) + " matrix to length " +
                                                  std::to_string(x.size()));
  Vector y(rows_, Scalar(0));
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c] == 0)
      continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if ((*this)(r, c) != 0)
        y[r] += (*this)(r, c) * x[c];
  }
  return y;
}

Matrix &Matrix::operator+=(const Matrix &other) {
  require_same_shape(*this, other, "sum");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += other.data_[i];
  return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
  require_same_shape(*this, other, "difference");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= other.data_[i];
  return *this;
}

Matrix &Matrix::operator*=(const Scalar &c) {
  for (auto &x : data_)
    x *= c;
  return *this;
}

Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
Matrix operator*(const Scalar &c, Matrix m) { return m *= c; }
Matrix operator-(Matrix m) { return m *= Scalar(-1); }

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch,
                "product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar &aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0)
          out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix power(const Matrix &a, unsigned exponent) {
  if (!a.is_square())
    throw Error(ErrorCode::DimensionMismatch, "power of a non-square matrix");
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (exponent) {
    if (exponent & 1u)
      result = result * base;
    exponent >>= 1u;
    if (exponent)
      base = base * base;
  }
  return result;
}

Scalar trace(const Matrix &a) {
  if (!a.is_square())
    throw Error(ErrorCode::DimensionMismatch, "trace of a non-square matrix");
  Scalar t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    t += a(i, i);
  return t;
}

Matrix hconcat(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "hconcat row counts differ");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c)
      out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix vconcat(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "vconcat column counts differ");
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      out(a.rows() + r, c) = b(r, c);
  return out;
}

std::string format_matrix(const Matrix &m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r)
      out << ", ";
    out << format_vector(m.row(r));
  }
  out << ']';
  return out.str();
}

} // namespace rotayb
