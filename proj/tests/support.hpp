#pragma once

#include "oracles.hpp"

#include "rotayb/catalog.hpp"
#include "rotayb/linalg.hpp"
#include "rotayb/tensor.hpp"

#include <random>

namespace support {

using rotayb::Matrix;
using rotayb::Scalar;
using rotayb::Vector;

inline oracle::Mat to_oracle(const Matrix &m) {
  oracle::Mat out = oracle::zeros(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i][j] = m(i, j);
  return out;
}

inline Matrix from_oracle(const oracle::Mat &m) {
  Matrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out(i, j) = m[i][j];
  return out;
}

inline oracle::Mat to_oracle(const rotayb::Tensor2 &t) { return to_oracle(t.coeffs()); }

// Cube of coefficients of a three-fold tensor.
inline std::vector<std::vector<oracle::Row>> cube(const rotayb::Tensor3 &t) {
  const std::size_t n = t.dim();
  std::vector<std::vector<oracle::Row>> c(n, std::vector<oracle::Row>(n, oracle::Row(n)));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t s = 0; s < n; ++s)
        c[p][q][s] = t(p, q, s);
  return c;
}

inline Scalar q(long num, long den = 1) {
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

class Random {
public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  // Small rationals, zero with probability about 1/4.
  Scalar scalar(long bound = 4) {
    if (integer(0, 3) == 0)
      return 0;
    return q(integer(-bound, bound), integer(1, 3));
  }

  Scalar nonzero_scalar(long bound = 4) {
    Scalar s;
    do
      s = q(integer(-bound, bound), integer(1, 3));
    while (s == 0);
    return s;
  }

  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto &x : v)
      x = scalar();
    return v;
  }

  Matrix matrix(std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m(i, j) = scalar();
    return m;
  }

  Matrix symmetric_nondegenerate(std::size_t n) {
    while (true) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
          m(i, j) = m(j, i) = scalar();
      if (rotayb::inverse(m))
        return m;
    }
  }

  // Matrix of prescribed rank r.
  Matrix of_rank(std::size_t rows, std::size_t cols, std::size_t r) {
    while (true) {
      Matrix m = matrix(rows, r) * matrix(r, cols);
      if (rotayb::rank(m) == r)
        return m;
    }
  }

private:
  std::mt19937_64 gen_;
};

} // namespace support
