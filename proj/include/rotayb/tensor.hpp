#pragma once

#include "rotayb/lie_algebra.hpp"
#include "rotayb/quadratic.hpp"

#include <cstddef>
#include <tuple>
#include <vector>

namespace rotayb {

/// Element of L ⊗ L; coeff(p, q) is the coefficient of e_p ⊗ e_q.
class Tensor2 {
public:
  Tensor2() = default;
  explicit Tensor2(std::size_t dim) : coeffs_(dim, dim) {}
  explicit Tensor2(Matrix coeffs);

  struct Term {
    std::size_t i, j;
    Scalar coeff;
  };
  /// Densifies a sparse term list; repeated (i, j) entries accumulate.
  static Tensor2 from_terms(std::size_t dim, const std::vector<Term> &terms);
  /// a ⊗ b.
  static Tensor2 outer(const Vector &a, const Vector &b);

  std::size_t dim() const noexcept { return coeffs_.rows(); }
  const Matrix &coeffs() const noexcept { return coeffs_; }
  Scalar &operator()(std::size_t p, std::size_t q) { return coeffs_(p, q); }
  const Scalar &operator()(std::size_t p, std::size_t q) const { return coeffs_(p, q); }

  bool is_zero() const { return coeffs_.is_zero(); }
  /// Nonzero terms in row-major order.
  std::vector<Term> terms() const;

  Tensor2 &operator+=(const Tensor2 &o) {
    coeffs_ += o.coeffs_;
    return *this;
  }
  Tensor2 &operator-=(const Tensor2 &o) {
    coeffs_ -= o.coeffs_;
    return *this;
  }
  friend Tensor2 operator+(Tensor2 a, const Tensor2 &b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2 &b) { return a -= b; }
  friend Tensor2 operator*(const Scalar &c, Tensor2 t) {
    t.coeffs_ *= c;
    return t;
  }
  friend bool operator==(const Tensor2 &, const Tensor2 &) = default;

private:
  Matrix coeffs_;
};

/// Element of L ⊗ L ⊗ L, dense.
class Tensor3 {
public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim) : dim_(dim), data_(dim * dim * dim, Scalar(0)) {}

  std::size_t dim() const noexcept { return dim_; }
  Scalar &operator()(std::size_t p, std::size_t q, std::size_t s) {
    return data_[(p * dim_ + q) * dim_ + s];
  }
  const Scalar &operator()(std::size_t p, std::size_t q, std::size_t s) const {
    return data_[(p * dim_ + q) * dim_ + s];
  }

  bool is_zero() const;

  struct Term {
    std::size_t i, j, k;
    Scalar coeff;
  };
  std::vector<Term> terms() const;

  friend bool operator==(const Tensor3 &, const Tensor3 &) = default;

private:
  std::size_t dim_ = 0;
  std::vector<Scalar> data_;
};

/// Switch map a ⊗ b ↦ b ⊗ a.
Tensor2 tau(const Tensor2 &r);

/// [t, y] = Σ x_1 ⊗ .. ⊗ [x_i, y] ⊗ .. ⊗ x_n.
Tensor2 ad_action(const LieAlgebra &algebra, const Tensor2 &t, const Vector &y);
Tensor3 ad_action(const LieAlgebra &algebra, const Tensor3 &t, const Vector &y);

bool is_ad_invariant(const LieAlgebra &algebra, const Tensor2 &t);
bool is_ad_invariant(const LieAlgebra &algebra, const Tensor3 &t);

/// C_L(r) = [r12, r13] - [r23, r12] + [r13, r23].
Tensor3 cybe_element(const LieAlgebra &algebra, const Tensor2 &r);
bool is_cybe_solution(const LieAlgebra &algebra, const Tensor2 &r);

/// δ_r(a) = [r, a].
Tensor2 cocommutator(const LieAlgebra &algebra, const Tensor2 &r, const Vector &a);

/// R(a) = Σ ω(b_i, a) a_i, i.e. the matrix coeffs · G.
Matrix operator_of(const BilinearForm &form, const Tensor2 &r);
/// Inverse of operator_of: coeffs = R · G^{-1}. Throws Error(DegenerateForm).
Tensor2 tensor_of(const BilinearForm &form, const Matrix &op);

} // namespace rotayb
