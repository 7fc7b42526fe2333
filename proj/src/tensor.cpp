#include "rotayb/tensor.hpp"

#include "rotayb/error.hpp"

namespace rotayb {

namespace {

void require_dim(const LieAlgebra &algebra, std::size_t dim, const char *what) {
  if (algebra.dim() != dim)
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " of dimension " +
                                                  std::to_string(dim) + " used with algebra of dimension " +
                                                  std::to_string(algebra.dim()));
}

// Column p holds [e_p, y].
Matrix right_action(const LieAlgebra &algebra, const Vector &y) {
  return -algebra.ad(y);
}

} // namespace

Tensor2::Tensor2(Matrix coeffs) : coeffs_(std::move(coeffs)) {
  if (!coeffs_.is_square())
    throw Error(ErrorCode::DimensionMismatch, "tensor coefficient grid is not square");
}

Tensor2 Tensor2::from_terms(std::size_t dim, const std::vector<Term> &terms) {
  Tensor2 t(dim);
  for (const auto &term : terms) {
    if (term.i >= dim || term.j >= dim)
      throw Error(ErrorCode::DimensionMismatch, "tensor term index out of range");
    t(term.i, term.j) += term.coeff;
  }
  return t;
}

Tensor2 Tensor2::outer(const Vector &a, const Vector &b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "outer product of vectors of different length");
  Tensor2 t(a.size());
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = 0; q < b.size(); ++q)
      t(p, q) = a[p] * b[q];
  return t;
}

std::vector<Tensor2::Term> Tensor2::terms() const {
  std::vector<Term> out;
  for (std::size_t p = 0; p < dim(); ++p)
    for (std::size_t q = 0; q < dim(); ++q)
      if (coeffs_(p, q) != 0)
        out.push_back({p, q, coeffs_(p, q)});
  return out;
}

bool Tensor3::is_zero() const {
  for (const auto &x : data_)
    if (x != 0)
      return false;
  return true;
}

std::vector<Tensor3::Term> Tensor3::terms() const {
  std::vector<Term> out;
  for (std::size_t p = 0; p < dim_; ++p)
    for (std::size_t q = 0; q < dim_; ++q)
      for (std::size_t s = 0; s < dim_; ++s)
        if ((*this)(p, q, s) != 0)
          out.push_back({p, q, s, (*this)(p, q, s)});
  return out;
}

Tensor2 tau(const Tensor2 &r) { return Tensor2(r.coeffs().transpose()); }

Tensor2 ad_action(const LieAlgebra &algebra, const Tensor2 &t, const Vector &y) {
  require_dim(algebra, t.dim(), "tensor");
  const Matrix m = right_action(algebra, y);
  return Tensor2(m * t.coeffs() + t.coeffs() * m.transpose());
}

Tensor3 ad_action(const LieAlgebra &algebra, const Tensor3 &t, const Vector &y) {
  const std::size_t n = t.dim();
  require_dim(algebra, n, "tensor");
  const Matrix m = right_action(algebra, y);
  Tensor3 out(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t s = 0; s < n; ++s) {
        const Scalar &c = t(p, q, s);
        if (c == 0)
          continue;
        for (std::size_t a = 0; a < n; ++a) {
          if (m(a, p) != 0)
            out(a, q, s) += c * m(a, p);
          if (m(a, q) != 0)
            out(p, a, s) += c * m(a, q);
          if (m(a, s) != 0)
            out(p, q, a) += c * m(a, s);
        }
      }
  return out;
}

bool is_ad_invariant(const LieAlgebra &algebra, const Tensor2 &t) {
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    if (!ad_action(algebra, t, unit_vector(algebra.dim(), i)).is_zero())
      return false;
  return true;
}

bool is_ad_invariant(const LieAlgebra &algebra, const Tensor3 &t) {
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    if (!ad_action(algebra, t, unit_vector(algebra.dim(), i)).is_zero())
      return false;
  return true;
}

Tensor3 cybe_element(const LieAlgebra &algebra, const Tensor2 &r) {
  const std::size_t n = r.dim();
  require_dim(algebra, n, "tensor");
  Tensor3 out(n);
  // With r = Σ c(p,q) e_p ⊗ e_q:
  //   [r12, r13] = Σ c(p,q) c(s,t) [e_p, e_s] ⊗ e_q ⊗ e_t
  //   [r23, r12] = Σ c(p,q) c(s,t) e_p ⊗ [e_s, e_q] ⊗ e_t
  //   [r13, r23] = Σ c(p,q) c(s,t) e_p ⊗ e_s ⊗ [e_q, e_t]
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vector b = algebra.basis_bracket(x, y);
      if (is_zero(b))
        continue;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          // first term: p = x, s = y, q = u, t = v
          const Scalar c1 = r(x, u) * r(y, v);
          // second term: s = x, q = y, p = u, t = v
          const Scalar c2 = r(u, y) * r(x, v);
          // third term: q = x, t = y, p = u, s = v
          const Scalar c3 = r(u, x) * r(v, y);
          for (std::size_t a = 0; a < n; ++a) {
            if (b[a] == 0)
              continue;
            if (c1 != 0)
              out(a, u, v) += b[a] * c1;
            if (c2 != 0)
              out(u, a, v) -= b[a] * c2;
            if (c3 != 0)
              out(u, v, a) += b[a] * c3;
          }
        }
    }
  return out;
}

bool is_cybe_solution(const LieAlgebra &algebra, const Tensor2 &r) {
  return cybe_element(algebra, r).is_zero();
}

Tensor2 cocommutator(const LieAlgebra &algebra, const Tensor2 &r, const Vector &a) {
  return ad_action(algebra, r, a);
}

Matrix operator_of(const BilinearForm &form, const Tensor2 &r) {
  if (form.dim() != r.dim())
    throw Error(ErrorCode::DimensionMismatch, "form and tensor dimensions differ");
  return r.coeffs() * form.gram();
}

Tensor2 tensor_of(const BilinearForm &form, const Matrix &op) {
  if (op.rows() != form.dim() || op.cols() != form.dim())
    throw Error(ErrorCode::DimensionMismatch, "operator and form dimensions differ");
  return Tensor2(op * form.inverse_gram());
}

} // namespace rotayb
