#include "rotayb/quadratic.hpp"

#include "rotayb/error.hpp"

namespace rotayb {

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square())
    throw Error(ErrorCode::NotSymmetric, "Gram matrix is not square");
  if (gram_ != gram_.transpose())
    throw Error(ErrorCode::NotSymmetric, "Gram matrix is not symmetric");
  inverse_ = inverse(gram_);
}

Scalar BilinearForm::operator()(const Vector &x, const Vector &y) const {
  Vector gy = gram_.apply(y);
  if (x.size() != gy.size())
    throw Error(ErrorCode::DimensionMismatch, "form evaluated on vectors of wrong length");
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += x[i] * gy[i];
  return s;
}

const Matrix &BilinearForm::inverse_gram() const {
  if (!inverse_)
    throw Error(ErrorCode::DegenerateForm, "Gram matrix is singular");
  return *inverse_;
}

BilinearForm operator*(const Scalar &c, const BilinearForm &form) {
  return BilinearForm(c * form.gram());
}

BilinearForm direct_sum(const BilinearForm &first, const BilinearForm &second) {
  const std::size_t n1 = first.dim(), n = n1 + second.dim();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      g(i, j) = first.gram()(i, j);
  for (std::size_t i = 0; i < second.dim(); ++i)
    for (std::size_t j = 0; j < second.dim(); ++j)
      g(n1 + i, n1 + j) = second.gram()(i, j);
  return BilinearForm(std::move(g));
}

bool is_invariant(const LieAlgebra &algebra, const BilinearForm &form) {
  const std::size_t n = algebra.dim();
  if (form.dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "form and algebra dimensions differ");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ij = algebra.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector ek = unit_vector(n, k);
        if (form(ij, ek) != form(unit_vector(n, i), algebra.basis_bracket(j, k)))
          return false;
      }
    }
  return true;
}

bool is_nondegenerate(const BilinearForm &form) { return form.is_nondegenerate(); }

bool is_quadratic(const LieAlgebra &algebra, const BilinearForm &form) {
  return is_nondegenerate(form) && is_invariant(algebra, form);
}

BilinearForm killing_form(const LieAlgebra &algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i)
    ads.push_back(algebra.ad_basis(i));
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      g(i, j) = trace(ads[i] * ads[j]);
      g(j, i) = g(i, j);
    }
  return BilinearForm(std::move(g));
}

Matrix adjoint(const BilinearForm &form, const Matrix &op) {
  if (op.rows() != form.dim() || op.cols() != form.dim())
    throw Error(ErrorCode::DimensionMismatch, "operator and form dimensions differ");
  return form.inverse_gram() * op.transpose() * form.gram();
}

std::pair<LieAlgebra, BilinearForm> dual_numbers_extension(const LieAlgebra &algebra,
                                                           const BilinearForm &chi) {
  if (!is_invariant(algebra, chi))
    throw Error(ErrorCode::PreconditionViolated, "form is not invariant");
  if (!is_nondegenerate(chi))
    throw Error(ErrorCode::PreconditionViolated, "form is degenerate");

  const std::size_t n = algebra.dim(), m = 2 * n;
  std::vector<std::string> labels = algebra.labels();
  for (const auto &l : algebra.labels())
    labels.push_back(l + "_t");

  BracketTable t(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector b = algebra.basis_bracket(i, j);
      Vector low = zero_vector(m), high = zero_vector(m);
      for (std::size_t k = 0; k < n; ++k) {
        low[k] = b[k];
        high[n + k] = b[k];
      }
      t.set(i, j, low);       // [a, b]
      t.set(i, n + j, high);  // [a, b·t] = [a, b]·t
      t.set(n + i, j, high);  // [a·t, b] = [a, b]·t
    }                         // [a·t, b·t] = 0

  Matrix g(m, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar &c = chi.gram()(i, j);
      g(i, j) = c;
      g(i, n + j) = c;
      g(n + i, j) = c;
    }
  return {LieAlgebra(std::move(labels), t), BilinearForm(std::move(g))};
}

std::vector<BilinearForm> invariant_forms_basis(const LieAlgebra &algebra) {
  const std::size_t n = algebra.dim();
  // Unknowns: g(a, b) for a <= b.
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n));
  std::size_t unknowns = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      index[a][b] = index[b][a] = unknowns++;

  std::vector<Vector> equations;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ij = algebra.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector jk = algebra.basis_bracket(j, k);
        // Σ_m c_ij^m g(m, k) - Σ_m c_jk^m g(i, m) = 0
        Vector eq = zero_vector(unknowns);
        for (std::size_t m = 0; m < n; ++m) {
          eq[index[m][k]] += ij[m];
          eq[index[i][m]] -= jk[m];
        }
        if (!is_zero(eq))
          equations.push_back(std::move(eq));
      }
    }

  Subspace solutions = equations.empty() ? Subspace::full(unknowns)
                                         : kernel(Matrix::from_rows(equations, unknowns));
  std::vector<BilinearForm> forms;
  for (const auto &s : solutions.basis_vectors()) {
    Matrix g(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g(a, b) = s[index[a][b]];
    forms.emplace_back(std::move(g));
  }
  return forms;
}

} // namespace rotayb
