#pragma once

#include "rotayb/lie_algebra.hpp"
#include "rotayb/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rotayb {

/// Symmetric bilinear form given by its Gram matrix, gram(i, j) = ω(e_i, e_j).
class BilinearForm {
public:
  BilinearForm() = default;
  /// Throws Error(NotSymmetric) unless gram is square and symmetric.
  explicit BilinearForm(Matrix gram);

  std::size_t dim() const noexcept { return gram_.rows(); }
  const Matrix &gram() const noexcept { return gram_; }

  Scalar operator()(const Vector &x, const Vector &y) const;

  bool is_nondegenerate() const noexcept { return inverse_.has_value(); }
  /// G^{-1}; throws Error(DegenerateForm) for a degenerate form.
  const Matrix &inverse_gram() const;

  friend bool operator==(const BilinearForm &a, const BilinearForm &b) {
    return a.gram_ == b.gram_;
  }

private:
  Matrix gram_;
  std::optional<Matrix> inverse_; // empty for a degenerate form
};

BilinearForm operator*(const Scalar &c, const BilinearForm &form);
BilinearForm direct_sum(const BilinearForm &first, const BilinearForm &second);

/// ω([e_i, e_j], e_k) == ω(e_i, [e_j, e_k]) on every basis triple.
bool is_invariant(const LieAlgebra &algebra, const BilinearForm &form);
bool is_nondegenerate(const BilinearForm &form);
/// Invariant and non-degenerate.
bool is_quadratic(const LieAlgebra &algebra, const BilinearForm &form);

/// κ(e_i, e_j) = tr(ad e_i ∘ ad e_j).
BilinearForm killing_form(const LieAlgebra &algebra);

/// R* = G^{-1} R^T G, the unique operator with ω(R x, y) = ω(x, R* y).
/// Throws Error(DegenerateForm).
Matrix adjoint(const BilinearForm &form, const Matrix &op);

/// L ⊗ F[t]/(t²) with basis (e_1..e_n, e_1·t..e_n·t) and the form
/// ω(a·t^p, b·t^q) = χ(a, b)·π(t^{p+q}), π(f) = f_0 + f_1.
/// Throws Error(PreconditionViolated) unless (algebra, chi) is quadratic.
std::pair<LieAlgebra, BilinearForm> dual_numbers_extension(const LieAlgebra &algebra,
                                                           const BilinearForm &chi);

/// Basis of the space of symmetric invariant bilinear forms on the algebra.
std::vector<BilinearForm> invariant_forms_basis(const LieAlgebra &algebra);

} // namespace rotayb
