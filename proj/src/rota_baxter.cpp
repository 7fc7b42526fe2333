#include "rotayb/rota_baxter.hpp"

#include "rotayb/error.hpp"

#include <algorithm>

namespace rotayb {

WeightSet WeightSet::of(std::vector<Scalar> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty())
    return empty();
  return WeightSet(Kind::Finite, std::move(values));
}

bool WeightSet::contains(const Scalar &lambda) const {
  switch (kind_) {
  case Kind::Empty: return false;
  case Kind::All: return true;
  case Kind::Finite: return std::binary_search(values_.begin(), values_.end(), lambda);
  }
  return false;
}

std::string format_weight_set(const WeightSet &w) {
  switch (w.kind()) {
  case WeightSet::Kind::Empty: return "no weight";
  case WeightSet::Kind::All: return "all weights";
  case WeightSet::Kind::Finite: break;
  }
  std::string out = "{";
  for (std::size_t i = 0; i < w.values().size(); ++i) {
    if (i)
      out += ", ";
    out += format_scalar(w.values()[i]);
  }
  return out + "}";
}

namespace {

void require_operator(const LieAlgebra &algebra, const Matrix &op) {
  if (op.rows() != algebra.dim() || op.cols() != algebra.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "operator is " + std::to_string(op.rows()) + "x" + std::to_string(op.cols()) +
                    " on an algebra of dimension " + std::to_string(algebra.dim()));
}

// [R x, R y] - R([R x, y] + [x, R y]); the λ-free part of the defect.
Vector defect_constant(const LieAlgebra &algebra, const Matrix &op, const Vector &x,
                       const Vector &y) {
  const Vector rx = op.apply(x), ry = op.apply(y);
  Vector inner = algebra.bracket(rx, y);
  inner += algebra.bracket(x, ry);
  return algebra.bracket(rx, ry) - op.apply(inner);
}

} // namespace

Vector rb_defect(const LieAlgebra &algebra, const Matrix &op, const Scalar &lambda,
                 const Vector &x, const Vector &y) {
  require_operator(algebra, op);
  Vector d = defect_constant(algebra, op, x, y);
  if (lambda != 0)
    add_scaled(d, -lambda, op.apply(algebra.bracket(x, y)));
  return d;
}

RotaBaxterCheck is_rota_baxter(const LieAlgebra &algebra, const Matrix &op,
                               const Scalar &lambda, std::size_t limit) {
  require_operator(algebra, op);
  const std::size_t n = algebra.dim();
  RotaBaxterCheck result{true, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector d = rb_defect(algebra, op, lambda, unit_vector(n, i), unit_vector(n, j));
      if (is_zero(d))
        continue;
      result.holds = false;
      ++result.report.total_failures;
      if (result.report.pairs.size() < limit)
        result.report.pairs.push_back({i, j, std::move(d)});
    }
  return result;
}

WeightSet affine_weight_set(const std::vector<std::pair<Vector, Vector>> &equations) {
  std::optional<Scalar> candidate;
  bool constant_nonzero = false;
  for (const auto &[a, b] : equations) {
    for (std::size_t k = 0; k < b.size() && !candidate; ++k)
      if (b[k] != 0)
        candidate = -a[k] / b[k];
    constant_nonzero = constant_nonzero || !is_zero(a);
  }
  if (!candidate)
    return constant_nonzero ? WeightSet::empty() : WeightSet::all();
  for (const auto &[a, b] : equations) {
    Vector d = a;
    add_scaled(d, *candidate, b);
    if (!is_zero(d))
      return WeightSet::empty();
  }
  return WeightSet::of({*candidate});
}

WeightSet find_weights(const LieAlgebra &algebra, const Matrix &op) {
  require_operator(algebra, op);
  const std::size_t n = algebra.dim();
  // defect(λ) = A_ij + λ B_ij with B_ij = -R([e_i, e_j]).
  std::vector<std::pair<Vector, Vector>> equations;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector x = unit_vector(n, i), y = unit_vector(n, j);
      equations.emplace_back(defect_constant(algebra, op, x, y),
                             -op.apply(algebra.bracket(x, y)));
    }
  return affine_weight_set(equations);
}

Matrix theta(const Matrix &op, const Matrix &op_adjoint, const Scalar &alpha) {
  if (op.rows() != op_adjoint.rows() || op.cols() != op_adjoint.cols() || !op.is_square())
    throw Error(ErrorCode::DimensionMismatch, "theta of operators with mismatched shapes");
  return op + op_adjoint + alpha * Matrix::identity(op.rows());
}

Vector prop1_identity1(const LieAlgebra &algebra, const BilinearForm &form, const Tensor2 &r,
                       const Vector &x, const Vector &y) {
  const Matrix op = operator_of(form, r);
  const Matrix adj = adjoint(form, op);
  Vector out = algebra.bracket(op.apply(x), op.apply(y));
  out -= op.apply(algebra.bracket(x, op.apply(y)));
  out += op.apply(algebra.bracket(adj.apply(x), y));
  return out;
}

Vector prop1_identity2(const LieAlgebra &algebra, const BilinearForm &form, const Tensor2 &r,
                       const Vector &x, const Vector &y) {
  const Matrix op = operator_of(form, r);
  const Matrix adj = adjoint(form, op);
  Vector out = algebra.bracket(adj.apply(x), adj.apply(y));
  out += adj.apply(algebra.bracket(x, op.apply(y)));
  out -= adj.apply(algebra.bracket(adj.apply(x), y));
  return out;
}

bool centroid_check(const LieAlgebra &algebra, const Matrix &phi) {
  require_operator(algebra, phi);
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector image = phi.column(i);
    for (std::size_t j = 0; j < n; ++j)
      if (algebra.bracket(image, unit_vector(n, j)) != phi.apply(algebra.basis_bracket(i, j)))
        return false;
  }
  return true;
}

} // namespace rotayb
