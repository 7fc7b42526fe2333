#pragma once

#include "rotayb/lie_algebra.hpp"
#include "rotayb/quadratic.hpp"
#include "rotayb/tensor.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rotayb {

/// Set of weights λ for which an operator satisfies the Rota-Baxter identity.
/// The identity is affine in λ, so the set is empty, a single value, or
/// every scalar; a finite set is kept sorted and deduplicated.
class WeightSet {
public:
  enum class Kind { Empty, Finite, All };

  static WeightSet empty() { return WeightSet(Kind::Empty, {}); }
  static WeightSet all() { return WeightSet(Kind::All, {}); }
  static WeightSet of(std::vector<Scalar> values);

  Kind kind() const noexcept { return kind_; }
  const std::vector<Scalar> &values() const noexcept { return values_; }
  bool contains(const Scalar &lambda) const;
  bool is_empty() const noexcept { return kind_ == Kind::Empty; }
  /// True for a one-element finite set.
  bool is_singleton() const noexcept { return kind_ == Kind::Finite && values_.size() == 1; }

  friend bool operator==(const WeightSet &, const WeightSet &) = default;

private:
  WeightSet(Kind kind, std::vector<Scalar> values) : kind_(kind), values_(std::move(values)) {}
  Kind kind_;
  std::vector<Scalar> values_;
};

std::string format_weight_set(const WeightSet &w);

struct DefectReport {
  struct Entry {
    std::size_t i, j;
    Vector defect;
  };
  std::vector<Entry> pairs;    // first `limit` failing basis pairs
  std::size_t total_failures = 0;
  bool empty() const noexcept { return total_failures == 0; }
};

/// [R x, R y] - R([R x, y] + [x, R y] + λ[x, y]).
Vector rb_defect(const LieAlgebra &algebra, const Matrix &op, const Scalar &lambda,
                 const Vector &x, const Vector &y);

struct RotaBaxterCheck {
  bool holds;
  DefectReport report;
};

inline constexpr std::size_t default_defect_limit = 16;

/// Exhaustive over basis pairs i < j.
RotaBaxterCheck is_rota_baxter(const LieAlgebra &algebra, const Matrix &op,
                               const Scalar &lambda,
                               std::size_t limit = default_defect_limit);

/// Solution set of the system {a_k + λ·b_k = 0}.
WeightSet affine_weight_set(const std::vector<std::pair<Vector, Vector>> &equations);

/// Exactly the weights for which op is a Rota-Baxter operator.
WeightSet find_weights(const LieAlgebra &algebra, const Matrix &op);

/// θ_α = R + R* + α·id.
Matrix theta(const Matrix &op, const Matrix &op_adjoint, const Scalar &alpha);

/// [R x, R y] - R([x, R y]) + R([R* x, y]) for R = operator_of(form, r).
Vector prop1_identity1(const LieAlgebra &algebra, const BilinearForm &form, const Tensor2 &r,
                       const Vector &x, const Vector &y);
/// [R* x, R* y] + R*([x, R y]) - R*([R* x, y]).
Vector prop1_identity2(const LieAlgebra &algebra, const BilinearForm &form, const Tensor2 &r,
                       const Vector &x, const Vector &y);

/// [φ(e_i), e_j] == φ([e_i, e_j]) on all basis pairs.
bool centroid_check(const LieAlgebra &algebra, const Matrix &phi);

} // namespace rotayb
