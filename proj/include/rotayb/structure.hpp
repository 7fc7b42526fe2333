#pragma once

#include "rotayb/error.hpp"
#include "rotayb/lie_algebra.hpp"
#include "rotayb/quadratic.hpp"
#include "rotayb/rota_baxter.hpp"
#include "rotayb/tensor.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rotayb {

enum class Verdict { Holds, Fails, NotApplicable };

std::string_view to_string(Verdict v);

struct Witness {
  using Value = std::variant<bool, Scalar, std::string, Vector, Subspace, Matrix, WeightSet>;
  std::string label;
  Value value;
};

/// Outcome of one structural check.
///
/// `failures` lists the ways the checked claim fails and is empty unless the
/// verdict is Fails. `contradictions` is reserved for situations where a
/// theorem's hypotheses were verified but its conclusion was not; these are
/// always errors in the library itself. A NotApplicable verdict names the
/// unmet hypothesis in `blocked_by`.
struct StructureReport {
  std::string claim;
  Verdict verdict = Verdict::Holds;
  std::optional<ErrorCode> blocked_by;
  std::string direction;
  std::vector<std::string> failures;
  std::vector<std::string> contradictions;
  std::vector<Witness> witnesses;

  bool holds() const noexcept { return verdict == Verdict::Holds; }
  bool consistent() const noexcept { return contradictions.empty(); }

  const Witness::Value *find(std::string_view label) const;
};

/// Subspaces of an ambient subspace, labelled.
struct Decomposition {
  Subspace ambient;
  std::vector<Subspace> parts;
  std::vector<std::string> labels;

  /// Parts are independent and sum to the ambient subspace.
  bool is_direct() const;
};

/// Condition [R a, b] + [R* a, b] + λ[a, b] ∈ ker(R) on all basis pairs, with
/// R = operator_of(form, r). The report cross-checks the condition against
/// CYBE and the Rota-Baxter property in both directions.
/// Throws Error(DegenerateForm).
StructureReport theorem1_condition(const LieAlgebra &algebra, const BilinearForm &form,
                                   const Tensor2 &r, const Scalar &lambda);
/// Same condition with ker(R*), governing whether R* is Rota-Baxter.
StructureReport remark1_condition(const LieAlgebra &algebra, const BilinearForm &form,
                                  const Tensor2 &r, const Scalar &lambda);

/// Every λ for which the kernel condition holds (the condition is affine in λ).
/// `use_adjoint` selects ker(R*) instead of ker(R).
WeightSet kernel_condition_weights(const LieAlgebra &algebra, const BilinearForm &form,
                                   const Tensor2 &r, bool use_adjoint);

/// If θ_λ maps L into Z(L) for a Rota-Baxter operator of nonzero weight λ,
/// tensor_of(op) must solve CYBE.
StructureReport corollary1_check(const LieAlgebra &algebra, const BilinearForm &form,
                                 const Matrix &op, const Scalar &lambda);

/// For a Rota-Baxter operator of nonzero weight λ with θ_λ = 0, the tensor
/// solves CYBE and its symmetric part is ad-invariant.
StructureReport corollary4_check(const LieAlgebra &algebra, const BilinearForm &form,
                                 const Matrix &op, const Scalar &lambda);

/// θ_λ([L, L]). Throws Error(HypothesisViolated) unless r + τ(r) is
/// ad-invariant, and Error(TheoremContradiction) if the result is not an ideal
/// inside [L, L].
Subspace ideal_I_lambda(const LieAlgebra &algebra, const BilinearForm &form, const Tensor2 &r,
                        const Scalar &lambda);

/// Computes I_λ and, when it is R-invariant, descends R and R* to L/I_λ and
/// checks that both are Rota-Baxter of weight λ there and θ_λ vanishes on the
/// quotient's commutators.
StructureReport theorem2_pipeline(const LieAlgebra &algebra, const BilinearForm &form,
                                  const Tensor2 &r, const Scalar &lambda);

/// Non-abelian and every basis line generates the whole algebra as an ideal.
bool is_simple(const LieAlgebra &algebra);

/// For simple L: the weight of R is a nonzero singleton λ and θ_λ = 0.
StructureReport corollary3_check(const LieAlgebra &algebra, const BilinearForm &form,
                                 const Tensor2 &r);

/// [L, L] = I1 ⊕ I2 with I1 = θ_λ([L, L]) and I2 = ker θ_λ ∩ [L, L].
std::pair<Decomposition, StructureReport>
theorem3_decomposition(const LieAlgebra &algebra, const BilinearForm &form, const Tensor2 &r,
                       const Scalar &lambda);

/// L = I1 ⊕ I2 from the root spaces of θ = R + R*: I1 = L(-λ), I2 the rest.
std::pair<Decomposition, StructureReport>
theorem4_decomposition(const LieAlgebra &algebra, const BilinearForm &form, const Tensor2 &r,
                       const Scalar &lambda);

struct Component {
  LieAlgebra algebra;
  BilinearForm form;
  Tensor2 r;
};

/// Scalars μ_i such that on the direct sum with form Σ μ_i ω_i the operator
/// of Σ r_i is Rota-Baxter of weight `target`.
/// Throws Error(ZeroTargetWeight), Error(MixedZeroNonzeroWeights),
/// Error(NotRotaBaxter) for a component with no weight, and
/// Error(TheoremContradiction) if the combined operator fails the check.
std::vector<Scalar> harmonize_weights(const std::vector<Component> &components,
                                      const Scalar &target);

/// Direct sum of the components with forms scaled by mu.
Component combine_components(const std::vector<Component> &components,
                             const std::vector<Scalar> &mu);

} // namespace rotayb
