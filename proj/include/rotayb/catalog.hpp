#pragma once

#include "rotayb/lie_algebra.hpp"
#include "rotayb/quadratic.hpp"
#include "rotayb/rota_baxter.hpp"
#include "rotayb/structure.hpp"
#include "rotayb/tensor.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rotayb::catalog {

/// What an expectation recomputes. `subject` names a tensor or operator of
/// the entry, `other` a second one where a comparison is involved.
enum class Check {
  Cybe,                // tensor solves CYBE
  SymmetricInvariant,  // r + tau(r) is ad-invariant
  SymmetricPartEquals, // r + tau(r) == other
  Weights,             // find_weights(operator)
  OperatorOf,          // operator_of(form, tensor) == other operator
  Adjoint,             // adjoint(operator) == other operator
  SkewAdjoint,         // R + R* == 0 for operator_of(tensor)
  Centroid,            // R + R* in the centroid, R = operator_of(tensor)
  Theorem1,            // verdict of theorem1_condition(tensor, lambda)
  Remark1,             // verdict of remark1_condition(tensor, lambda)
  Remark1Weights,      // kernel_condition_weights(tensor, adjoint)
  IdealDim,            // dim I_lambda(tensor)
  Theorem2,
  Theorem3,
  Theorem4,
  Corollary3,
  ThetaZero,           // R + R* + lambda id == 0 for R = operator_of(tensor)
  InvariantFormsDim,   // dimension of the space of invariant forms
  Harmonize,           // harmonize_weights(components, lambda)
};

std::string_view to_string(Check c);

/// Expected outcome: a boolean, a weight set, a dimension, a verdict string
/// ("pass", "fail", "not-applicable:<Code>", or an error code), or scalars.
using Expected = std::variant<bool, WeightSet, std::size_t, std::string, std::vector<Scalar>>;

struct Expectation {
  std::string name;
  Check check;
  std::string subject;
  Scalar lambda = 0;
  Expected value;
  std::string other = {};
};

struct CatalogEntry {
  std::string name;
  std::string description;
  LieAlgebra algebra;
  std::optional<BilinearForm> form;
  std::vector<std::pair<std::string, Tensor2>> tensors;
  std::vector<std::pair<std::string, Matrix>> operators;
  std::vector<Component> components; // Harmonize inputs, when present
  std::vector<Expectation> expected;
  std::vector<std::string> notes;

  const Tensor2 &tensor(std::string_view name) const;
  const Matrix &op(std::string_view name) const;
};

struct Listing {
  std::string name;
  std::string description;
};

/// Deterministic order.
std::vector<Listing> list();

/// Throws Error(UnknownEntry).
CatalogEntry get(std::string_view name);

/// sl2 with basis (e, h, f); [h, e] = 2e, [h, f] = -2f, [e, f] = h.
LieAlgebra sl2();
/// gl2 with basis (e11, e12, e21, e22).
LieAlgebra gl2();
/// e ⊗ f + 1/4 h ⊗ h on sl2.
Tensor2 sl2_standard_r();

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok;
};

/// Recomputes every expectation of the entry from first principles.
std::vector<CheckResult> verify(const CatalogEntry &entry);

} // namespace rotayb::catalog
