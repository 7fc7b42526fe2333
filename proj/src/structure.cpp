#include "rotayb/structure.hpp"

#include <algorithm>

namespace rotayb {

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::Holds: return "pass";
  case Verdict::Fails: return "fail";
  case Verdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

const Witness::Value *StructureReport::find(std::string_view label) const {
  for (const auto &w : witnesses)
    if (w.label == label)
      return &w.value;
  return nullptr;
}

bool Decomposition::is_direct() const {
  if (!independent(parts))
    return false;
  Subspace sum(ambient.ambient_dim());
  for (const auto &p : parts)
    sum = sum + p;
  return sum == ambient;
}

namespace {

std::string pair_name(const LieAlgebra &algebra, std::size_t i, std::size_t j) {
  return "(" + algebra.labels()[i] + ", " + algebra.labels()[j] + ")";
}

struct Operators {
  Matrix op;
  Matrix adj;
};

Operators operators(const BilinearForm &form, const Tensor2 &r) {
  Matrix op = operator_of(form, r);
  Matrix adj = adjoint(form, op);
  return {std::move(op), std::move(adj)};
}

bool is_subspace_zero_under(const Matrix &map, const Subspace &s) {
  return image(map, s).is_zero();
}

void not_applicable(StructureReport &report, ErrorCode code, std::string why) {
  report.verdict = Verdict::NotApplicable;
  report.blocked_by = code;
  report.witnesses.push_back({"reason", std::move(why)});
}

void contradiction(StructureReport &report, std::string what) {
  report.failures.push_back(what);
  report.contradictions.push_back(std::move(what));
  report.verdict = Verdict::Fails;
}

// Symmetric part r + τ(r) is ad-invariant.
bool symmetric_part_invariant(const LieAlgebra &algebra, const Tensor2 &r) {
  return is_ad_invariant(algebra, r + tau(r));
}

// Shared body of the kernel conditions for R and R*.
StructureReport kernel_condition(const LieAlgebra &algebra, const BilinearForm &form,
                                 const Tensor2 &r, const Scalar &lambda, bool use_adjoint) {
  const auto [op, adj] = operators(form, r);
  const Matrix &target = use_adjoint ? adj : op;
  const Matrix th = theta(op, adj, lambda);
  const std::size_t n = algebra.dim();

  StructureReport report;
  report.claim = use_adjoint ? "[R(a), b] + [R*(a), b] + lambda[a, b] in ker(R*)"
                             : "[R(a), b] + [R*(a), b] + lambda[a, b] in ker(R)";
  report.witnesses.push_back({"lambda", lambda});
  for (std::size_t i = 0; i < n; ++i) {
    const Vector image_i = th.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = target.apply(algebra.bracket(image_i, unit_vector(n, j)));
      if (!is_zero(v))
        report.failures.push_back("pair " + pair_name(algebra, i, j) + " maps to " +
                                  format_vector(v));
    }
  }
  const bool condition = report.failures.empty();
  report.verdict = condition ? Verdict::Holds : Verdict::Fails;

  const bool cybe = is_cybe_solution(algebra, r);
  const bool rb = is_rota_baxter(algebra, target, lambda).holds;
  const bool quadratic = is_invariant(algebra, form);
  report.witnesses.push_back({"cybe", cybe});
  report.witnesses.push_back({use_adjoint ? "adjoint_rota_baxter" : "rota_baxter", rb});
  report.witnesses.push_back({"form_invariant", quadratic});
  if (quadratic) {
    const std::string who = use_adjoint ? "R*" : "R";
    if (cybe && condition != rb)
      contradiction(report, "r solves CYBE but the kernel condition (" +
                                std::string(condition ? "holds" : "fails") + ") disagrees with " +
                                who + " being Rota-Baxter (" + (rb ? "yes" : "no") + ")");
    if (rb && cybe != condition)
      contradiction(report, who + " is Rota-Baxter but CYBE (" + (cybe ? "holds" : "fails") +
                                ") disagrees with the kernel condition");
  }
  return report;
}

} // namespace

StructureReport theorem1_condition(const LieAlgebra &algebra, const BilinearForm &form,
                                   const Tensor2 &r, const Scalar &lambda) {
  return kernel_condition(algebra, form, r, lambda, false);
}

StructureReport remark1_condition(const LieAlgebra &algebra, const BilinearForm &form,
                                  const Tensor2 &r, const Scalar &lambda) {
  return kernel_condition(algebra, form, r, lambda, true);
}

WeightSet kernel_condition_weights(const LieAlgebra &algebra, const BilinearForm &form,
                                   const Tensor2 &r, bool use_adjoint) {
  const auto [op, adj] = operators(form, r);
  const Matrix &target = use_adjoint ? adj : op;
  const Matrix sum = op + adj;
  const std::size_t n = algebra.dim();
  std::vector<std::pair<Vector, Vector>> equations;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ej = unit_vector(n, j);
      equations.emplace_back(target.apply(algebra.bracket(sum.column(i), ej)),
                             target.apply(algebra.basis_bracket(i, j)));
    }
  return affine_weight_set(equations);
}

StructureReport corollary1_check(const LieAlgebra &algebra, const BilinearForm &form,
                                 const Matrix &op, const Scalar &lambda) {
  StructureReport report;
  report.claim = "theta_lambda(L) in Z(L) implies tensor solves CYBE";
  report.witnesses.push_back({"lambda", lambda});
  if (lambda == 0) {
    not_applicable(report, ErrorCode::ZeroWeight, "weight must be nonzero");
    return report;
  }
  auto rb = is_rota_baxter(algebra, op, lambda);
  if (!rb.holds) {
    not_applicable(report, ErrorCode::NotRotaBaxter,
                   "operator is not Rota-Baxter of weight " + format_scalar(lambda));
    return report;
  }
  const Matrix th = theta(op, adjoint(form, op), lambda);
  const Subspace z = center(algebra);
  const Subspace th_image = Subspace::column_space(th);
  report.witnesses.push_back({"center", z});
  report.witnesses.push_back({"theta_image", th_image});
  if (!z.contains(th_image)) {
    not_applicable(report, ErrorCode::HypothesisViolated, "theta_lambda(L) is not central");
    return report;
  }
  const bool cybe = is_cybe_solution(algebra, tensor_of(form, op));
  report.witnesses.push_back({"cybe", cybe});
  if (!cybe)
    contradiction(report, "hypothesis holds but the tensor does not solve CYBE");
  return report;
}

StructureReport corollary4_check(const LieAlgebra &algebra, const BilinearForm &form,
                                 const Matrix &op, const Scalar &lambda) {
  StructureReport report;
  report.claim = "theta_lambda = 0 implies CYBE and invariant symmetric part";
  report.witnesses.push_back({"lambda", lambda});
  if (lambda == 0) {
    not_applicable(report, ErrorCode::ZeroWeight, "weight must be nonzero");
    return report;
  }
  if (!is_rota_baxter(algebra, op, lambda).holds) {
    not_applicable(report, ErrorCode::NotRotaBaxter,
                   "operator is not Rota-Baxter of weight " + format_scalar(lambda));
    return report;
  }
  if (!theta(op, adjoint(form, op), lambda).is_zero()) {
    not_applicable(report, ErrorCode::HypothesisViolated, "theta_lambda is not zero");
    return report;
  }
  const Tensor2 r = tensor_of(form, op);
  const bool cybe = is_cybe_solution(algebra, r);
  const bool invariant = symmetric_part_invariant(algebra, r);
  report.witnesses.push_back({"cybe", cybe});
  report.witnesses.push_back({"symmetric_part_invariant", invariant});
  if (!cybe)
    contradiction(report, "tensor does not solve CYBE");
  if (!invariant)
    contradiction(report, "r + tau(r) is not ad-invariant");
  return report;
}

Subspace ideal_I_lambda(const LieAlgebra &algebra, const BilinearForm &form, const Tensor2 &r,
                        const Scalar &lambda) {
  if (!symmetric_part_invariant(algebra, r))
    throw Error(ErrorCode::HypothesisViolated, "r + tau(r) is not ad-invariant");
  const auto [op, adj] = operators(form, r);
  const Subspace derived = derived_subalgebra(algebra);
  Subspace ideal = image(theta(op, adj, lambda), derived);
  if (!is_ideal(algebra, ideal))
    throw Error(ErrorCode::TheoremContradiction, "theta_lambda([L, L]) is not an ideal");
  if (!derived.contains(ideal))
    throw Error(ErrorCode::TheoremContradiction, "theta_lambda([L, L]) is not inside [L, L]");
  return ideal;
}

StructureReport theorem2_pipeline(const LieAlgebra &algebra, const BilinearForm &form,
                                  const Tensor2 &r, const Scalar &lambda) {
  StructureReport report;
  report.claim = "R and R* descend to Rota-Baxter operators of weight lambda on L/I_lambda";
  report.witnesses.push_back({"lambda", lambda});
  if (!is_cybe_solution(algebra, r)) {
    not_applicable(report, ErrorCode::HypothesisViolated, "r does not solve CYBE");
    return report;
  }
  if (!symmetric_part_invariant(algebra, r)) {
    not_applicable(report, ErrorCode::HypothesisViolated, "r + tau(r) is not ad-invariant");
    return report;
  }

  Subspace ideal;
  try {
    ideal = ideal_I_lambda(algebra, form, r, lambda);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::TheoremContradiction)
      throw;
    contradiction(report, e.what());
    return report;
  }
  report.witnesses.push_back({"I_lambda", ideal});

  const auto [op, adj] = operators(form, r);
  if (is_rota_baxter(algebra, op, lambda).holds && !is_subspace_zero_under(op, ideal))
    contradiction(report, "R is Rota-Baxter of weight lambda but R(I_lambda) != 0");

  const bool r_invariant = ideal.contains(image(op, ideal));
  report.witnesses.push_back({"R_invariant", r_invariant});
  if (!r_invariant) {
    not_applicable(report, ErrorCode::NotInvariant, "I_lambda is not R-invariant");
    return report;
  }
  const bool adj_invariant = ideal.contains(image(adj, ideal));
  report.witnesses.push_back({"R*_invariant", adj_invariant});
  if (!adj_invariant) {
    contradiction(report, "I_lambda is R-invariant but not R*-invariant");
    return report;
  }

  const QuotientAlgebra q = quotient(algebra, ideal);
  const Matrix q_op = induce_operator(q, op);
  const Matrix q_adj = induce_operator(q, adj);
  report.witnesses.push_back({"quotient_dim", Scalar(static_cast<long>(q.algebra.dim()))});
  report.witnesses.push_back({"induced_R", q_op});
  report.witnesses.push_back({"induced_R*", q_adj});

  auto rb_op = is_rota_baxter(q.algebra, q_op, lambda);
  auto rb_adj = is_rota_baxter(q.algebra, q_adj, lambda);
  report.witnesses.push_back({"induced_R_rota_baxter", rb_op.holds});
  report.witnesses.push_back({"induced_R*_rota_baxter", rb_adj.holds});
  if (!rb_op.holds)
    contradiction(report, "induced R is not Rota-Baxter of weight lambda on the quotient");
  if (!rb_adj.holds)
    contradiction(report, "induced R* is not Rota-Baxter of weight lambda on the quotient");

  const Matrix q_theta = theta(q_op, q_adj, lambda);
  const Subspace q_derived = derived_subalgebra(q.algebra);
  const bool vanishes = is_subspace_zero_under(q_theta, q_derived);
  report.witnesses.push_back({"theta_vanishes_on_quotient_commutators", vanishes});
  if (!vanishes)
    contradiction(report, "theta_lambda does not vanish on [L/I, L/I]");
  return report;
}

bool is_simple(const LieAlgebra &algebra) {
  const std::size_t n = algebra.dim();
  if (n == 0 || derived_subalgebra(algebra).is_zero())
    return false;
  for (std::size_t i = 0; i < n; ++i)
    if (!ideal_closure(algebra, Subspace::span(n, {unit_vector(n, i)})).is_full())
      return false;
  return true;
}

StructureReport corollary3_check(const LieAlgebra &algebra, const BilinearForm &form,
                                 const Tensor2 &r) {
  StructureReport report;
  report.claim = "on a simple algebra R is Rota-Baxter of a nonzero weight lambda with "
                 "R + R* + lambda id = 0";
  const Tensor2 sym = r + tau(r);
  if (r.is_zero()) {
    not_applicable(report, ErrorCode::HypothesisViolated, "r is zero");
    return report;
  }
  if (sym.is_zero()) {
    not_applicable(report, ErrorCode::HypothesisViolated, "r + tau(r) is zero");
    return report;
  }
  if (!is_ad_invariant(algebra, sym)) {
    not_applicable(report, ErrorCode::HypothesisViolated, "r + tau(r) is not ad-invariant");
    return report;
  }
  if (!is_cybe_solution(algebra, r)) {
    not_applicable(report, ErrorCode::HypothesisViolated, "r does not solve CYBE");
    return report;
  }
  if (!is_simple(algebra)) {
    not_applicable(report, ErrorCode::NotSimple, "algebra is not simple");
    return report;
  }
  const auto [op, adj] = operators(form, r);
  const WeightSet weights = find_weights(algebra, op);
  report.witnesses.push_back({"weights", weights});
  if (!weights.is_singleton() || weights.values().front() == 0) {
    contradiction(report, "weight set is " + format_weight_set(weights) +
                              ", expected a single nonzero weight");
    return report;
  }
  const Scalar lambda = weights.values().front();
  report.witnesses.push_back({"lambda", lambda});
  const Matrix th = theta(op, adj, lambda);
  report.witnesses.push_back({"theta_zero", th.is_zero()});
  if (!th.is_zero())
    contradiction(report, "R + R* + lambda id is not zero");
  return report;
}

namespace {

struct Theorem3Pieces {
  Subspace derived, first, second;
};

Theorem3Pieces theorem3_pieces(const LieAlgebra &algebra, const Matrix &th) {
  Subspace derived = derived_subalgebra(algebra);
  Subspace first = image(th, derived);
  Subspace second = intersect(kernel(th), derived);
  return {std::move(derived), std::move(first), std::move(second)};
}

// Conditions on a candidate [L, L] = I1 ⊕ I2; failures are appended.
std::vector<std::string> theorem3_conditions(const LieAlgebra &algebra, const Matrix &op,
                                             const Matrix &adj, const Matrix &th,
                                             const Theorem3Pieces &p) {
  std::vector<std::string> bad;
  if (!is_ideal(algebra, p.first))
    bad.push_back("I1 is not an ideal");
  if (!is_ideal(algebra, p.second))
    bad.push_back("I2 is not an ideal");
  if (!intersect(p.first, p.second).is_zero())
    bad.push_back("I1 and I2 intersect nontrivially");
  if (p.first + p.second != p.derived)
    bad.push_back("I1 + I2 != [L, L]");
  if (!is_subspace_zero_under(op, p.first))
    bad.push_back("R(I1) != 0");
  if (!is_subspace_zero_under(adj, p.first))
    bad.push_back("R*(I1) != 0");
  if (!is_subspace_zero_under(th, p.second))
    bad.push_back("theta_lambda(I2) != 0");
  return bad;
}

} // namespace

std::pair<Decomposition, StructureReport>
theorem3_decomposition(const LieAlgebra &algebra, const BilinearForm &form, const Tensor2 &r,
                       const Scalar &lambda) {
  StructureReport report;
  report.claim = "[L, L] = I1 + I2 with R(I1) = R*(I1) = 0 and theta_lambda(I2) = 0";
  report.witnesses.push_back({"lambda", lambda});
  const auto [op, adj] = operators(form, r);
  const Matrix th = theta(op, adj, lambda);
  const Theorem3Pieces pieces = theorem3_pieces(algebra, th);
  Decomposition dec{pieces.derived, {pieces.first, pieces.second}, {"I1", "I2"}};
  report.witnesses.push_back({"I1", pieces.first});
  report.witnesses.push_back({"I2", pieces.second});

  const bool cybe = is_cybe_solution(algebra, r);
  const Tensor2 sym = r + tau(r);
  const bool invariant = is_ad_invariant(algebra, sym);
  const bool skew = sym.is_zero();
  const bool rb_op = is_rota_baxter(algebra, op, lambda).holds;
  const bool rb_adj = is_rota_baxter(algebra, adj, lambda).holds;
  report.witnesses.push_back({"cybe", cybe});
  report.witnesses.push_back({"symmetric_part_invariant", invariant});
  report.witnesses.push_back({"R_rota_baxter", rb_op});
  report.witnesses.push_back({"R*_rota_baxter", rb_adj});

  if (lambda == 0) {
    not_applicable(report, ErrorCode::ZeroWeight, "weight must be nonzero");
    return {std::move(dec), std::move(report)};
  }

  if (cybe && invariant && !skew) {
    report.direction = "forward";
    if (!rb_op || !rb_adj) {
      const Subspace op_image = image(op, pieces.first);
      const Subspace adj_image = image(adj, pieces.first);
      report.witnesses.push_back({"R(I1)", op_image});
      report.witnesses.push_back({"R*(I1)", adj_image});
      not_applicable(report, ErrorCode::NotBothRotaBaxter,
                     std::string(!rb_op ? "R" : "R*") + " is not Rota-Baxter of weight " +
                         format_scalar(lambda));
      return {std::move(dec), std::move(report)};
    }
    for (auto &bad : theorem3_conditions(algebra, op, adj, th, pieces))
      contradiction(report, bad);
    // x - θ_λ(x)/λ ∈ I2 for every x in [L, L].
    for (const auto &x : pieces.derived.basis_vectors()) {
      Vector y = x;
      add_scaled(y, -1 / lambda, th.apply(x));
      if (!pieces.second.contains(y))
        contradiction(report, "x - theta_lambda(x)/lambda not in I2 for x = " + format_vector(x));
    }
    if (report.consistent()) {
      // Converse re-verification on the constructed decomposition.
      report.direction = "forward+converse";
      if (!centroid_check(algebra, op + adj))
        contradiction(report, "R + R* is not in the centroid");
    }
    return {std::move(dec), std::move(report)};
  }

  report.direction = "converse";
  if (!rb_op || !rb_adj) {
    not_applicable(report, ErrorCode::NotBothRotaBaxter,
                   "converse needs R and R* Rota-Baxter of weight " + format_scalar(lambda));
    return {std::move(dec), std::move(report)};
  }
  if (!centroid_check(algebra, op + adj)) {
    not_applicable(report, ErrorCode::HypothesisViolated, "R + R* is not in the centroid");
    return {std::move(dec), std::move(report)};
  }
  auto bad = theorem3_conditions(algebra, op, adj, th, pieces);
  if (!bad.empty()) {
    not_applicable(report, ErrorCode::HypothesisViolated,
                   "constructed decomposition fails: " + bad.front());
    return {std::move(dec), std::move(report)};
  }
  if (!cybe)
    contradiction(report, "converse premises hold but r does not solve CYBE");
  if (!invariant)
    contradiction(report, "converse premises hold but r + tau(r) is not ad-invariant");
  if (skew)
    contradiction(report, "converse premises hold but r + tau(r) = 0");
  return {std::move(dec), std::move(report)};
}

namespace {

struct RootSplit {
  std::vector<EigenBlock> blocks;
  Subspace first, second;
};

RootSplit root_split(const Matrix &theta0, const Scalar &lambda) {
  RootSplit split;
  split.blocks = rational_eigen_decomposition(theta0);
  const std::size_t n = theta0.rows();
  split.first = Subspace(n);
  split.second = Subspace(n);
  for (const auto &b : split.blocks) {
    if (b.eigenvalue == -lambda)
      split.first = b.space;
    else
      split.second = split.second + b.space;
  }
  return split;
}

std::vector<std::string> theorem4_conditions(const LieAlgebra &algebra, const Matrix &op,
                                             const Matrix &adj, const Matrix &th,
                                             const RootSplit &s) {
  std::vector<std::string> bad;
  const Subspace whole = Subspace::full(algebra.dim());
  if (!is_ideal(algebra, s.first))
    bad.push_back("I1 is not an ideal");
  if (!is_ideal(algebra, s.second))
    bad.push_back("I2 is not an ideal");
  if (!(Decomposition{whole, {s.first, s.second}, {"I1", "I2"}}.is_direct()))
    bad.push_back("L != I1 + I2 as a direct sum");
  if (!center(algebra).contains(image(th, s.first)))
    bad.push_back("theta_lambda(I1) is not central");
  const Subspace brackets = bracket_span(algebra, s.second, whole);
  if (!is_subspace_zero_under(op, brackets))
    bad.push_back("R([I2, L]) != 0");
  if (!is_subspace_zero_under(adj, brackets))
    bad.push_back("R*([I2, L]) != 0");
  return bad;
}

} // namespace

std::pair<Decomposition, StructureReport>
theorem4_decomposition(const LieAlgebra &algebra, const BilinearForm &form, const Tensor2 &r,
                       const Scalar &lambda) {
  StructureReport report;
  report.claim = "L = I1 + I2 with theta_lambda(I1) central and R([I2, L]) = R*([I2, L]) = 0";
  report.witnesses.push_back({"lambda", lambda});
  const std::size_t n = algebra.dim();
  const auto [op, adj] = operators(form, r);
  const Matrix th = theta(op, adj, lambda);
  Decomposition dec{Subspace::full(n), {}, {}};

  const bool cybe = is_cybe_solution(algebra, r);
  const bool invariant = symmetric_part_invariant(algebra, r);
  const bool rb_op = is_rota_baxter(algebra, op, lambda).holds;
  const bool rb_adj = is_rota_baxter(algebra, adj, lambda).holds;
  report.witnesses.push_back({"cybe", cybe});
  report.witnesses.push_back({"symmetric_part_invariant", invariant});
  report.witnesses.push_back({"R_rota_baxter", rb_op});
  report.witnesses.push_back({"R*_rota_baxter", rb_adj});

  if (lambda == 0) {
    not_applicable(report, ErrorCode::ZeroWeight, "weight must be nonzero");
    return {std::move(dec), std::move(report)};
  }
  const bool forward = cybe && invariant;
  report.direction = forward ? "forward" : "converse";
  if (forward && (!rb_op || !rb_adj)) {
    not_applicable(report, ErrorCode::NotBothRotaBaxter,
                   std::string(!rb_op ? "R" : "R*") + " is not Rota-Baxter of weight " +
                       format_scalar(lambda));
    return {std::move(dec), std::move(report)};
  }
  if (!forward && !rb_op) {
    not_applicable(report, ErrorCode::NotRotaBaxter,
                   "converse needs R Rota-Baxter of weight " + format_scalar(lambda));
    return {std::move(dec), std::move(report)};
  }
  if (!forward && !centroid_check(algebra, op + adj)) {
    not_applicable(report, ErrorCode::HypothesisViolated, "R + R* is not in the centroid");
    return {std::move(dec), std::move(report)};
  }

  RootSplit split;
  try {
    split = root_split(op + adj, lambda);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::NonRationalSpectrum)
      throw;
    not_applicable(report, ErrorCode::NonRationalSpectrum, e.what());
    return {std::move(dec), std::move(report)};
  }

  std::vector<Scalar> spectrum;
  for (const auto &b : split.blocks) {
    spectrum.push_back(b.eigenvalue);
    dec.parts.push_back(b.space);
    dec.labels.push_back("L(" + format_scalar(b.eigenvalue) + ")");
  }
  report.witnesses.push_back({"spectrum", spectrum});
  report.witnesses.push_back({"I1", split.first});
  report.witnesses.push_back({"I2", split.second});
  for (const auto &b : split.blocks)
    if (!is_ideal(algebra, b.space)) {
      const std::string what = "root space L(" + format_scalar(b.eigenvalue) + ") is not an ideal";
      if (forward)
        contradiction(report, what);
      else {
        not_applicable(report, ErrorCode::HypothesisViolated, what);
        return {std::move(dec), std::move(report)};
      }
    }

  auto bad = theorem4_conditions(algebra, op, adj, th, split);
  if (forward) {
    for (auto &b : bad)
      contradiction(report, b);
    return {std::move(dec), std::move(report)};
  }
  if (!bad.empty()) {
    not_applicable(report, ErrorCode::HypothesisViolated,
                   "constructed decomposition fails: " + bad.front());
    return {std::move(dec), std::move(report)};
  }
  if (!cybe)
    contradiction(report, "converse premises hold but r does not solve CYBE");
  if (!invariant)
    contradiction(report, "converse premises hold but r + tau(r) is not ad-invariant");
  return {std::move(dec), std::move(report)};
}

Component combine_components(const std::vector<Component> &components,
                             const std::vector<Scalar> &mu) {
  if (components.empty() || components.size() != mu.size())
    throw Error(ErrorCode::DimensionMismatch, "one scale factor per component required");
  Component out{components.front().algebra, mu.front() * components.front().form,
                components.front().r};
  for (std::size_t i = 1; i < components.size(); ++i) {
    const auto &c = components[i];
    const std::size_t n1 = out.algebra.dim(), n = n1 + c.algebra.dim();
    Tensor2 r(n);
    for (std::size_t p = 0; p < n1; ++p)
      for (std::size_t q = 0; q < n1; ++q)
        r(p, q) = out.r(p, q);
    for (std::size_t p = 0; p < c.r.dim(); ++p)
      for (std::size_t q = 0; q < c.r.dim(); ++q)
        r(n1 + p, n1 + q) = c.r(p, q);
    out.algebra = direct_sum(out.algebra, c.algebra);
    out.form = direct_sum(out.form, mu[i] * c.form);
    out.r = std::move(r);
  }
  return out;
}

std::vector<Scalar> harmonize_weights(const std::vector<Component> &components,
                                      const Scalar &target) {
  if (target == 0)
    throw Error(ErrorCode::ZeroTargetWeight, "target weight must be nonzero");
  if (components.empty())
    throw Error(ErrorCode::PreconditionViolated, "no components given");

  std::vector<std::optional<Scalar>> weights; // nullopt: every weight works
  bool any_zero = false, any_nonzero = false;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto &c = components[i];
    const WeightSet w = find_weights(c.algebra, operator_of(c.form, c.r));
    if (w.kind() == WeightSet::Kind::All) {
      weights.emplace_back();
      continue;
    }
    if (!w.is_singleton())
      throw Error(ErrorCode::NotRotaBaxter,
                  "component " + std::to_string(i) + " has weight set " + format_weight_set(w));
    const Scalar &l = w.values().front();
    (l == 0 ? any_zero : any_nonzero) = true;
    weights.emplace_back(l);
  }
  if (any_zero)
    throw Error(ErrorCode::MixedZeroNonzeroWeights,
                any_nonzero ? "a weight-zero component cannot be rescaled to a nonzero weight"
                            : "all components have weight zero");

  std::vector<Scalar> mu;
  for (const auto &w : weights)
    mu.push_back(w ? target / *w : Scalar(1));

  const Component combined = combine_components(components, mu);
  if (!is_rota_baxter(combined.algebra, operator_of(combined.form, combined.r), target).holds)
    throw Error(ErrorCode::TheoremContradiction,
                "rescaled direct sum is not Rota-Baxter of weight " + format_scalar(target));
  return mu;
}

} // namespace rotayb
