#include "rotayb/catalog.hpp"

#include "rotayb/error.hpp"

#include <functional>

namespace rotayb::catalog {

std::string_view to_string(Check c) {
  switch (c) {
  case Check::Cybe: return "cybe";
  case Check::SymmetricInvariant: return "symmetric-invariant";
  case Check::SymmetricPartEquals: return "symmetric-part";
  case Check::Weights: return "weights";
  case Check::OperatorOf: return "operator-of";
  case Check::Adjoint: return "adjoint";
  case Check::SkewAdjoint: return "skew-adjoint";
  case Check::Centroid: return "centroid";
  case Check::Theorem1: return "thm1";
  case Check::Remark1: return "thm1star";
  case Check::Remark1Weights: return "thm1star-weights";
  case Check::IdealDim: return "ideal-dim";
  case Check::Theorem2: return "thm2";
  case Check::Theorem3: return "thm3";
  case Check::Theorem4: return "thm4";
  case Check::Corollary3: return "corollary3";
  case Check::ThetaZero: return "theta-zero";
  case Check::InvariantFormsDim: return "invariant-forms";
  case Check::Harmonize: return "harmonize";
  }
  return "unknown";
}

const Tensor2 &CatalogEntry::tensor(std::string_view key) const {
  for (const auto &[k, t] : tensors)
    if (k == key)
      return t;
  throw Error(ErrorCode::UnknownEntry, name + " has no tensor '" + std::string(key) + "'");
}

const Matrix &CatalogEntry::op(std::string_view key) const {
  for (const auto &[k, m] : operators)
    if (k == key)
      return m;
  throw Error(ErrorCode::UnknownEntry, name + " has no operator '" + std::string(key) + "'");
}

namespace {

Vector vec(std::initializer_list<long> values) {
  Vector v;
  for (long x : values)
    v.emplace_back(x);
  return v;
}

Scalar q(long num, long den = 1) {
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

} // namespace

LieAlgebra sl2() {
  // e = 0, h = 1, f = 2
  BracketTable t(3);
  t.set_antisymmetric(0, 1, vec({-2, 0, 0})); // [e, h] = -2e
  t.set_antisymmetric(0, 2, vec({0, 1, 0}));  // [e, f] = h
  t.set_antisymmetric(1, 2, vec({0, 0, -2})); // [h, f] = -2f
  return LieAlgebra({"e", "h", "f"}, t);
}

LieAlgebra gl2() {
  // Basis e11, e12, e21, e22; [e_ij, e_kl] = δ_jk e_il - δ_li e_kj.
  const std::size_t idx[2][2] = {{0, 1}, {2, 3}};
  BracketTable t(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          Vector v = zero_vector(4);
          if (j == k)
            v[idx[i][l]] += 1;
          if (l == i)
            v[idx[k][j]] -= 1;
          t.set(idx[i][j], idx[k][l], v);
        }
  return LieAlgebra({"e11", "e12", "e21", "e22"}, t);
}

Tensor2 sl2_standard_r() {
  return Tensor2::from_terms(3, {{0, 2, q(1)}, {1, 1, q(1, 4)}});
}

namespace {

BilinearForm gl2_trace_form() {
  // tr(xy): (e11, e11), (e22, e22), (e12, e21) pair to 1.
  Matrix g(4, 4);
  g(0, 0) = 1;
  g(3, 3) = 1;
  g(1, 2) = 1;
  g(2, 1) = 1;
  return BilinearForm(std::move(g));
}

Expectation expect(std::string name, Check check, std::string subject, Expected value,
                   Scalar lambda = 0, std::string other = {}) {
  return {std::move(name), check, std::move(subject), std::move(lambda), std::move(value),
          std::move(other)};
}

std::string na(ErrorCode code) { return "not-applicable:" + std::string(to_string(code)); }

CatalogEntry make_sl2(const Scalar &scale, std::string name, std::string description) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(description);
  e.algebra = sl2();
  e.form = scale * killing_form(e.algebra);
  const Tensor2 r = sl2_standard_r();
  e.tensors = {{"r", r}};
  const Matrix op = operator_of(*e.form, r);
  e.operators = {{"R", op}, {"Rstar", adjoint(*e.form, op)}};
  const Scalar lambda = -4 * scale;
  e.expected = {
      expect("r solves CYBE", Check::Cybe, "r", true),
      expect("r + tau(r) is ad-invariant", Check::SymmetricInvariant, "r", true),
      expect("weights of R", Check::Weights, "R", WeightSet::of({lambda})),
      expect("weights of R*", Check::Weights, "Rstar", WeightSet::of({lambda})),
      expect("R + R* + lambda id = 0", Check::ThetaZero, "r", true, lambda),
      expect("kernel condition for R", Check::Theorem1, "r", std::string("pass"), lambda),
      expect("kernel condition for R*", Check::Remark1, "r", std::string("pass"), lambda),
      expect("dim I_lambda", Check::IdealDim, "r", std::size_t{0}, lambda),
      expect("quotient descent", Check::Theorem2, "r", std::string("pass"), lambda),
      expect("simple-algebra weight and theta", Check::Corollary3, "r", std::string("pass")),
      expect("[L, L] splitting", Check::Theorem3, "r", std::string("pass"), lambda),
      expect("root-space splitting", Check::Theorem4, "r", std::string("pass"), lambda),
      expect("invariant forms", Check::InvariantFormsDim, "", std::size_t{1}),
  };
  return e;
}

CatalogEntry make_gl2() {
  CatalogEntry e;
  e.name = "gl2-example1";
  e.description = "gl2 with the trace form and r = 1/2 (E x e11 + e22 x E)";
  e.algebra = gl2();
  e.form = gl2_trace_form();
  const Vector identity = vec({1, 0, 0, 1});
  const Vector e11 = vec({1, 0, 0, 0}), e22 = vec({0, 0, 0, 1});
  const Tensor2 r = q(1, 2) * (Tensor2::outer(identity, e11) + Tensor2::outer(e22, identity));
  e.tensors = {{"r", r}, {"EE", Tensor2::outer(identity, identity)}};
  const Matrix op = operator_of(*e.form, r);
  e.operators = {{"R", op}, {"Rstar", adjoint(*e.form, op)}};
  e.expected = {
      expect("r solves CYBE", Check::Cybe, "r", true),
      expect("r + tau(r) = E x E", Check::SymmetricPartEquals, "r", true, 0, "EE"),
      expect("r + tau(r) is ad-invariant", Check::SymmetricInvariant, "r", true),
      expect("weights of R", Check::Weights, "R", WeightSet::of({Scalar(0)})),
      expect("kernel condition for R at weight 0", Check::Theorem1, "r", std::string("pass")),
      expect("R + R* in the centroid", Check::Centroid, "r", true),
  };
  e.notes = {"The form is the trace form tr(xy); the Killing form of gl2 is degenerate."};
  return e;
}

CatalogEntry make_dual_example() {
  CatalogEntry e;
  e.name = "sl2-dual-example3";
  e.description = "sl2 x F[t]/(t^2) with the projection R onto sl2 along L.t and Q = id - R";
  auto [algebra, form] = dual_numbers_extension(sl2(), killing_form(sl2()));
  e.algebra = std::move(algebra);
  e.form = std::move(form);
  const std::size_t n = 6;

  Matrix projection(n, n), q_op(n, n);
  for (std::size_t i = 0; i < 3; ++i) {
    projection(i, i) = 1;
    q_op(3 + i, 3 + i) = 1;
  }
  const Matrix r_adj = adjoint(*e.form, projection);
  const Matrix q_adj = adjoint(*e.form, q_op);

  // Index map: e = 0, h = 1, f = 2, e_t = 3, h_t = 4, f_t = 5.
  const Tensor2 r = tensor_of(*e.form, projection);
  const Tensor2 variant =
      Tensor2::from_terms(n, {{1, 4, q(1, 4)}, {0, 5, q(1)}, {2, 3, q(1)}});
  // 1/4 h_t ⊗ (h - h_t) + e_t ⊗ (f - f_t) + f_t ⊗ (e - e_t)
  const Tensor2 example4 = Tensor2::from_terms(
      n, {{4, 1, q(1, 4)}, {4, 4, q(-1, 4)}, {3, 2, q(1)}, {3, 5, q(-1)}, {5, 0, q(1)},
          {5, 3, q(-1)}});
  const Tensor2 skew = Tensor2::from_terms(n, {{3, 5, q(1)}, {5, 3, q(-1)}});
  const Tensor2 r_trace = Scalar(4) * r;

  e.tensors = {{"r", r},
               {"r-variant", variant},
               {"r-trace", r_trace},
               {"q", tensor_of(*e.form, q_op)},
               {"example4", example4},
               {"skew", skew}};
  e.operators = {{"R", projection},
                 {"Rstar", r_adj},
                 {"Q", q_op},
                 {"Qstar", q_adj},
                 {"R-variant", operator_of(*e.form, variant)},
                 {"skew", operator_of(*e.form, skew)}};

  e.expected = {
      expect("operator of r is R", Check::OperatorOf, "r", true, 0, "R"),
      expect("adjoint of R", Check::Adjoint, "R", true, 0, "Rstar"),
      expect("weights of R", Check::Weights, "R", WeightSet::of({Scalar(-1)})),
      expect("weights of R*", Check::Weights, "Rstar", WeightSet::empty()),
      expect("weights of Q", Check::Weights, "Q", WeightSet::of({Scalar(-1)})),
      expect("r solves CYBE", Check::Cybe, "r", true),
      expect("r + tau(r) is ad-invariant", Check::SymmetricInvariant, "r", true),
      expect("R + R* in the centroid", Check::Centroid, "r", true),
      expect("kernel condition for R", Check::Theorem1, "r", std::string("pass"), -1),
      expect("kernel condition for R*", Check::Remark1, "r", std::string("fail"), -1),
      expect("weights satisfying the R* kernel condition", Check::Remark1Weights, "r",
             WeightSet::empty()),
      expect("dim I_lambda", Check::IdealDim, "r", std::size_t{3}, -1),
      expect("quotient descent", Check::Theorem2, "r", std::string("pass"), -1),
      expect("[L, L] splitting", Check::Theorem3, "r", na(ErrorCode::NotBothRotaBaxter), -1),
      expect("root-space splitting", Check::Theorem4, "r", na(ErrorCode::NotBothRotaBaxter), -1),
      expect("variant tensor solves CYBE", Check::Cybe, "r-variant", false),
      expect("trace-normalized tensor solves CYBE", Check::Cybe, "r-trace", true),
      expect("tensor of Q solves CYBE", Check::Cybe, "q", false),
      expect("kernel condition for Q", Check::Theorem1, "q", std::string("fail"), -1),
      expect("tensor example4 solves CYBE", Check::Cybe, "example4", false),
      expect("skew tensor solves CYBE", Check::Cybe, "skew", true),
      expect("skew tensor gives R + R* = 0", Check::SkewAdjoint, "skew", true),
      expect("weights of the skew operator", Check::Weights, "skew", WeightSet::of({Scalar(0)})),
  };
  e.notes = {
      "Tensor 'r' is tensor_of(omega, R). The tensor 1/4 h x h.t + e x f.t + f x e.t "
      "is stored as 'r-variant'; its operator is diag(4, 2, 4) on L and 0 on L.t, which is not "
      "a multiple of R, and it does not solve CYBE.",
      "Tensor 'r-trace' = 4 r = e x f.t + 1/2 h x h.t + f x e.t is the tensor of R for the "
      "trace form tr = kappa/4; it differs from 'r-variant' only in the h x h.t coefficient.",
      "Tensor 'example4' is the element 1/4 h.t x (h - h.t) + e.t x (f - f.t) + "
      "f.t x (e - e.t); 'q' is tensor_of(omega, Q).",
  };
  return e;
}

CatalogEntry make_sl2_plus_abelian() {
  CatalogEntry e;
  e.name = "sl2-plus-abelian";
  e.description = "sl2 + F with form kappa + (1) and the standard sl2 r-matrix";
  e.algebra = direct_sum(sl2(), LieAlgebra::abelian(1));
  e.form = direct_sum(killing_form(sl2()), BilinearForm(Matrix::identity(1)));
  Tensor2 r(4);
  const Tensor2 base = sl2_standard_r();
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t s = 0; s < 3; ++s)
      r(p, s) = base(p, s);
  e.tensors = {{"r", r}};
  const Matrix op = operator_of(*e.form, r);
  e.operators = {{"R", op}, {"Rstar", adjoint(*e.form, op)}};
  e.expected = {
      expect("r solves CYBE", Check::Cybe, "r", true),
      expect("r + tau(r) is ad-invariant", Check::SymmetricInvariant, "r", true),
      expect("weights of R", Check::Weights, "R", WeightSet::of({Scalar(-4)})),
      expect("weights of R*", Check::Weights, "Rstar", WeightSet::of({Scalar(-4)})),
      expect("[L, L] splitting", Check::Theorem3, "r", std::string("pass"), -4),
      expect("root-space splitting", Check::Theorem4, "r", std::string("pass"), -4),
      expect("quotient descent", Check::Theorem2, "r", std::string("pass"), -4),
      expect("simple-algebra statement", Check::Corollary3, "r", na(ErrorCode::NotSimple)),
  };
  return e;
}

CatalogEntry make_sum(bool mixed) {
  CatalogEntry e;
  const LieAlgebra s = sl2();
  const BilinearForm kappa = killing_form(s);
  const Tensor2 r = sl2_standard_r();
  if (mixed) {
    // h ∧ e on the first copy: skew, supported on the Borel subalgebra.
    const Tensor2 skew = Tensor2::from_terms(3, {{1, 0, q(1)}, {0, 1, q(-1)}});
    e.name = "sl2-sum-mixed";
    e.description = "sl2 + sl2 with a skew solution on one copy and r on the other";
    e.components = {{s, kappa, skew}, {s, kappa, r}};
    const Component c = combine_components(e.components, {Scalar(1), Scalar(1)});
    e.algebra = c.algebra;
    e.form = c.form;
    const Tensor2 skew_first =
        combine_components({{s, kappa, skew}, {s, kappa, Tensor2(3)}}, {Scalar(1), Scalar(1)}).r;
    e.tensors = {{"r", c.r}, {"skew", skew_first}};
    e.operators = {{"R", operator_of(c.form, c.r)}, {"skew", operator_of(c.form, skew_first)}};
    e.expected = {
        expect("r solves CYBE", Check::Cybe, "r", true),
        expect("skew part solves CYBE", Check::Cybe, "skew", true),
        expect("skew part gives R + R* = 0", Check::SkewAdjoint, "skew", true),
        expect("weights of the skew part", Check::Weights, "skew", WeightSet::of({Scalar(0)})),
        expect("r + tau(r) is ad-invariant", Check::SymmetricInvariant, "r", true),
        expect("weights of R", Check::Weights, "R", WeightSet::empty()),
        expect("harmonization", Check::Harmonize, "", std::string("MixedZeroNonzeroWeights"),
               -4),
    };
    return e;
  }
  e.name = "sl2-sum-example2";
  e.description = "sl2 + sl2 with r and r/2, forms rescaled to a common weight -4";
  e.components = {{s, kappa, r}, {s, kappa, q(1, 2) * r}};
  const Component c = combine_components(e.components, {Scalar(1), Scalar(2)});
  e.algebra = c.algebra;
  e.form = c.form;
  e.tensors = {{"r", c.r}};
  const Matrix op = operator_of(c.form, c.r);
  e.operators = {{"R", op}, {"Rstar", adjoint(c.form, op)}};
  e.expected = {
      expect("r solves CYBE", Check::Cybe, "r", true),
      expect("r + tau(r) is ad-invariant", Check::SymmetricInvariant, "r", true),
      expect("harmonization", Check::Harmonize, "", std::vector<Scalar>{Scalar(1), Scalar(2)},
             -4),
      expect("weights of R", Check::Weights, "R", WeightSet::of({Scalar(-4)})),
      expect("invariant forms", Check::InvariantFormsDim, "", std::size_t{2}),
      expect("[L, L] splitting", Check::Theorem3, "r", std::string("pass"), -4),
      expect("root-space splitting", Check::Theorem4, "r", std::string("pass"), -4),
  };
  return e;
}

struct Maker {
  std::string_view name;
  std::string_view description;
  std::function<CatalogEntry()> make;
};

const std::vector<Maker> &makers() {
  static const std::vector<Maker> all = {
      {"sl2", "sl2 with the Killing form and r = e x f + 1/4 h x h",
       [] {
         return make_sl2(1, "sl2", "sl2 with the Killing form and r = e x f + 1/4 h x h");
       }},
      {"sl2-scaled", "sl2 with kappa/4 and the standard r (weight -1)",
       [] {
         return make_sl2(q(1, 4), "sl2-scaled", "sl2 with kappa/4 and the standard r (weight -1)");
       }},
      {"gl2-example1", "gl2 with the trace form and r = 1/2 (E x e11 + e22 x E)", make_gl2},
      {"sl2-dual-example3",
       "sl2 x F[t]/(t^2) with the projection R onto sl2 along L.t and Q = id - R",
       make_dual_example},
      {"sl2-plus-abelian", "sl2 + F with form kappa + (1) and the standard sl2 r-matrix",
       make_sl2_plus_abelian},
      {"sl2-sum-example2", "sl2 + sl2 with r and r/2, forms rescaled to a common weight -4",
       [] { return make_sum(false); }},
      {"sl2-sum-mixed", "sl2 + sl2 with a skew solution on one copy and r on the other",
       [] { return make_sum(true); }},
  };
  return all;
}

std::string outcome(const StructureReport &report) {
  std::string s(to_string(report.verdict));
  if (report.verdict == Verdict::NotApplicable && report.blocked_by)
    s += ":" + std::string(to_string(*report.blocked_by));
  return s;
}

std::string format_expected(const Expected &value) {
  struct {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const WeightSet &w) const { return format_weight_set(w); }
    std::string operator()(std::size_t d) const { return std::to_string(d); }
    std::string operator()(const std::string &s) const { return s; }
    std::string operator()(const std::vector<Scalar> &v) const { return format_vector(v); }
  } visitor;
  return std::visit(visitor, value);
}

} // namespace

std::vector<Listing> list() {
  std::vector<Listing> out;
  for (const auto &m : makers())
    out.push_back({std::string(m.name), std::string(m.description)});
  return out;
}

CatalogEntry get(std::string_view name) {
  for (const auto &m : makers())
    if (m.name == name)
      return m.make();
  throw Error(ErrorCode::UnknownEntry, "no catalog entry named '" + std::string(name) + "'");
}

std::vector<CheckResult> verify(const CatalogEntry &entry) {
  std::vector<CheckResult> results;
  const LieAlgebra &L = entry.algebra;
  for (const auto &x : entry.expected) {
    Expected actual;
    std::vector<std::string> contradictions;
    auto form = [&]() -> const BilinearForm & {
      if (!entry.form)
        throw Error(ErrorCode::PreconditionViolated, entry.name + " has no form");
      return *entry.form;
    };
    auto report = [&](const StructureReport &rep) {
      contradictions.insert(contradictions.end(), rep.contradictions.begin(),
                            rep.contradictions.end());
      return outcome(rep);
    };
    try {
      switch (x.check) {
      case Check::Cybe: actual = is_cybe_solution(L, entry.tensor(x.subject)); break;
      case Check::SymmetricInvariant: {
        const Tensor2 &r = entry.tensor(x.subject);
        actual = is_ad_invariant(L, r + tau(r));
        break;
      }
      case Check::SymmetricPartEquals: {
        const Tensor2 &r = entry.tensor(x.subject);
        actual = (r + tau(r)) == entry.tensor(x.other);
        break;
      }
      case Check::Weights: actual = find_weights(L, entry.op(x.subject)); break;
      case Check::OperatorOf:
        actual = operator_of(form(), entry.tensor(x.subject)) == entry.op(x.other);
        break;
      case Check::Adjoint: actual = adjoint(form(), entry.op(x.subject)) == entry.op(x.other); break;
      case Check::SkewAdjoint: {
        const Matrix op = operator_of(form(), entry.tensor(x.subject));
        actual = (op + adjoint(form(), op)).is_zero();
        break;
      }
      case Check::Centroid: {
        const Matrix op = operator_of(form(), entry.tensor(x.subject));
        actual = centroid_check(L, op + adjoint(form(), op));
        break;
      }
      case Check::Theorem1:
        actual = report(theorem1_condition(L, form(), entry.tensor(x.subject), x.lambda));
        break;
      case Check::Remark1:
        actual = report(remark1_condition(L, form(), entry.tensor(x.subject), x.lambda));
        break;
      case Check::Remark1Weights:
        actual = kernel_condition_weights(L, form(), entry.tensor(x.subject), true);
        break;
      case Check::IdealDim:
        actual = ideal_I_lambda(L, form(), entry.tensor(x.subject), x.lambda).dim();
        break;
      case Check::Theorem2:
        actual = report(theorem2_pipeline(L, form(), entry.tensor(x.subject), x.lambda));
        break;
      case Check::Theorem3:
        actual = report(theorem3_decomposition(L, form(), entry.tensor(x.subject), x.lambda).second);
        break;
      case Check::Theorem4:
        actual = report(theorem4_decomposition(L, form(), entry.tensor(x.subject), x.lambda).second);
        break;
      case Check::Corollary3:
        actual = report(corollary3_check(L, form(), entry.tensor(x.subject)));
        break;
      case Check::ThetaZero: {
        const Matrix op = operator_of(form(), entry.tensor(x.subject));
        actual = theta(op, adjoint(form(), op), x.lambda).is_zero();
        break;
      }
      case Check::InvariantFormsDim: actual = invariant_forms_basis(L).size(); break;
      case Check::Harmonize:
        try {
          actual = harmonize_weights(entry.components, x.lambda);
        } catch (const Error &err) {
          if (err.code() == ErrorCode::TheoremContradiction)
            throw;
          actual = std::string(to_string(err.code()));
        }
        break;
      }
    } catch (const Error &err) {
      actual = std::string("error:") + std::string(to_string(err.code()));
      if (err.code() == ErrorCode::TheoremContradiction)
        contradictions.emplace_back(err.what());
    }
    std::string shown = format_expected(actual);
    for (const auto &c : contradictions)
      shown += " [contradiction: " + c + "]";
    results.push_back({x.name, format_expected(x.value), std::move(shown),
                       actual == x.value && contradictions.empty()});
  }
  return results;
}

} // namespace rotayb::catalog
