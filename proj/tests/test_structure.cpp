#include "doctest.h"
#include "support.hpp"

#include "rotayb/catalog.hpp"
#include "rotayb/error.hpp"
#include "rotayb/quadratic.hpp"
#include "rotayb/structure.hpp"

using namespace rotayb;
using support::q;

namespace {

template <class T> const T &witness(const StructureReport &r, std::string_view label) {
  const auto *w = r.find(label);
  REQUIRE(w != nullptr);
  REQUIRE(std::holds_alternative<T>(*w));
  return std::get<T>(*w);
}

Subspace t_part() {
  return Subspace::span(6, {unit_vector(6, 3), unit_vector(6, 4), unit_vector(6, 5)});
}

Subspace first_copy(std::size_t n) {
  return Subspace::span(n, {unit_vector(n, 0), unit_vector(n, 1), unit_vector(n, 2)});
}

// h ^ e on sl2
Tensor2 skew_he() { return Tensor2::from_terms(3, {{1, 0, 1}, {0, 1, -1}}); }

ErrorCode code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::TheoremContradiction;
}

} // namespace

TEST_CASE("kernel condition for R on sl2") {
  const auto e = catalog::get("sl2");
  const auto at = theorem1_condition(e.algebra, *e.form, e.tensor("r"), -4);
  CHECK(at.holds());
  CHECK(at.consistent());
  CHECK(witness<bool>(at, "cybe"));
  CHECK(witness<bool>(at, "rota_baxter"));

  const auto off = theorem1_condition(e.algebra, *e.form, e.tensor("r"), -1);
  CHECK(off.verdict == Verdict::Fails);
  CHECK(off.consistent());
  CHECK_FALSE(witness<bool>(off, "rota_baxter"));
  CHECK_FALSE(off.failures.empty());

  CHECK(kernel_condition_weights(e.algebra, *e.form, e.tensor("r"), false) ==
        WeightSet::of({Scalar(-4)}));
  CHECK(remark1_condition(e.algebra, *e.form, e.tensor("r"), -4).holds());
}

TEST_CASE("kernel conditions for R and R* on the dual numbers extension") {
  const auto e = catalog::get("sl2-dual-example3");
  const auto t1 = theorem1_condition(e.algebra, *e.form, e.tensor("r"), -1);
  CHECK(t1.holds());
  CHECK(t1.consistent());
  const auto r1 = remark1_condition(e.algebra, *e.form, e.tensor("r"), -1);
  CHECK(r1.verdict == Verdict::Fails);
  CHECK(r1.consistent());
  CHECK_FALSE(witness<bool>(r1, "adjoint_rota_baxter"));
  CHECK(kernel_condition_weights(e.algebra, *e.form, e.tensor("r"), true) == WeightSet::empty());
  CHECK(kernel_condition_weights(e.algebra, *e.form, e.tensor("r"), false) ==
        WeightSet::of({Scalar(-1)}));
}

TEST_CASE("kernel condition weights agree with sampled weights") {
  support::Random rng(60);
  for (const auto &l : catalog::list()) {
    const auto e = catalog::get(l.name);
    if (!e.form)
      continue;
    for (const auto &[name, r] : e.tensors) {
      CAPTURE(name);
      for (const bool adj : {false, true}) {
        const WeightSet w = kernel_condition_weights(e.algebra, *e.form, r, adj);
        for (int k = 0; k < 3; ++k) {
          const Scalar lambda = k == 0 && w.kind() == WeightSet::Kind::Finite && !w.values().empty()
                                    ? w.values().front()
                                    : rng.scalar(6);
          const auto rep = adj ? remark1_condition(e.algebra, *e.form, r, lambda)
                               : theorem1_condition(e.algebra, *e.form, r, lambda);
          CHECK(rep.holds() == w.contains(lambda));
          CHECK(rep.consistent());
        }
      }
    }
  }
}

TEST_CASE("central theta implies CYBE") {
  const auto e = catalog::get("sl2");
  const Matrix op = e.op("R");
  const auto ok = corollary1_check(e.algebra, *e.form, op, -4);
  CHECK(ok.holds());
  CHECK(witness<bool>(ok, "cybe"));
  // weight zero and non-Rota-Baxter operators fall outside the statement
  const auto zero = corollary1_check(e.algebra, *e.form, op, 0);
  CHECK(zero.verdict == Verdict::NotApplicable);
  CHECK(zero.blocked_by == ErrorCode::ZeroWeight);
  const auto wrong = corollary1_check(e.algebra, *e.form, op, -1);
  CHECK(wrong.verdict == Verdict::NotApplicable);
  CHECK(wrong.blocked_by == ErrorCode::NotRotaBaxter);

  // theta lands in L.t, which is not central
  const auto l2 = catalog::get("sl2-dual-example3");
  const auto blocked = corollary1_check(l2.algebra, *l2.form, l2.op("R"), -1);
  CHECK(blocked.verdict == Verdict::NotApplicable);
}

TEST_CASE("vanishing theta implies CYBE and invariance") {
  const auto e = catalog::get("sl2-scaled");
  const auto rep = corollary4_check(e.algebra, *e.form, e.op("R"), -1);
  CHECK(rep.holds());
  CHECK(witness<bool>(rep, "symmetric_part_invariant"));
  const auto l2 = catalog::get("sl2-dual-example3");
  CHECK(corollary4_check(l2.algebra, *l2.form, l2.op("R"), -1).verdict == Verdict::NotApplicable);
}

TEST_CASE("I_lambda") {
  const auto e = catalog::get("sl2");
  CHECK(ideal_I_lambda(e.algebra, *e.form, e.tensor("r"), -4).is_zero());
  CHECK(ideal_I_lambda(e.algebra, *e.form, e.tensor("r"), -1).is_full());
  const auto l2 = catalog::get("sl2-dual-example3");
  CHECK(ideal_I_lambda(l2.algebra, *l2.form, l2.tensor("r"), -1) == t_part());
  CHECK(code_of([&] { ideal_I_lambda(l2.algebra, *l2.form, l2.tensor("example4"), -1); }) ==
        ErrorCode::HypothesisViolated);
}

TEST_CASE("descent to the quotient by I_lambda") {
  const auto l2 = catalog::get("sl2-dual-example3");
  const auto rep = theorem2_pipeline(l2.algebra, *l2.form, l2.tensor("r"), -1);
  CHECK(rep.holds());
  CHECK(witness<Subspace>(rep, "I_lambda") == t_part());
  CHECK(witness<Scalar>(rep, "quotient_dim") == 3);
  CHECK(witness<Matrix>(rep, "induced_R") == Matrix::identity(3));
  CHECK(witness<Matrix>(rep, "induced_R*").is_zero());
  CHECK(witness<bool>(rep, "induced_R_rota_baxter"));
  CHECK(witness<bool>(rep, "induced_R*_rota_baxter"));
  CHECK(witness<bool>(rep, "theta_vanishes_on_quotient_commutators"));

  const auto e = catalog::get("sl2");
  const auto trivial = theorem2_pipeline(e.algebra, *e.form, e.tensor("r"), -4);
  CHECK(trivial.holds());
  CHECK(witness<Scalar>(trivial, "quotient_dim") == 3);
}

TEST_CASE("simplicity") {
  CHECK(is_simple(catalog::sl2()));
  CHECK_FALSE(is_simple(catalog::gl2()));
  CHECK_FALSE(is_simple(LieAlgebra::abelian(1)));
  CHECK_FALSE(is_simple(direct_sum(catalog::sl2(), catalog::sl2())));
  CHECK_FALSE(is_simple(catalog::get("sl2-dual-example3").algebra));
}

TEST_CASE("weight and theta on a simple algebra") {
  const auto e = catalog::get("sl2");
  const auto rep = corollary3_check(e.algebra, *e.form, e.tensor("r"));
  CHECK(rep.holds());
  CHECK(witness<WeightSet>(rep, "weights") == WeightSet::of({Scalar(-4)}));
  CHECK(witness<Scalar>(rep, "lambda") == -4);
  CHECK(witness<bool>(rep, "theta_zero"));

  const auto scaled = catalog::get("sl2-scaled");
  CHECK(witness<Scalar>(corollary3_check(scaled.algebra, *scaled.form, scaled.tensor("r")),
                        "lambda") == -1);

  const auto skew = corollary3_check(e.algebra, *e.form, skew_he());
  CHECK(skew.verdict == Verdict::NotApplicable);
  CHECK(skew.blocked_by == ErrorCode::HypothesisViolated);
  CHECK(corollary3_check(e.algebra, *e.form, Tensor2(3)).blocked_by ==
        ErrorCode::HypothesisViolated);

  const auto gl = catalog::get("gl2-example1");
  CHECK(corollary3_check(gl.algebra, *gl.form, gl.tensor("r")).blocked_by == ErrorCode::NotSimple);
}

TEST_CASE("splitting of the derived algebra") {
  const auto e = catalog::get("sl2");
  const auto [dec, rep] = theorem3_decomposition(e.algebra, *e.form, e.tensor("r"), -4);
  CHECK(rep.holds());
  CHECK(rep.direction == "forward+converse");
  CHECK(dec.is_direct());
  CHECK(witness<Subspace>(rep, "I1").is_zero());
  CHECK(witness<Subspace>(rep, "I2").is_full());

  const auto l2 = catalog::get("sl2-dual-example3");
  const auto [dec2, rep2] = theorem3_decomposition(l2.algebra, *l2.form, l2.tensor("r"), -1);
  CHECK(rep2.verdict == Verdict::NotApplicable);
  CHECK(rep2.blocked_by == ErrorCode::NotBothRotaBaxter);
  CHECK(rep2.direction == "forward");
  CHECK(witness<Subspace>(rep2, "I1") == t_part());
  CHECK(witness<Subspace>(rep2, "R(I1)").is_zero());
  CHECK(witness<Subspace>(rep2, "R*(I1)") == t_part());

  CHECK(theorem3_decomposition(e.algebra, *e.form, e.tensor("r"), 0).second.blocked_by ==
        ErrorCode::ZeroWeight);

  const auto sum = catalog::get("sl2-sum-example2");
  const auto [dec3, rep3] = theorem3_decomposition(sum.algebra, *sum.form, sum.tensor("r"), -4);
  CHECK(rep3.holds());
  CHECK(dec3.is_direct());
}

TEST_CASE("root-space splitting") {
  const auto e = catalog::get("sl2");
  const auto [dec, rep] = theorem4_decomposition(e.algebra, *e.form, e.tensor("r"), -4);
  CHECK(rep.holds());
  CHECK(witness<std::vector<Scalar>>(rep, "spectrum") == std::vector<Scalar>{4});
  CHECK(witness<Subspace>(rep, "I1").is_full());
  CHECK(witness<Subspace>(rep, "I2").is_zero());
  CHECK(dec.labels == std::vector<std::string>{"L(4)"});

  const auto pa = catalog::get("sl2-plus-abelian");
  const auto [dec2, rep2] = theorem4_decomposition(pa.algebra, *pa.form, pa.tensor("r"), -4);
  CHECK(rep2.holds());
  CHECK(witness<std::vector<Scalar>>(rep2, "spectrum") == std::vector<Scalar>{0, 4});
  CHECK(witness<Subspace>(rep2, "I1") == first_copy(4));
  CHECK(witness<Subspace>(rep2, "I2") == Subspace::span(4, {unit_vector(4, 3)}));
  CHECK(dec2.is_direct());

  const auto l2 = catalog::get("sl2-dual-example3");
  CHECK(theorem4_decomposition(l2.algebra, *l2.form, l2.tensor("r"), -1).second.blocked_by ==
        ErrorCode::NotBothRotaBaxter);
}

TEST_CASE("harmonizing weights") {
  const auto sum = catalog::get("sl2-sum-example2");
  CHECK(harmonize_weights(sum.components, -4) == std::vector<Scalar>{1, 2});
  CHECK(harmonize_weights(sum.components, 2) == std::vector<Scalar>{q(-1, 2), -1});
  CHECK(code_of([&] { harmonize_weights(sum.components, 0); }) == ErrorCode::ZeroTargetWeight);

  const auto single = std::vector<Component>{sum.components.front()};
  CHECK(harmonize_weights(single, -1) == std::vector<Scalar>{q(1, 4)});

  const auto mixed = catalog::get("sl2-sum-mixed");
  CHECK(code_of([&] { harmonize_weights(mixed.components, -4); }) ==
        ErrorCode::MixedZeroNonzeroWeights);

  const LieAlgebra s = catalog::sl2();
  const BilinearForm k = killing_form(s);
  const Tensor2 bad = Tensor2::from_terms(3, {{0, 0, 1}, {1, 1, 1}});
  REQUIRE(find_weights(s, operator_of(k, bad)) == WeightSet::empty());
  CHECK(code_of([&] { harmonize_weights({{s, k, bad}}, -1); }) == ErrorCode::NotRotaBaxter);
}

TEST_CASE("harmonized sums are Rota-Baxter of the target weight") {
  support::Random rng(61);
  const auto sum = catalog::get("sl2-sum-example2");
  for (int trial = 0; trial < 100; ++trial) {
    const Scalar target = rng.nonzero_scalar();
    const auto mu = harmonize_weights(sum.components, target);
    const Component c = combine_components(sum.components, mu);
    CHECK(is_rota_baxter(c.algebra, operator_of(c.form, c.r), target).holds);
  }
}

TEST_CASE("abelian algebras") {
  support::Random rng(62);
  const LieAlgebra ab = LieAlgebra::abelian(3);
  const BilinearForm g(rng.symmetric_nondegenerate(3));
  const Tensor2 r(rng.matrix(3, 3));
  CHECK(theorem1_condition(ab, g, r, rng.scalar()).holds());
  CHECK(ideal_I_lambda(ab, g, r, 1).is_zero());
  const auto [dec, rep] = theorem3_decomposition(ab, g, r, 1);
  CHECK(dec.ambient.is_zero());
  CHECK(rep.consistent());
}

TEST_CASE("decompositions") {
  Decomposition d{Subspace::full(3), {first_copy(3), Subspace(3)}, {"a", "b"}};
  CHECK(d.is_direct());
  d.parts[1] = Subspace::span(3, {unit_vector(3, 0)});
  CHECK_FALSE(d.is_direct());
  Decomposition short_of{Subspace::full(4), {first_copy(4)}, {"a"}};
  CHECK_FALSE(short_of.is_direct());
}
