// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "oracles.hpp"
#include "support.hpp"

#include "rotayb/catalog.hpp"
#include "rotayb/quadratic.hpp"
#include "rotayb/rota_baxter.hpp"
#include "rotayb/structure.hpp"
#include "rotayb/tensor.hpp"

#include <functional>
#include <iostream>

using namespace rotayb;
using support::from_oracle;
using support::q;
using support::to_oracle;

namespace {

class Criterion {
public:
  void expect(bool ok, std::string what) {
    ++checks_;
    if (!ok)
      failures_.push_back(std::move(what));
  }
  bool passed() const { return failures_.empty() && checks_ > 0; }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string> &failures() const { return failures_; }

private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

template <class T> const T *witness(const StructureReport &r, std::string_view label) {
  const auto *w = r.find(label);
  return w ? std::get_if<T>(w) : nullptr;
}

Subspace span_units(std::size_t n, std::size_t from, std::size_t to) {
  std::vector<Vector> v;
  for (std::size_t i = from; i < to; ++i)
    v.push_back(unit_vector(n, i));
  return Subspace::span(n, v);
}

void example1(Criterion &c) {
  const auto e = catalog::get("gl2-example1");
  const Tensor2 &r = e.tensor("r");
  c.expect(is_cybe_solution(e.algebra, r), "r solves CYBE");
  const Vector unit{1, 0, 0, 1};
  c.expect(r + tau(r) == Tensor2::outer(unit, unit), "r + tau(r) = E x E");
  c.expect(is_ad_invariant(e.algebra, r + tau(r)), "E x E is ad-invariant");
  const Matrix op = operator_of(*e.form, r);
  c.expect(find_weights(e.algebra, op) == WeightSet::of({Scalar(0)}), "weights of R are {0}");
  const auto real = oracle::gl2();
  const auto w = oracle::weights(real, oracle::operator_of(real.trace_form(), to_oracle(r)));
  c.expect(w && *w == std::set<oracle::Q>{0}, "oracle weights are {0}");
}

void example3(Criterion &c) {
  const auto e = catalog::get("sl2-dual-example3");
  const Matrix &R = e.op("R");
  c.expect(find_weights(e.algebra, R) == WeightSet::of({Scalar(-1)}), "weights of R are {-1}");
  const Matrix adj = adjoint(*e.form, R);
  for (std::size_t i = 0; i < 3; ++i) {
    c.expect(adj.column(i) == unit_vector(6, i + 3), "R*(a) = a.t");
    c.expect(adj.column(i + 3) == unit_vector(6, i + 3), "R*(a.t) = a.t");
  }
  c.expect(theorem1_condition(e.algebra, *e.form, e.tensor("r"), -1).holds(),
           "kernel condition for R at -1");
  c.expect(find_weights(e.algebra, adj) == WeightSet::empty(), "R* has no weight");
  c.expect(kernel_condition_weights(e.algebra, *e.form, e.tensor("r"), true) == WeightSet::empty(),
           "R* kernel condition fails for every weight");
  for (const Scalar lambda : {Scalar(-1), Scalar(0), Scalar(1), q(7, 3)})
    c.expect(remark1_condition(e.algebra, *e.form, e.tensor("r"), lambda).verdict == Verdict::Fails,
             "R* kernel condition fails at " + format_scalar(lambda));
  const auto real = oracle::sl2_dual();
  const auto oracle_weights = oracle::weights(real, to_oracle(adj));
  c.expect(oracle_weights && oracle_weights->empty(), "oracle finds no weight for R*");
}

void example4(Criterion &c) {
  const auto e = catalog::get("sl2-dual-example3");
  const Matrix Q = Matrix::identity(6) - e.op("R");
  c.expect(e.op("Q") == Q, "catalog Q = id - R");
  c.expect(find_weights(e.algebra, Q) == WeightSet::of({Scalar(-1)}), "weights of Q are {-1}");
  c.expect(!cybe_element(e.algebra, e.tensor("example4")).is_zero(),
           "tensor example4 has nonzero CYBE element");
  c.expect(!is_cybe_solution(e.algebra, tensor_of(*e.form, Q)), "tensor of Q is not a solution");
  const auto real = oracle::sl2_dual();
  c.expect(!oracle::is_zero(real.cybe(to_oracle(e.tensor("example4")))),
           "oracle CYBE element is nonzero");
}

void example5(Criterion &c) {
  const auto e = catalog::get("sl2-dual-example3");
  for (const char *name : {"r", "example4"}) {
    const Tensor2 &r = e.tensor(name);
    const Matrix op = operator_of(*e.form, r);
    const bool invariant = is_ad_invariant(e.algebra, r + tau(r));
    const bool centroid = centroid_check(e.algebra, op + adjoint(*e.form, op));
    if (std::string(name) == "r") {
      c.expect(invariant, "r + tau(r) is ad-invariant");
      c.expect(centroid, "R + R* is in the centroid");
    }
    c.expect(invariant == centroid, std::string("biconditional on ") + name);
  }
}

void theorem2(Criterion &c) {
  const auto e = catalog::get("sl2-dual-example3");
  const auto rep = theorem2_pipeline(e.algebra, *e.form, e.tensor("r"), -1);
  c.expect(rep.holds() && rep.consistent(), "pipeline holds");
  const auto *ideal = witness<Subspace>(rep, "I_lambda");
  c.expect(ideal && *ideal == span_units(6, 3, 6), "I_lambda = L.t");
  c.expect(ideal && ideal->dim() == 3, "dim I_lambda = 3");
  for (const char *label : {"R_invariant", "R*_invariant", "induced_R_rota_baxter",
                            "induced_R*_rota_baxter", "theta_vanishes_on_quotient_commutators"}) {
    const bool *b = witness<bool>(rep, label);
    c.expect(b && *b, label);
  }
  const auto *dim = witness<Scalar>(rep, "quotient_dim");
  c.expect(dim && *dim == 3, "quotient has dimension 3");
}

void corollary3(Criterion &c) {
  const auto e = catalog::get("sl2");
  const Tensor2 r = catalog::sl2_standard_r();
  const BilinearForm kappa = killing_form(e.algebra);
  c.expect(is_cybe_solution(e.algebra, r), "r solves CYBE");
  c.expect(is_ad_invariant(e.algebra, r + tau(r)), "r + tau(r) is ad-invariant");
  const Matrix op = operator_of(kappa, r);
  c.expect(find_weights(e.algebra, op) == WeightSet::of({Scalar(-4)}), "weights are {-4}");
  c.expect(theta(op, adjoint(kappa, op), -4).is_zero(), "theta_-4 = 0");
  c.expect(corollary3_check(e.algebra, kappa, r).holds(), "corollary check holds");
  const Matrix op4 = operator_of(q(1, 4) * kappa, r);
  c.expect(find_weights(e.algebra, op4) == WeightSet::of({Scalar(-1)}), "kappa/4 gives {-1}");

  // brute-force reference values
  const auto real = oracle::sl2();
  const auto okappa = real.killing();
  c.expect(from_oracle(okappa) == kappa.gram(), "oracle Killing form");
  c.expect(oracle::is_zero(real.cybe(to_oracle(r))), "oracle CYBE");
  const auto oop = oracle::operator_of(okappa, to_oracle(r));
  c.expect(from_oracle(oop) == op, "oracle operator");
  const auto w = oracle::weights(real, oop);
  c.expect(w && *w == std::set<oracle::Q>{-4}, "oracle weights {-4}");
  const auto w4 = oracle::weights(real, oracle::operator_of(oracle::add(oracle::zeros(3, 3), okappa, q(1, 4)),
                                                             to_oracle(r)));
  c.expect(w4 && *w4 == std::set<oracle::Q>{-1}, "oracle weights {-1} for kappa/4");
}

void theorem3(Criterion &c) {
  const auto pa = catalog::get("sl2-plus-abelian");
  const auto [dec, rep] = theorem3_decomposition(pa.algebra, *pa.form, pa.tensor("r"), -4);
  c.expect(rep.holds() && rep.consistent(), "positive case holds");
  const auto *i1 = witness<Subspace>(rep, "I1");
  const auto *i2 = witness<Subspace>(rep, "I2");
  c.expect(i1 && i1->is_zero(), "I1 = 0");
  c.expect(i2 && *i2 == span_units(4, 0, 3), "I2 = sl2 component");
  c.expect(dec.is_direct(), "[L, L] = I1 + I2 directly");

  const auto l2 = catalog::get("sl2-dual-example3");
  const auto [dec2, neg] = theorem3_decomposition(l2.algebra, *l2.form, l2.tensor("r"), -1);
  c.expect(neg.verdict == Verdict::NotApplicable, "negative case not applicable");
  c.expect(neg.blocked_by == ErrorCode::NotBothRotaBaxter, "blocked by NotBothRotaBaxter");
  const auto *adj_image = witness<Subspace>(neg, "R*(I1)");
  c.expect(adj_image && !adj_image->is_zero(), "witness R*(I1) != 0");
}

void theorem4(Criterion &c) {
  const auto e = catalog::get("sl2");
  const auto [dec, rep] = theorem4_decomposition(e.algebra, *e.form, e.tensor("r"), -4);
  c.expect(rep.holds() && rep.consistent(), "sl2 case holds");
  const auto *spec = witness<std::vector<Scalar>>(rep, "spectrum");
  c.expect(spec && *spec == std::vector<Scalar>{4}, "spectrum {4}");
  const auto *i1 = witness<Subspace>(rep, "I1");
  const auto *i2 = witness<Subspace>(rep, "I2");
  c.expect(i1 && i1->is_full(), "I1 = L");
  c.expect(i2 && i2->is_zero(), "I2 = 0");
  const Matrix op = e.op("R");
  const Matrix th = theta(op, adjoint(*e.form, op), -4);
  c.expect(center(e.algebra).is_zero(), "Z(L) = 0");
  c.expect(center(e.algebra).contains(image(th, Subspace::full(3))), "theta_-4(L) in Z(L)");

  const auto pa = catalog::get("sl2-plus-abelian");
  const auto [dec2, rep2] = theorem4_decomposition(pa.algebra, *pa.form, pa.tensor("r"), -4);
  c.expect(rep2.holds() && rep2.consistent(), "sl2 + F case holds");
  const auto *spec2 = witness<std::vector<Scalar>>(rep2, "spectrum");
  c.expect(spec2 && *spec2 == std::vector<Scalar>{0, 4}, "spectrum {4, 0}");
  const auto *j1 = witness<Subspace>(rep2, "I1");
  const auto *j2 = witness<Subspace>(rep2, "I2");
  c.expect(j1 && *j1 == span_units(4, 0, 3), "I1 = sl2 component");
  c.expect(j2 && *j2 == span_units(4, 3, 4), "I2 = abelian component");
}

void properties(Criterion &c) {
  constexpr int cases = 100;
  support::Random rng(900);
  struct Instance {
    LieAlgebra algebra;
    BilinearForm form;
    Tensor2 r;
  };
  std::vector<Instance> all, solutions;
  for (const auto &l : catalog::list()) {
    const auto e = catalog::get(l.name);
    for (const auto &[name, r] : e.tensors) {
      all.push_back({e.algebra, *e.form, r});
      if (is_cybe_solution(e.algebra, r))
        solutions.push_back(all.back());
    }
  }

  int involution = 0, round_trip = 0, swap = 0, skew = 0, prop1 = 0, thm1 = 0, scaling = 0;
  for (int trial = 0; trial < cases; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const BilinearForm g(rng.symmetric_nondegenerate(n));
    const Matrix m = rng.matrix(n, n);
    const Tensor2 t(rng.matrix(n, n));
    involution += adjoint(g, adjoint(g, m)) == m;
    round_trip += tensor_of(g, operator_of(g, t)) == t;
    swap += tau(tau(t)) == t;
    const Tensor2 s = trial % 2 ? t - tau(t) : t;
    const Matrix sop = operator_of(g, s);
    skew += (tau(s) == Scalar(-1) * s) == (sop + adjoint(g, sop)).is_zero();

    const Instance &sol = solutions[trial % solutions.size()];
    const Vector x = rng.vector(sol.algebra.dim()), y = rng.vector(sol.algebra.dim());
    prop1 += is_zero(prop1_identity1(sol.algebra, sol.form, sol.r, x, y)) &&
             is_zero(prop1_identity2(sol.algebra, sol.form, sol.r, x, y));

    const Instance &inst = all[trial % all.size()];
    const Tensor2 r = rng.nonzero_scalar() * inst.r;
    const Matrix op = operator_of(inst.form, r);
    const WeightSet w = find_weights(inst.algebra, op);
    Scalar lambda = rng.scalar(6);
    if (trial % 2 == 0 && w.kind() == WeightSet::Kind::Finite && !w.values().empty())
      lambda = w.values().front();
    const bool cybe = is_cybe_solution(inst.algebra, r);
    const bool rb = is_rota_baxter(inst.algebra, op, lambda).holds;
    const bool cond = theorem1_condition(inst.algebra, inst.form, r, lambda).holds();
    thm1 += (!cybe || cond == rb) && (!rb || cond == cybe);

    const Scalar k = rng.nonzero_scalar();
    const WeightSet scaled = find_weights(inst.algebra, k * op);
    bool law = scaled.kind() == w.kind();
    if (law && w.kind() == WeightSet::Kind::Finite) {
      std::vector<Scalar> expected;
      for (const auto &v : w.values())
        expected.push_back(k * v);
      law = scaled == WeightSet::of(expected);
    }
    scaling += law;
  }
  c.expect(involution == cases, "adjoint involution");
  c.expect(round_trip == cases, "tensor/operator round trip");
  c.expect(swap == cases, "tau involution");
  c.expect(skew == cases, "skew iff R + R* = 0");
  c.expect(prop1 == cases, "bracket identities for CYBE solutions");
  c.expect(thm1 == cases, "kernel condition biconditional");
  c.expect(scaling == cases, "scaling law");
}

void negative_control(Criterion &c) {
  const BracketTable base = catalog::sl2().table();
  std::size_t detected = 0, total = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        BracketTable t = base;
        Vector v = t.get(i, j);
        v[k] += 1;
        t.set(i, j, v);
        ++total;
        detected += !validate(t).ok();
      }
  c.expect(total == 27 && detected == total, "every perturbed structure constant is detected");
  const auto e = catalog::get("sl2-dual-example3");
  const Tensor2 bumped = e.tensor("r") + Tensor2::from_terms(6, {{0, 0, 1}});
  c.expect(!is_cybe_solution(e.algebra, bumped), "r + e x e is not a solution");
  c.expect(!oracle::is_zero(oracle::sl2_dual().cybe(to_oracle(bumped))),
           "oracle agrees r + e x e is not a solution");
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion &)>>> criteria{
      {"gl2 weight-0 solution", example1},
      {"projection on sl2 x F[t]/(t^2)", example3},
      {"Q = id - R and the tensor example4", example4},
      {"symmetric part and centroid", example5},
      {"descent to the quotient by I_lambda", theorem2},
      {"standard r-matrix on sl2", corollary3},
      {"[L, L] splitting", theorem3},
      {"root-space splitting", theorem4},
      {"randomized property suites", properties},
      {"negative controls", negative_control},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception &ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first << " (" << c.checks() << " checks)";
    if (!c.passed()) {
      ++failed;
      for (const auto &f : c.failures())
        std::cout << "\n    failed: " << f;
    }
    std::cout << '\n';
  }
  return failed == 0 ? 0 : 1;
}
