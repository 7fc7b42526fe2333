#include "doctest.h"
#include "support.hpp"

#include "rotayb/catalog.hpp"
#include "rotayb/error.hpp"
#include "rotayb/lie_algebra.hpp"
#include "rotayb/quadratic.hpp"

#include <set>
#include <tuple>

using namespace rotayb;
using support::q;

namespace {

const Vector E{1, 0, 0}, H{0, 1, 0}, F{0, 0, 1};

LieAlgebra dual_sl2() { return dual_numbers_extension(catalog::sl2(), killing_form(catalog::sl2())).first; }

Subspace t_part() {
  return Subspace::span(6, {unit_vector(6, 3), unit_vector(6, 4), unit_vector(6, 5)});
}

std::vector<LieAlgebra> catalog_algebras() {
  std::vector<LieAlgebra> out;
  for (const auto &l : catalog::list())
    out.push_back(catalog::get(l.name).algebra);
  out.push_back(LieAlgebra::abelian(3));
  return out;
}

} // namespace

TEST_CASE("sl2 brackets") {
  const LieAlgebra sl2 = catalog::sl2();
  CHECK(sl2.labels() == std::vector<std::string>{"e", "h", "f"});
  CHECK(sl2.bracket(E, F) == H);
  CHECK(sl2.bracket(H, E) == 2 * E);
  CHECK(sl2.bracket(H, F) == -2 * F);
  support::Random rng(20);
  for (int i = 0; i < 20; ++i) {
    const Vector x = rng.vector(3);
    CHECK(is_zero(sl2.bracket(x, x)));
  }
  const LieAlgebra ab = LieAlgebra::abelian(4);
  CHECK(is_zero(ab.bracket(rng.vector(4), rng.vector(4))));
  CHECK_THROWS_AS(sl2.bracket(Vector{1, 0}, E), Error);
}

TEST_CASE("validate reports antisymmetry and Jacobi violations") {
  CHECK(validate(catalog::sl2()).ok());

  BracketTable lopsided(2);
  lopsided.set(0, 1, {1, 0});
  const auto r1 = validate(lopsided);
  REQUIRE(r1.violations.size() == 1);
  CHECK(r1.violations[0].kind == Violation::Kind::Antisymmetry);
  CHECK(r1.violations[0].i == 0);
  CHECK(r1.violations[0].j == 1);

  BracketTable broken(3);
  broken.set_antisymmetric(0, 1, {0, 0, 1});
  broken.set_antisymmetric(1, 2, {1, 0, 0});
  broken.set_antisymmetric(0, 2, {1, 0, 0});
  const auto r2 = validate(broken);
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.violations[0].kind == Violation::Kind::Jacobi);
  CHECK_THROWS_AS(LieAlgebra({"a", "b", "c"}, broken), Error);

  BracketTable diagonal(2);
  diagonal.set(1, 1, {1, 0});
  CHECK_FALSE(validate(diagonal).ok());
}

TEST_CASE("every single structure constant perturbation of sl2 is detected") {
  const BracketTable base = catalog::sl2().table();
  std::size_t one_sided = 0;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> still_lie;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (const Scalar delta : {Scalar(1), Scalar(-3), q(1, 2)}) {
          BracketTable t = base;
          Vector v = t.get(i, j);
          v[k] += delta;
          t.set(i, j, v);
          CHECK_FALSE(validate(t).ok());
          ++one_sided;
          if (i < j) {
            BracketTable s = base;
            s.set_antisymmetric(i, j, v);
            if (validate(s).ok())
              still_lie.insert({i, j, k});
          }
        }
  CHECK(one_sided == 81);
  // Perturbing a pair together with its mirror keeps antisymmetry; Jacobi
  // then catches six of the nine positions. The remaining three add e to
  // [h, f], h to [e, f] or f to [e, h] and give other Lie algebras.
  const std::set<std::tuple<std::size_t, std::size_t, std::size_t>> expected{
      {0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  CHECK(still_lie == expected);
}

TEST_CASE("center") {
  CHECK(center(LieAlgebra::abelian(3)).is_full());
  CHECK(center(catalog::sl2()).is_zero());
  CHECK(center(catalog::gl2()) == Subspace::span(4, {{1, 0, 0, 1}}));
  CHECK(center(dual_sl2()).is_zero());
}

TEST_CASE("derived subalgebra") {
  CHECK(derived_subalgebra(LieAlgebra::abelian(2)).is_zero());
  CHECK(derived_subalgebra(catalog::sl2()).is_full());
  const Subspace d = derived_subalgebra(catalog::gl2());
  CHECK(d.dim() == 3);
  CHECK(d == Subspace::span(4, {{1, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  CHECK(derived_subalgebra(direct_sum(catalog::sl2(), catalog::sl2())).is_full());
}

TEST_CASE("ideal closure and ideals") {
  const LieAlgebra sl2 = catalog::sl2();
  CHECK(ideal_closure(sl2, Subspace::full(3)).is_full());
  CHECK(ideal_closure(sl2, Subspace::span(3, {E})).is_full());
  const LieAlgebra l2 = dual_sl2();
  CHECK(ideal_closure(l2, Subspace::span(6, {unit_vector(6, 3)})) == t_part());

  CHECK(is_ideal(sl2, Subspace(3)));
  CHECK(is_ideal(sl2, Subspace::full(3)));
  CHECK(is_ideal(l2, t_part()));
  CHECK_FALSE(is_ideal(sl2, Subspace::span(3, {E})));
}

TEST_CASE("ideal closure is idempotent and monotone") {
  support::Random rng(21);
  const auto algebras = catalog_algebras();
  for (int trial = 0; trial < 100; ++trial) {
    const LieAlgebra &alg = algebras[trial % algebras.size()];
    const std::size_t n = alg.dim();
    std::vector<Vector> gens;
    for (long i = rng.integer(0, 2); i > 0; --i)
      gens.push_back(rng.vector(n));
    const Subspace s = Subspace::span(n, gens);
    const Subspace c = ideal_closure(alg, s);
    CHECK(c.contains(s));
    CHECK(ideal_closure(alg, c) == c);
    CHECK(is_ideal(alg, c));
  }
}

TEST_CASE("center and derived subalgebra are ideals of every catalog algebra") {
  for (const auto &alg : catalog_algebras()) {
    CHECK(is_ideal(alg, center(alg)));
    CHECK(is_ideal(alg, derived_subalgebra(alg)));
    CHECK(validate(alg).ok());
  }
}

TEST_CASE("direct sums") {
  const LieAlgebra s = direct_sum(catalog::sl2(), catalog::sl2());
  CHECK(s.dim() == 6);
  CHECK(validate(s).ok());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 6; ++j)
      CHECK(is_zero(s.basis_bracket(i, j)));
  CHECK(s.labels()[3] == "e'");
  const LieAlgebra t = direct_sum(catalog::sl2(), LieAlgebra::abelian(1));
  CHECK(t.dim() == 4);
  CHECK(validate(t).ok());
}

TEST_CASE("quotients") {
  const LieAlgebra sl2 = catalog::sl2();
  const QuotientAlgebra same = quotient(sl2, Subspace(3));
  CHECK(same.algebra.dim() == 3);
  CHECK(same.projection == Matrix::identity(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(same.algebra.basis_bracket(i, j) == sl2.basis_bracket(i, j));

  CHECK(quotient(sl2, Subspace::full(3)).algebra.dim() == 0);
  CHECK_THROWS_AS(quotient(sl2, Subspace::span(3, {E})), Error);

  const LieAlgebra l2 = dual_sl2();
  const QuotientAlgebra qa = quotient(l2, t_part());
  CHECK(qa.algebra.dim() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(qa.algebra.basis_bracket(i, j) == sl2.basis_bracket(i, j));
  CHECK(kernel(qa.projection) == t_part());
  CHECK(qa.projection * qa.section == Matrix::identity(3));
}

TEST_CASE("quotient brackets commute with the projection") {
  support::Random rng(22);
  const LieAlgebra l2 = dual_sl2();
  const QuotientAlgebra qa = quotient(l2, t_part());
  const QuotientAlgebra qb = quotient(catalog::gl2(), center(catalog::gl2()));
  CHECK(validate(qa.algebra).ok());
  CHECK(validate(qb.algebra).ok());
  for (int trial = 0; trial < 100; ++trial) {
    const QuotientAlgebra &qq = trial % 2 ? qa : qb;
    const Vector x = rng.vector(qq.parent.dim()), y = rng.vector(qq.parent.dim());
    CHECK(qq.projection.apply(qq.parent.bracket(x, y)) ==
          qq.algebra.bracket(qq.projection.apply(x), qq.projection.apply(y)));
  }
}

TEST_CASE("induced operators") {
  const auto entry = catalog::get("sl2-dual-example3");
  const QuotientAlgebra qa = quotient(entry.algebra, t_part());
  CHECK(induce_operator(qa, Matrix::identity(6)) == Matrix::identity(3));
  CHECK(induce_operator(qa, entry.op("R")) == Matrix::identity(3));
  CHECK(induce_operator(qa, entry.op("Rstar")).is_zero());
  Matrix leak(6, 6);
  leak(0, 3) = 1; // e.t -> e leaves the ideal
  try {
    induce_operator(qa, leak);
    FAIL("expected NotInvariant");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotInvariant);
  }
}

TEST_CASE("bracket span") {
  const LieAlgebra sl2 = catalog::sl2();
  const Subspace e = Subspace::span(3, {E}), f = Subspace::span(3, {F});
  CHECK(bracket_span(sl2, e, f) == Subspace::span(3, {H}));
  CHECK(bracket_span(sl2, e, e).is_zero());
}
