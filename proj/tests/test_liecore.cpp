#include "doctest.h"
#include "lieon/classical.hpp"
#include "support/generators.hpp"

using namespace lieon;
using namespace lieon::testing;

namespace {

StructureConstants heisenberg() {
  StructureConstants sc(3);
  sc.add_bracket(0, 1, 2, 1);
  return sc;
}

StructureConstants dyon2() {
  StructureConstants sc(2);
  sc.add_bracket(0, 1, 1, 1);
  return sc;
}

// basis h, x, y
StructureConstants sl2() {
  StructureConstants sc(3);
  sc.add_bracket(0, 1, 1, 2);
  sc.add_bracket(0, 2, 2, -2);
  sc.add_bracket(1, 2, 0, 1);
  return sc;
}

Representation sl2_standard() {
  Matrix h = Matrix::diagonal({Scalar(1), Scalar(-1)});
  Matrix x(2, 2), y(2, 2);
  x(0, 1) = 1;
  y(1, 0) = 1;
  return Representation{LieAlgebra(sl2()), 2, {h, x, y}};
}

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

Matrix elementary(std::size_t m, std::size_t i, std::size_t j) {
  Matrix a(m, m);
  a(i, j) = 1;
  return a;
}

}  // namespace

TEST_CASE("jacobiator examples") {
  CHECK(jacobiator(StructureConstants(4)).empty());
  CHECK(jacobiator(heisenberg()).empty());
  StructureConstants bad(3);
  bad.add_bracket(0, 1, 0, 1);
  bad.add_bracket(0, 2, 2, 1);
  Jacobiator j = jacobiator(bad);
  REQUIRE(j.size() == 1);
  // [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = 0 + [e2,-e3] + [e3,e1] = -e3
  CHECK(j.begin()->second == Vector{0, 0, -1});
  CHECK_THROWS_AS(LieAlgebra{bad}, NotLieError);
}

TEST_CASE("add examples") {
  StructureConstants h = heisenberg();
  CHECK(add(h, StructureConstants(3)) == h);
  CHECK(add(h, scaled(h, Scalar(-1))).is_zero());
  // dyons with centers span(e1,e2) and span(e3,e4) and lines e3 and e1
  StructureConstants d1(4), d2(4);
  d1.add_bracket(2, 3, 2, 1);
  d2.add_bracket(0, 1, 0, 1);
  CHECK(satisfies_jacobi(add(d1, d2)));
  CHECK_THROWS_AS(add(h, StructureConstants(2)), DimensionError);
}

TEST_CASE("compatible examples") {
  LieAlgebra g(sl2());
  CHECK(compatible(g, g));
  StructureConstants t1(5), t2(5);
  t1.add_bracket(2, 3, 4, 1);
  t2.add_bracket(0, 1, 4, 1);
  CHECK(compatible(t1, t2));
  // dyon with center span(e1,e2), line e3; triadon with center span(e3,e4), line e3
  StructureConstants dy(4), tr(4);
  dy.add_bracket(2, 3, 2, 1);
  tr.add_bracket(0, 1, 2, 1);
  CHECK_FALSE(compatible(dy, tr));
}

TEST_CASE("center, derived and series") {
  StructureConstants h = heisenberg();
  CHECK(center(h) == Subspace::span({e(3, 2)}, 3));
  CHECK(derived(h) == Subspace::span({e(3, 2)}, 3));
  CHECK(is_nilpotent(h));
  StructureConstants b = dyon2();
  CHECK(center(b).dim() == 0);
  CHECK(derived(b) == Subspace::span({e(2, 1)}, 2));
  CHECK(is_solvable(b));
  CHECK_FALSE(is_nilpotent(b));
  StructureConstants so3 = build_algebra({Family::SO, 3, {}}).sc();
  CHECK(derived(so3).dim() == 3);
  CHECK_FALSE(is_solvable(so3));
  CHECK(derived_series(b).back().dim() == 0);
  CHECK(lower_central_series(b).back().dim() == 1);
}

TEST_CASE("killing form and radical") {
  CHECK(killing_form(StructureConstants(3)).is_zero());
  CHECK(radical(StructureConstants(3)).dim() == 3);
  CHECK(killing_form(heisenberg()).is_zero());
  CHECK(radical(heisenberg()).dim() == 3);
  Matrix k = killing_form(sl2());
  // ad h = diag(0, 2, -2)
  CHECK(k(0, 0) == 8);
  CHECK(k(1, 2) == 4);
  CHECK(radical(sl2()).dim() == 0);
}

TEST_CASE("ad examples") {
  CHECK(ad(heisenberg(), e(3, 2)).is_zero());
  Matrix a = ad(dyon2(), e(2, 0));
  CHECK(a * e(2, 1) == e(2, 1));
  CHECK(is_zero(a * e(2, 0)));
  Matrix t = ad(heisenberg(), e(3, 0));
  CHECK(t * e(3, 1) == e(3, 2));
  CHECK(is_zero(t * e(3, 2)));
}

TEST_CASE("constructions") {
  CHECK(gamma_A(Matrix::identity(1)).sc() == dyon2());
  LieAlgebra t = gamma_A(elementary(2, 0, 1));
  CHECK(classify_lieon(t.sc()).cls == LieonClass::Triadon);
  CHECK(is_nilpotent(t.sc()));
  StructureConstants b3(3);
  b3.add_bracket(0, 1, 1, 1);
  CHECK(direct_sum(LieAlgebra(dyon2()), LieAlgebra::abelian(1)).sc() == b3);
}

TEST_CASE("classify examples") {
  CHECK(classify_lieon(StructureConstants(4)).cls == LieonClass::Abelian);
  StructureConstants t5 = direct_sum(LieAlgebra(heisenberg()), LieAlgebra::abelian(2)).sc();
  Classification c = classify_lieon(t5);
  REQUIRE(c.cls == LieonClass::Triadon);
  CHECK(c.spec->center.dim() == 3);
  CHECK(c.spec->line == derived(t5));
  CHECK(classify_lieon(sl2()).cls == LieonClass::Other);
  CHECK(lieon_structure(*c.spec) == t5);
}

TEST_CASE("change_basis and from_basis are inverse") {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    LieAlgebra g = random_sparse_lie(rng, static_cast<std::size_t>(uniform(rng, 2, 5)));
    Matrix b = random_invertible(rng, g.dim());
    StructureConstants h = change_basis(g.sc(), b);
    CHECK(satisfies_jacobi(h));
    CHECK(from_basis(h, b) == g.sc());
  }
}

TEST_CASE("property: random algebras satisfy Jacobi and duality") {
  Rng rng(22);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 6));
    LieAlgebra a = random_sparse_lie(rng, n), b = random_sparse_lie(rng, n);
    CHECK(jacobiator(a.sc()).empty());
    CHECK(compatible(a, b) == jacobi_compatible(a.sc(), b.sc()));
    CHECK(compatible(a, b) == schouten(lie_to_bivector(a), lie_to_bivector(b)).is_zero());
  }
}

TEST_CASE("property: radical is a solvable ideal") {
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    LieAlgebra s = random_solvable(rng, static_cast<std::size_t>(uniform(rng, 1, 3)));
    StructureConstants g = direct_sum(LieAlgebra(sl2()), s).sc();
    g = change_basis(g, random_invertible(rng, g.dim(), 1));
    Subspace r = radical(g);
    CHECK(r.dim() == s.dim());
    CHECK(is_ideal(g, r));
    CHECK(is_solvable(restrict(LieAlgebra(g), r).sc()));
  }
}

TEST_CASE("property: gamma of elementary operators") {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        CHECK(classify_lieon(gamma_A(elementary(m, i, j)).sc()).cls ==
              (i == j ? LieonClass::Dyon : LieonClass::Triadon));
}

TEST_CASE("property: semidirect products split back into factors") {
  Representation rho = sl2_standard();
  REQUIRE(is_representation(rho));
  LieAlgebra g = semidirect(rho.algebra, rho);
  Subspace v = Subspace::span({e(5, 3), e(5, 4)}, 5);
  Subspace s = Subspace::span({e(5, 0), e(5, 1), e(5, 2)}, 5);
  CHECK(is_ideal(g.sc(), v));
  CHECK(quotient(g, v).sc() == sl2());
  CHECK(restrict(g, s).sc() == sl2());
  CHECK(restrict(g, v).sc().is_zero());
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(quotient(LieAlgebra(sl2()), Subspace::span({e(3, 0)}, 3)), ClosureError);
  CHECK_THROWS_AS(restrict(LieAlgebra(sl2()), Subspace::span({e(3, 1), e(3, 2)}, 3)), ClosureError);
}
