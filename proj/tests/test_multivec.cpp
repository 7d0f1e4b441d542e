#include "doctest.h"
#include "lieon/classical.hpp"
#include "support/generators.hpp"

using namespace lieon;
using namespace lieon::testing;

namespace {

MultiVector x(std::size_t n, std::size_t i) { return MultiVector::x(n, i); }
MultiVector xi(std::size_t n, std::size_t i) { return MultiVector::xi(n, i); }
MultiVector xixi(std::size_t n, std::size_t i, std::size_t j) { return wedge(xi(n, i), xi(n, j)); }

int skew_sign(std::size_t p, std::size_t q) { return (p % 2 == 0 && q % 2 == 0) ? -1 : 1; }

}  // namespace

TEST_CASE("wedge examples") {
  CHECK(wedge(xi(3, 0), xi(3, 1)) == MultiVector::monomial(3, 1, {0, 0, 0}, {0, 1}));
  CHECK(wedge(xi(3, 1), xi(3, 0)) == MultiVector::monomial(3, -1, {0, 0, 0}, {0, 1}));
  CHECK(wedge(xi(3, 0), xi(3, 0)).is_zero());
  MultiVector lhs = wedge(wedge(x(3, 0), xi(3, 0)), wedge(x(3, 1), xi(3, 1)));
  CHECK(lhs == MultiVector::monomial(3, 1, {1, 1, 0}, {0, 1}));
}

TEST_CASE("schouten examples") {
  MultiVector pt = wedge(x(3, 2), xixi(3, 0, 1));
  CHECK(schouten(pt, pt).is_zero());
  MultiVector a = wedge(x(2, 0), xixi(2, 0, 1)), b = wedge(x(2, 1), xixi(2, 0, 1));
  CHECK(schouten(a, b).is_zero());
  MultiVector p1 = wedge(x(4, 0), xixi(4, 2, 3)), p2 = wedge(x(4, 2), xixi(4, 0, 1));
  CHECK_FALSE(schouten(p1, p2).is_zero());
  for (auto [p, q] : {std::pair{pt, pt}, std::pair{a, b}, std::pair{p1, p2}})
    CHECK(schouten(p, q) == schouten_oracle(p, q));
}

TEST_CASE("schouten of a vector field with a function is the derivative") {
  MultiVector field = wedge(x(2, 0), xi(2, 0));
  MultiVector f = MultiVector::monomial(2, 1, {2, 0}, {});
  MultiVector expect = MultiVector::monomial(2, 2, {2, 0}, {});
  CHECK(schouten(field, f) == expect);
  CHECK(schouten_oracle(field, f) == expect);
  // [[f, X]] = -X(f)
  CHECK(schouten(f, field) == expect * Scalar(-1));
}

TEST_CASE("is_poisson examples") {
  CHECK(is_poisson(xixi(2, 0, 1)));
  CHECK(is_poisson(lie_to_bivector(build_algebra({Family::SO, 3, {}}))));
  MultiVector p = wedge(x(4, 0), xixi(4, 2, 3)) + wedge(x(4, 2), xixi(4, 0, 1));
  CHECK_FALSE(is_poisson(p));
  CHECK_THROWS_AS(is_poisson(xi(2, 0)), DegreeError);
}

TEST_CASE("lie_to_bivector and back") {
  StructureConstants h(3);
  h.add_bracket(0, 1, 2, 1);
  CHECK(lie_to_bivector(h) == wedge(x(3, 2), xixi(3, 0, 1)));
  CHECK(lie_to_bivector(StructureConstants(4)).is_zero());
  LieAlgebra so3 = build_algebra({Family::SO, 3, {}});
  CHECK(bivector_to_lie(lie_to_bivector(so3)) == so3);
  CHECK_THROWS_AS(bivector_to_lie(xixi(2, 0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(bivector_to_lie(wedge(x(4, 0), xixi(4, 2, 3)) + wedge(x(4, 2), xixi(4, 0, 1))),
                  std::invalid_argument);
}

TEST_CASE("rank examples") {
  CHECK(bivector_rank(MultiVector(3)) == 0);
  MultiVector p = wedge(x(5, 4), xixi(5, 0, 1) + xixi(5, 2, 3));
  CHECK(bivector_rank(p) == 4);
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 0; 2 * k <= n; ++k) {
      LieAlgebra g = LieAlgebra::abelian(n - 2 * k);
      StructureConstants b(2);
      b.add_bracket(0, 1, 1, 1);
      for (std::size_t i = 0; i < k; ++i) g = direct_sum(LieAlgebra(b), g);
      CHECK(lie_rank(g) == 2 * k);
    }
}

TEST_CASE("text rendering") {
  MultiVector p = wedge(x(4, 2), xixi(4, 0, 1)) - wedge(MultiVector::monomial(4, 2, {2, 0, 0, 0}, {}), xi(4, 3));
  CHECK(p.to_string() == "-2*x1**2*xi4 + x3*xi1^xi2");
}

TEST_CASE("property: schouten agrees with the oracle") {
  Rng rng(31);
  for (int t = 0; t < 2000; ++t) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 6));
    auto p = random_multivector(rng, n, static_cast<std::size_t>(uniform(rng, 0, 3)), 2, 2);
    auto q = random_multivector(rng, n, static_cast<std::size_t>(uniform(rng, 0, 3)), 2, 2);
    CHECK(schouten(p, q) == schouten_oracle(p, q));
  }
}

TEST_CASE("property: graded skew symmetry and graded Jacobi") {
  Rng rng(32);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
    std::size_t dp = static_cast<std::size_t>(uniform(rng, 0, 3)), dq = static_cast<std::size_t>(uniform(rng, 0, 3)),
                dr = static_cast<std::size_t>(uniform(rng, 0, 3));
    auto p = random_multivector(rng, n, dp, 2, 2), q = random_multivector(rng, n, dq, 2, 2),
         r = random_multivector(rng, n, dr, 1, 2);
    CHECK((schouten(p, q) + schouten(q, p) * Scalar(skew_sign(dp, dq))).is_zero());
    MultiVector jac = schouten(p, schouten(q, r)) * Scalar(skew_sign(dp, dr)) +
                      schouten(q, schouten(r, p)) * Scalar(skew_sign(dq, dp)) +
                      schouten(r, schouten(p, q)) * Scalar(skew_sign(dr, dq));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("property: schouten is a graded biderivation") {
  Rng rng(33);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
    std::size_t dp = static_cast<std::size_t>(uniform(rng, 0, 2)), dq = static_cast<std::size_t>(uniform(rng, 0, 2));
    auto p = random_multivector(rng, n, dp, 2, 2), q = random_multivector(rng, n, dq, 1, 2),
         r = random_multivector(rng, n, static_cast<std::size_t>(uniform(rng, 0, 2)), 1, 2);
    // [[P, Q^R]] = [[P,Q]]^R + (-1)^{(p-1)q} Q^[[P,R]]
    Scalar sign = ((dp + 1) * dq) % 2 == 0 ? 1 : -1;
    CHECK(schouten(p, wedge(q, r)) == wedge(schouten(p, q), r) + wedge(q, schouten(p, r)) * sign);
  }
}

TEST_CASE("property: poisson iff Jacobi") {
  Rng rng(34);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 5));
    StructureConstants sc(n);
    for (int k = 0; k < 3; ++k) {
      std::size_t i = rng() % n, j = rng() % n;
      if (i != j) sc.add_bracket(i, j, rng() % n, small_rational(rng, 2, true));
    }
    CHECK(is_poisson(lie_to_bivector(sc)) == satisfies_jacobi(sc));
  }
}

TEST_CASE("property: rank is invariant under linear changes of coordinates") {
  Rng rng(35);
  for (int t = 0; t < 60; ++t) {
    LieAlgebra g = random_sparse_lie(rng, static_cast<std::size_t>(uniform(rng, 2, 6)));
    Matrix b = random_invertible(rng, g.dim());
    CHECK(lie_rank(LieAlgebra(change_basis(g.sc(), b))) == lie_rank(g));
  }
}

TEST_CASE("property: unimodular algebras have rank below dimension") {
  Rng rng(36);
  std::size_t seen = 0;
  for (int t = 0; t < 200 && seen < 40; ++t) {
    LieAlgebra g = random_solvable(rng, static_cast<std::size_t>(uniform(rng, 1, 6)));
    if (!is_zero(modular_vector(g))) continue;
    ++seen;
    CHECK(lie_rank(g) < g.dim());
  }
  for (std::size_t n = 3; n <= 4; ++n) {
    LieAlgebra so = build_algebra({Family::SO, n, {}});
    CHECK(lie_rank(so) < so.dim());
  }
}
