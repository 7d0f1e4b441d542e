#include "doctest.h"
#include "support/generators.hpp"

using namespace lieon;
using namespace lieon::testing;

namespace {

Vector v(std::initializer_list<int> xs) {
  Vector out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

Matrix rows(std::initializer_list<std::initializer_list<int>> rs) {
  std::vector<Vector> out;
  std::size_t cols = 0;
  for (auto r : rs) {
    out.push_back(v(r));
    cols = r.size();
  }
  return Matrix::from_rows(out, cols);
}

// Hand-rolled check that v is annihilated by m.
bool in_kernel(const Matrix& m, const Vector& x) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("scalars parse to canonical form") {
  CHECK(parse_scalar("2/4") == Scalar(1, 2));
  CHECK(to_string(parse_scalar(" -6/4 ")) == "-3/2");
  CHECK(to_string(parse_scalar("5")) == "5");
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("abc"), std::invalid_argument);
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix::identity(3)).dim() == 0);
  CHECK(kernel(Matrix(2, 3)).dim() == 3);
  Subspace k = kernel(rows({{1, 1}, {2, 2}}));
  REQUIRE(k.dim() == 1);
  CHECK(k == Subspace::span({v({1, -1})}, 2));
}

TEST_CASE("poly_kernel examples") {
  CHECK(poly_kernel(Matrix::diagonal(v({1, -1})), v({-1, 0, 1})).dim() == 2);
  CHECK(poly_kernel(rows({{0, 1}, {0, 0}}), v({0, 0, 1})).dim() == 2);
  CHECK(poly_kernel(Matrix::diagonal(v({2, 3})), v({-2, 1})) == Subspace::span({v({1, 0})}, 2));
}

TEST_CASE("subspace operations") {
  Subspace e12 = Subspace::span({v({1, 0, 0}), v({0, 1, 0})}, 3);
  Subspace e23 = Subspace::span({v({0, 1, 0}), v({0, 0, 1})}, 3);
  CHECK(intersect(e12, e23) == Subspace::span({v({0, 1, 0})}, 3));
  CHECK(sum(Subspace::span({v({1, 0})}, 2), Subspace::span({v({0, 1})}, 2)) == Subspace::full(2));
  Subspace diag = Subspace::span({v({1, 1})}, 2);
  CHECK(complement(diag) == Subspace::span({v({0, 1})}, 2));
  CHECK(complement_indices(diag) == std::vector<std::size_t>{1});
}

TEST_CASE("inverse and solve") {
  Matrix m = rows({{2, 1}, {1, 1}});
  CHECK(m * inverse(m) == Matrix::identity(2));
  auto x = solve(m, v({3, 2}));
  REQUIRE(x);
  CHECK(*x == v({1, 1}));
  CHECK_FALSE(solve(rows({{1, 1}, {1, 1}}), v({1, 2})));
  CHECK_THROWS(inverse(rows({{1, 2}, {2, 4}})));
}

TEST_CASE("property: rank plus nullity equals column count") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 5)), c = static_cast<std::size_t>(uniform(rng, 1, 5));
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (rng() % 2) m(i, j) = small_rational(rng);
    Subspace k = kernel(m);
    CHECK(k.dim() + rank(m) == c);
    for (const auto& x : k.vectors()) CHECK(in_kernel(m, x));
  }
}

TEST_CASE("property: dimension formula and complements") {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 6));
    auto random_space = [&] {
      std::vector<Vector> vs;
      int k = uniform(rng, 0, static_cast<int>(n));
      for (int i = 0; i < k; ++i) {
        Vector x(n);
        for (auto& c : x)
          if (rng() % 2) c = uniform(rng, -2, 2);
        vs.push_back(x);
      }
      return Subspace::span(vs, n);
    };
    Subspace u = random_space(), w = random_space();
    CHECK(u.dim() + w.dim() == intersect(u, w).dim() + sum(u, w).dim());
    Subspace c = complement(u);
    CHECK(sum(u, c).dim() == n);
    CHECK(intersect(u, c).dim() == 0);
  }
}

TEST_CASE("property: canonical form does not depend on the spanning set") {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 6));
    std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(n)));
    Matrix b = random_invertible(rng, n);
    std::vector<Vector> span1;
    for (std::size_t i = 0; i < k; ++i) span1.push_back(b.row(i));
    // mix the spanning set with an invertible k x k matrix and add a redundant vector
    Matrix mix = random_invertible(rng, k);
    std::vector<Vector> span2;
    for (std::size_t i = 0; i < k; ++i) {
      Vector x(n);
      for (std::size_t j = 0; j < k; ++j) axpy(x, mix(i, j), span1[j]);
      span2.push_back(x);
    }
    span2.push_back(add(span2.front(), span2.back()));
    Subspace s1 = Subspace::span(span1, n), s2 = Subspace::span(span2, n);
    CHECK(s1 == s2);
    CHECK(s1.basis() == s2.basis());
  }
}
