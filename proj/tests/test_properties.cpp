#include "doctest.h"
#include "lieon/classical.hpp"
#include "support/generators.hpp"

using namespace lieon;
using namespace lieon::testing;

TEST_CASE("property: lieon predicates agree with Schouten and Jacobi oracles") {
  Rng rng(81);
  const LieonKind kinds[] = {LieonKind::Dyon, LieonKind::Triadon};
  std::size_t agree = 0;
  for (int t = 0; t < 1000; ++t) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 3, 7));
    LieonPair pr = random_lieon_pair(rng, n, kinds[rng() % 2], kinds[rng() % 2]);
    StructureConstants a = lieon_structure(pr.a), b = lieon_structure(pr.b);
    bool predicate = lieons_compatible(pr.a, pr.b);
    bool jac = jacobi_compatible(a, b);
    CHECK(predicate == jac);
    CHECK(jac == schouten(lie_to_bivector(a), lie_to_bivector(b)).is_zero());
    agree += predicate == jac;
  }
  CHECK(agree == 1000);
}

TEST_CASE("property: solvable disassembling is strictly complete") {
  Rng rng(82);
  for (int t = 0; t < 60; ++t) {
    LieAlgebra g = random_solvable(rng, static_cast<std::size_t>(uniform(rng, 2, 6)));
    if (g.sc().is_zero()) continue;
    AScheme s = disassemble_solvable(g);
    SchemeReport r = verify_scheme(s);
    CHECK(r.valid);
    CHECK(r.complete);
    CHECK(s.root().algebra == g.sc());
  }
}

TEST_CASE("property: gamma pieces are pairwise compatible lieons summing to the whole") {
  Rng rng(83);
  for (int t = 0; t < 60; ++t) {
    std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 4));
    Matrix a(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (rng() % 2) a(i, j) = small_rational(rng, 2);
    Matrix basis = random_invertible(rng, m, 1);
    auto pieces = gamma_decompose(a, basis);
    StructureConstants total(m + 1);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      LieonClass c = classify_lieon(pieces[i].sc()).cls;
      CHECK((c == LieonClass::Dyon || c == LieonClass::Triadon));
      for (std::size_t j = i + 1; j < pieces.size(); ++j) CHECK(compatible(pieces[i], pieces[j]));
      total = add(total, pieces[i].sc());
    }
    CHECK(total == gamma_A(a).sc());
  }
}

TEST_CASE("property: modular split of a non-unimodular algebra disassembles completely") {
  Rng rng(84);
  for (int t = 0; t < 30; ++t) {
    LieAlgebra g = random_non_unimodular(rng, 5);
    if (!is_solvable(g.sc())) continue;
    ModularSplit sp = modular_disassemble(g);
    for (const auto& part : {sp.uni, sp.non}) {
      if (part.sc().is_zero() || !is_solvable(part.sc())) continue;
      SchemeReport r = verify_scheme(disassemble_solvable(part));
      CHECK(r.valid);
      CHECK(r.complete);
    }
  }
}

TEST_CASE("property: classical end terms sum back to the root") {
  for (ClassicalPreset p : {ClassicalPreset{Family::SO, 4, {}}, ClassicalPreset{Family::GL, 3, {}},
                            ClassicalPreset{Family::SP, 2, {}}, ClassicalPreset{Family::SU, 3, {}}}) {
    AScheme s = disassemble(p);
    StructureConstants total(s.root().algebra.dim());
    for (const auto* leaf : s.leaves()) total = add(total, leaf->algebra);
    CHECK(total == build_algebra(p).sc());
  }
}
