#pragma once

#include <optional>

#include "lieon/liecore.hpp"

namespace lieon {

struct UnimodularError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ModularTriple {
  Matrix a;
  Vector theta;
  Vector nu;
};

// A^T theta = 0, tr A = -1, A nu = 0, theta(nu) = 1
bool satisfies_triple_relations(const ModularTriple& t);

struct ModularSplit {
  LieAlgebra uni;
  LieAlgebra non;
  ModularTriple triple;
};

Vector modular_vector(const LieAlgebra& g);
bool is_unimodular(const LieAlgebra& g);
// nu defaults to e_i / theta(e_i) for the smallest i with theta(e_i) != 0.
ModularSplit modular_disassemble(const LieAlgebra& g, const std::optional<Vector>& nu = std::nullopt);
// The linear function nu has zero bracket with every coordinate under P_g.
bool is_casimir(const StructureConstants& g, const Vector& nu);
// [u, e] = A0 u on W0 + span{e}; e is the last basis vector.
LieAlgebra modular_algebra(const Matrix& a0);

struct MatchingQuadruple {
  std::size_t v_dim = 0;
  Matrix a;
  Matrix b;
  Scalar lambda;
};

struct MatchingQuintuple {
  std::size_t v_dim = 0;
  Matrix a;
  Matrix b;
  Vector nu1;
  Vector nu2;
};

struct MatchingPair {
  LieAlgebra g1;
  LieAlgebra g2;
  Vector theta1;  // expected modular covectors
  Vector theta2;
};

bool is_valid(const MatchingQuadruple& q);
bool is_valid(const MatchingQuintuple& q);
MatchingPair matching_from_quadruple(const MatchingQuadruple& q);
MatchingPair matching_from_quintuple(const MatchingQuintuple& q);
// Both modular, compatible, and modular vectors equal to theta1, theta2.
bool verify_matching(const MatchingPair& m);

}  // namespace lieon
