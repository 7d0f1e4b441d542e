#include "lieon/modular.hpp"

#include "lieon/multivec.hpp"

namespace lieon {

bool satisfies_triple_relations(const ModularTriple& t) {
  std::size_t n = t.a.rows();
  if (!t.a.is_square() || t.theta.size() != n || t.nu.size() != n) return false;
  return is_zero(t.a.transpose() * t.theta) && t.a.trace() == -1 && is_zero(t.a * t.nu) &&
         dot(t.theta, t.nu) == 1;
}

Vector modular_vector(const LieAlgebra& g) {
  std::size_t n = g.dim();
  Vector theta(n);
  for (const auto& [key, vec] : g.sc().entries()) {
    // tr ad e_i picks c_ij^j, tr ad e_j picks c_ji^i
    auto [i, j] = key;
    theta[i] -= vec[j];
    theta[j] += vec[i];
  }
  return theta;
}

bool is_unimodular(const LieAlgebra& g) { return is_zero(modular_vector(g)); }

bool is_casimir(const StructureConstants& g, const Vector& nu) {
  std::size_t n = g.dim();
  for (std::size_t j = 0; j < n; ++j)
    if (!is_zero(g.bracket(nu, unit_vector(n, j)))) return false;
  return true;
}

ModularSplit modular_disassemble(const LieAlgebra& g, const std::optional<Vector>& nu_in) {
  std::size_t n = g.dim();
  Vector theta = modular_vector(g);
  if (is_zero(theta)) throw UnimodularError("algebra is unimodular");
  Vector nu;
  if (nu_in) {
    if (nu_in->size() != n) throw DimensionError("nu: size mismatch");
    if (dot(theta, *nu_in) != 1) throw std::invalid_argument("nu must satisfy theta(nu) = 1");
    nu = *nu_in;
  } else {
    std::size_t i = 0;
    while (sgn(theta[i]) == 0) ++i;
    nu = unit_vector(n, i);
    nu[i] = 1 / theta[i];
  }
  Matrix a = ad(g.sc(), nu);
  StructureConstants non(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (sgn(theta[u]) == 0 && sgn(theta[v]) == 0) continue;
      Vector w = sub(scaled(a.col(v), theta[u]), scaled(a.col(u), theta[v]));
      non.set_bracket(u, v, w);
    }
  StructureConstants uni = subtract(g.sc(), non);
  return ModularSplit{LieAlgebra(uni), LieAlgebra(non), ModularTriple{a, theta, nu}};
}

LieAlgebra modular_algebra(const Matrix& a0) {
  if (!a0.is_square()) throw DimensionError("modular_algebra: operator must be square");
  if (sgn(a0.trace()) == 0) throw std::invalid_argument("modular_algebra: trace of A0 vanishes");
  std::size_t m = a0.rows();
  StructureConstants sc(m + 1);
  for (std::size_t u = 0; u < m; ++u) {
    Vector v(m + 1);
    for (std::size_t k = 0; k < m; ++k) v[k] = a0(k, u);
    sc.set_bracket(u, m, v);
  }
  return LieAlgebra(sc);
}

// ---------------------------------------------------------------- matchings

bool is_valid(const MatchingQuadruple& q) {
  std::size_t m = q.v_dim;
  if (q.a.rows() != m || q.a.cols() != m || q.b.rows() != m || q.b.cols() != m) return false;
  if (sgn(q.lambda) == 0) return false;
  return commutator(q.a, q.b) == q.a * (2 * q.lambda) && q.b.trace() == 2 * (1 - q.lambda);
}

bool is_valid(const MatchingQuintuple& q) {
  std::size_t m = q.v_dim;
  if (q.a.rows() != m || q.a.cols() != m || q.b.rows() != m || q.b.cols() != m) return false;
  if (q.nu1.size() != m || q.nu2.size() != m) return false;
  return commutator(q.a, q.b).is_zero() && sgn(q.a.trace()) == 0 && q.b.trace() == 2 &&
         is_zero(q.a * q.nu1) && is_zero(q.a * q.nu2);
}

namespace {

// Linear vector field on V* acting on the linear functions of V1 by op: x_j maps to sum_k op(j,k) x_k.
MultiVector linear_field(const Matrix& op, std::size_t n) {
  MultiVector f(n);
  std::size_t m = op.rows();
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k)
      if (sgn(op(j, k)) != 0) f = f + wedge(MultiVector::x(n, k), MultiVector::xi(n, j)) * op(j, k);
  return f;
}

MultiVector linear_function(const Vector& coeffs, std::size_t n) {
  MultiVector f(n);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (sgn(coeffs[k]) != 0) f = f + MultiVector::x(n, k) * coeffs[k];
  return f;
}

MatchingPair build_matching(const Matrix& a, const Matrix& b, const Scalar& lambda, const Vector& nu1,
                            const Vector& nu2) {
  std::size_t m = a.rows(), n = m + 2;
  MultiVector xi1 = MultiVector::xi(n, m), xi2 = MultiVector::xi(n, m + 1);
  MultiVector phi1 = MultiVector::x(n, m), phi2 = MultiVector::x(n, m + 1);
  // Xi_1(alpha_1) = -Xi_2(alpha_2) = -lambda and Xi_i(beta_i) = lambda, so div Z = 0 and div W = 2.
  MultiVector alpha1 = phi1 * Scalar(-lambda);
  MultiVector alpha2 = phi2 * lambda;
  MultiVector beta1 = phi1 * lambda;
  MultiVector beta2 = phi2 * lambda;
  if (sgn(lambda) == 0) {
    beta1 = beta1 + linear_function(nu1, n);
    beta2 = beta2 + linear_function(nu2, n);
  }
  MultiVector z = linear_field(a, n) + wedge(alpha1, xi1) + wedge(alpha2, xi2);
  MultiVector w = linear_field(b, n) + wedge(beta1, xi1) + wedge(beta2, xi2);
  Scalar half(1, 2);
  MultiVector x1 = (z + w) * half;
  MultiVector x2 = (w - z) * half;
  MatchingPair out;
  out.g1 = bivector_to_lie(wedge(x1, xi1));
  out.g2 = bivector_to_lie(wedge(x2, xi2));
  out.theta1 = unit_vector(n, m);
  out.theta2 = unit_vector(n, m + 1);
  return out;
}

}  // namespace

MatchingPair matching_from_quadruple(const MatchingQuadruple& q) {
  if (!is_valid(q)) throw std::invalid_argument("invalid matching quadruple");
  return build_matching(q.a, q.b, q.lambda, Vector(q.v_dim), Vector(q.v_dim));
}

MatchingPair matching_from_quintuple(const MatchingQuintuple& q) {
  if (!is_valid(q)) throw std::invalid_argument("invalid matching quintuple");
  return build_matching(q.a, q.b, 0, q.nu1, q.nu2);
}

bool verify_matching(const MatchingPair& m) {
  for (const auto* g : {&m.g1, &m.g2}) {
    if (is_unimodular(*g)) return false;
    if (!modular_disassemble(*g).uni.sc().is_zero()) return false;
  }
  return compatible(m.g1, m.g2) && modular_vector(m.g1) == m.theta1 && modular_vector(m.g2) == m.theta2;
}

}  // namespace lieon
