#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieon/liecore.hpp"

namespace lieon {

struct DegreeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Polynomial-coefficient skew multivector on k^n with anticommuting xi_1..xi_n.
// A term is keyed by the set of xi indices (bitmask, read in increasing order)
// and the exponent vector of the x-monomial. Zero coefficients are never stored.
class MultiVector {
 public:
  struct Key {
    std::uint64_t xi = 0;
    std::vector<std::uint16_t> exp;
    auto operator<=>(const Key&) const = default;
  };
  static constexpr std::size_t kMaxDim = 64;

  explicit MultiVector(std::size_t n = 0);

  static MultiVector constant(std::size_t n, const Scalar& c);
  static MultiVector x(std::size_t n, std::size_t i);
  static MultiVector xi(std::size_t n, std::size_t i);
  // c * x^exp * xi_{idx[0]} ^ xi_{idx[1]} ^ ...; indices in any order (sign applied).
  static MultiVector monomial(std::size_t n, const Scalar& c, const std::vector<std::uint16_t>& exp,
                              const std::vector<std::size_t>& xi_indices);

  std::size_t n() const { return n_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const Scalar& c);
  // nullopt when terms of several xi-degrees are present; zero has degree 0.
  std::optional<std::size_t> xi_degree() const;
  std::size_t max_x_degree() const;

  MultiVector operator+(const MultiVector& o) const;
  MultiVector operator-(const MultiVector& o) const;
  MultiVector operator*(const Scalar& c) const;
  bool operator==(const MultiVector& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  // Terms sorted by their monomial text, e.g. "x3*xi1^xi2 - 2*x1**2*xi4".
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::map<Key, Scalar> terms_;
};

MultiVector wedge(const MultiVector& p, const MultiVector& q);
// Coordinate formula: -sum_i (dP/dx_i ^ dQ/dxi_i + (-1)^deg P dP/dxi_i ^ dQ/dx_i).
MultiVector schouten(const MultiVector& p, const MultiVector& q);
// Independent evaluation by the graded Leibniz and skew rules on monomials.
MultiVector schouten_oracle(const MultiVector& p, const MultiVector& q);
bool is_poisson(const MultiVector& p);

MultiVector lie_to_bivector(const StructureConstants& g);
MultiVector lie_to_bivector(const LieAlgebra& g);
// Throws std::invalid_argument for non-linear, wrong-degree or non-Poisson input.
LieAlgebra bivector_to_lie(const MultiVector& p);

std::size_t bivector_rank(const MultiVector& p);
std::size_t lie_rank(const LieAlgebra& g);

}  // namespace lieon
