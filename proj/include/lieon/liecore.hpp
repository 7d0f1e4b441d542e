#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lieon/exactlin.hpp"

namespace lieon {

struct NotLieError : std::domain_error {
  using std::domain_error::domain_error;
};
struct ClosureError : std::domain_error {
  using std::domain_error::domain_error;
};

// Bracket tensor c_ij^k keyed by i < j. Zero brackets are never stored.
class StructureConstants {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  StructureConstants() = default;
  explicit StructureConstants(std::size_t n);

  std::size_t dim() const { return n_; }
  const std::map<Key, Vector>& entries() const { return br_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  // Sets [e_i, e_j] = v; i > j stores -v under (j, i).
  void set_bracket(std::size_t i, std::size_t j, const Vector& v);
  void add_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  Vector bracket(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& u, const Vector& v) const;
  Scalar coeff(std::size_t i, std::size_t j, std::size_t k) const;
  bool is_zero() const { return br_.empty(); }
  std::size_t term_count() const;

  // Equality of the bracket tensor; labels are metadata and ignored.
  bool operator==(const StructureConstants& o) const { return n_ == o.n_ && br_ == o.br_; }

 private:
  std::size_t n_ = 0;
  std::map<Key, Vector> br_;
  std::vector<std::string> labels_;
};

using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
using Jacobiator = std::map<Triple, Vector>;

// Nonzero values of J(e_i,e_j,e_k) for i < j < k.
Jacobiator jacobiator(const StructureConstants& sc);
bool satisfies_jacobi(const StructureConstants& sc);

StructureConstants add(const StructureConstants& a, const StructureConstants& b);
StructureConstants subtract(const StructureConstants& a, const StructureConstants& b);
StructureConstants scaled(const StructureConstants& a, const Scalar& c);

class LieAlgebra {
 public:
  LieAlgebra() = default;
  // Throws NotLieError if the Jacobi identity fails.
  explicit LieAlgebra(StructureConstants sc);
  static LieAlgebra abelian(std::size_t n);

  const StructureConstants& sc() const { return sc_; }
  std::size_t dim() const { return sc_.dim(); }
  Vector bracket(const Vector& u, const Vector& v) const { return sc_.bracket(u, v); }
  bool operator==(const LieAlgebra& o) const { return sc_ == o.sc_; }

 private:
  StructureConstants sc_;
};

struct Representation {
  LieAlgebra algebra;
  std::size_t space_dim = 0;
  std::vector<Matrix> matrices;  // rho(e_i)

  Matrix of(const Vector& x) const;
};

bool is_representation(const Representation& rho);

enum class LieonKind { Dyon, Triadon };

struct LieonSpec {
  LieonKind kind = LieonKind::Triadon;
  std::size_t ambient_dim = 0;
  Subspace center;
  Subspace line;
  Scalar scale = 1;
};

enum class LieonClass { Abelian, Dyon, Triadon, Other };

struct Classification {
  LieonClass cls = LieonClass::Other;
  std::optional<LieonSpec> spec;
};

std::string to_string(LieonClass c);

// The first argument is valid Lie; checked by the caller's LieAlgebra type.
bool compatible(const LieAlgebra& a, const LieAlgebra& b);
bool compatible(const StructureConstants& a, const StructureConstants& b);

Subspace center(const StructureConstants& g);
Subspace derived(const StructureConstants& g);
// [U, V] as a subspace
Subspace bracket_span(const StructureConstants& g, const Subspace& u, const Subspace& v);
std::vector<Subspace> derived_series(const StructureConstants& g);
std::vector<Subspace> lower_central_series(const StructureConstants& g);
bool is_solvable(const StructureConstants& g);
bool is_nilpotent(const StructureConstants& g);
Matrix ad(const StructureConstants& g, const Vector& v);
Matrix killing_form(const StructureConstants& g);
Subspace radical(const StructureConstants& g);
bool is_subalgebra(const StructureConstants& g, const Subspace& s);
bool is_ideal(const StructureConstants& g, const Subspace& s);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal);
LieAlgebra restrict(const LieAlgebra& g, const Subspace& subalgebra);
// Structure of the subalgebra spanned by the given independent rows, in that basis.
LieAlgebra restrict_to_basis(const LieAlgebra& g, const std::vector<Vector>& rows);
LieAlgebra semidirect(const LieAlgebra& g0, const Representation& rho);
LieAlgebra gamma_A(const Matrix& a);

// Rows of b are the new basis vectors in old coordinates; b must be invertible.
StructureConstants change_basis(const StructureConstants& g, const Matrix& b);
// Inverse of change_basis: sc is written in the basis given by the rows of b.
StructureConstants from_basis(const StructureConstants& sc, const Matrix& b);
// h lives on the span of `rows` (in that basis); the result is h plus a central complement.
StructureConstants embed(const StructureConstants& h, const std::vector<Vector>& rows,
                         std::size_t n);

Classification classify_lieon(const StructureConstants& g);
StructureConstants lieon_structure(const LieonSpec& spec);

}  // namespace lieon
