#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieon {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace; result is canonical.
Scalar parse_scalar(const std::string& text);
std::string to_string(const Scalar& s);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Vector& a, const Scalar& c);
Scalar dot(const Vector& a, const Vector& b);
// a += c * b
void axpy(Vector& a, const Scalar& c, const Vector& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  void set_row(std::size_t i, const Vector& v);
  void set_col(std::size_t j, const Vector& v);
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& c) const;
  Vector operator*(const Vector& v) const;
  bool operator==(const Matrix& o) const;

  static Matrix vstack(const Matrix& top, const Matrix& bottom);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

struct Rref {
  Matrix reduced;                    // nonzero rows only
  std::vector<std::size_t> pivots;   // pivot column of each row
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Throws std::domain_error on singular input.
Matrix inverse(const Matrix& m);
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// A subspace is stored by its unique reduced row-echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient);

  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
  static Subspace row_space(const Matrix& m);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> vectors() const { return basis_.row_vectors(); }
  Vector vector(std::size_t r) const { return basis_.row(r); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  // Coefficients of v in the stored basis; v must lie in the subspace.
  Vector coordinates(const Vector& v) const;
  // v minus its component along the basis, reduced at pivot columns.
  Vector reduce(const Vector& v) const;

  bool operator==(const Subspace& o) const;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
// coeffs[k] is the coefficient of t^k.
Subspace poly_kernel(const Matrix& m, const Vector& coeffs);
Matrix poly_eval(const Matrix& m, const Vector& coeffs);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
// Span of the standard basis vectors at non-pivot columns of u.
Subspace complement(const Subspace& u);
std::vector<std::size_t> complement_indices(const Subspace& u);
// {y : <y, u> = 0 for all u in the subspace}
Subspace annihilator(const Subspace& u);

}  // namespace lieon
