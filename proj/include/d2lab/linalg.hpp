#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "d2lab/scalar.hpp"

namespace d2lab {

using Vector = std::vector<Scalar>;
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A computation produced a value that the surrounding theory rules out,
/// e.g. a product that should lie in a subspace and does not.
struct InternalInconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
/// y += a * x
void axpy(Vector& y, const Scalar& a, const Vector& x);
/// Kronecker product, index i*|b| + j.
Vector kron(const Vector& a, const Vector& b);
SparseVector sparse(const Vector& v);

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Row-major vectorization of a square matrix and back.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols);

class Subspace;

/// Incremental Gaussian elimination over sparse rows.  Feeding vectors in
/// any order yields the same reduced row echelon basis.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient);
  /// Returns true when v was independent of the rows added so far.
  bool add(SparseVector v);
  bool add(const Vector& v) { return add(sparse(v)); }
  std::size_t rank() const noexcept { return count_; }
  Subspace build() &&;

 private:
  std::size_t ambient_;
  std::size_t count_ = 0;
  std::vector<SparseVector> rows_;  // indexed by pivot column; empty if none
};

/// Subspace of K^ambient, stored by its reduced row echelon basis.  Two
/// subspaces are equal iff their stored bases are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const SparseVector& sparse_row(std::size_t i) const { return rows_[i]; }
  Vector basis_vector(std::size_t i) const;
  std::vector<Vector> basis() const;
  /// ambient x dim, columns are the basis vectors.
  Matrix basis_matrix() const;

  bool contains(const Vector& v) const;
  /// Coordinates with respect to the echelon basis, or nullopt if v lies outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  Vector element(const Vector& coords) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  friend class SpanBuilder;
  std::size_t ambient_;
  std::vector<std::size_t> pivots_;
  std::vector<SparseVector> rows_;
};

std::size_t rank(const Matrix& m);
/// Echelon-canonical solution of m x = b (free variables zero), or nullopt
/// when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
Subspace kernel_basis(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

using LinearMap = std::function<Vector(const Vector&)>;
/// Common kernel of several linear maps on K^dim, restricting the running
/// solution space one map at a time.
Subspace joint_kernel(std::size_t dim, const std::vector<LinearMap>& maps);
Subspace joint_kernel(std::size_t dim, const std::vector<Matrix>& maps);

/// Quotient of K^ambient by a relation subspace.  Quotient coordinates are
/// the non-pivot coordinates of the relation echelon form, so the section
/// places a quotient vector on those coordinates and projection reduces
/// modulo the relations.
class Quotient {
 public:
  Quotient() = default;
  Quotient(std::size_t ambient, Subspace relations);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return free_.size(); }
  const Subspace& relations() const noexcept { return relations_; }

  Vector project(const Vector& v) const;
  Vector lift(const Vector& q) const;
  Matrix projection() const;
  Matrix section() const;

 private:
  std::size_t ambient_ = 0;
  Subspace relations_;
  std::vector<std::size_t> free_;        // quotient coordinate -> ambient index
  std::vector<long> position_;           // ambient index -> quotient coordinate or -1
  std::vector<long> pivot_row_;          // ambient index -> relation row or -1
};

Quotient quotient_basis(std::size_t ambient, const Subspace& relations);

}  // namespace d2lab
