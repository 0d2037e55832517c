#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "d2lab/linalg.hpp"

namespace d2lab {

/// Finite-dimensional unital associative algebra given by structure
/// constants: e_i e_j = sum_k c[i][j][k] e_k.
class Algebra {
 public:
  Algebra() = default;
  /// `constants` is indexed (i * dim + j) * dim + k.  No validation here;
  /// see validate_algebra.
  Algebra(Field field, std::size_t dim, std::vector<Scalar> constants, Vector unit,
          std::vector<std::string> labels = {});

  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& constants() const noexcept { return constants_; }
  const Vector& unit() const noexcept { return unit_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  Vector basis(std::size_t i) const { return unit_vector(dim_, i); }
  /// e_i e_j as a sparse vector.
  const SparseVector& basis_product(std::size_t i, std::size_t j) const {
    return products_[i * dim_ + j];
  }
  Vector mul(const Vector& x, const Vector& y) const;
  /// Matrix of x -> a x.
  Matrix left_mult(const Vector& a) const;
  /// Matrix of x -> x a.
  Matrix right_mult(const Vector& a) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.constants_ == b.constants_ &&
           a.unit_ == b.unit_;
  }

 private:
  Field field_;
  std::size_t dim_ = 0;
  std::vector<Scalar> constants_;
  Vector unit_;
  std::vector<std::string> labels_;
  std::vector<SparseVector> products_;
};

struct ValidationReport {
  std::vector<std::string> failures;
  bool valid() const noexcept { return failures.empty(); }
};

/// Checks all n^3 associativity triples and 2n unit identities.
ValidationReport validate_algebra(const Algebra& a);

Algebra opposite(const Algebra& a);

/// Structure constants of the subalgebra `space` (echelon coordinates).
/// Throws InternalInconsistency if `space` is not closed or misses 1.
Algebra restrict_to(const Algebra& a, const Subspace& space);

/// Full matrix algebra M_n(K) with basis E_ij at index i*n+j.
Algebra matrix_algebra(Field field, std::size_t n);

/// Permutation of {0..degree-1} as its image list.
using Permutation = std::vector<std::size_t>;

/// Parses cycle notation on points 1..degree, e.g. "(1 2 3)(4 5)" or "()".
Permutation parse_cycles(std::string_view text, std::size_t degree);
/// All group elements generated by `gens`, sorted lexicographically by
/// image list (identity first).
std::vector<Permutation> generate_group(std::size_t degree, const std::vector<Permutation>& gens);

struct GroupAlgebraPair {
  Algebra algebra;                     // K[G], basis = sorted elements of G
  std::vector<Permutation> elements;
  std::vector<Vector> subgroup_basis;  // e_h for h in H
};

/// K[G] together with the basis vectors of K[H], H = <h_gens> <= G = <g_gens>.
/// Product convention (gh)(x) = g(h(x)).  Throws NotClosed unless H <= G.
GroupAlgebraPair group_algebra_pair(Field field, const std::vector<Permutation>& g_gens,
                                    const std::vector<Permutation>& h_gens, std::size_t degree);

struct NotClosed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotUnital : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotProper : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidAlgebra : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Linear map between algebras; `matrix` is target.dim x source.dim.
struct AlgebraMap {
  Algebra source;
  Algebra target;
  Matrix matrix;

  Vector operator()(const Vector& x) const { return matrix * x; }
  /// Failed unit/product identities on basis pairs; empty iff multiplicative.
  std::vector<std::string> multiplicativity_failures() const;
};

/// Proper extension A | B with B given as a subalgebra of A.
struct Extension {
  Algebra ambient;
  Subspace sub;                  // B inside A, echelon basis
  Algebra sub_algebra;           // B in its echelon coordinates
  Subspace centralizer;          // R = {a : ab = ba for all b in B}
  Algebra centralizer_algebra;   // R in its echelon coordinates

  Field field() const noexcept { return ambient.field(); }
  std::size_t dim() const noexcept { return ambient.dim(); }
  Vector sub_element(std::size_t i) const { return sub.basis_vector(i); }
  Vector centralizer_element(std::size_t i) const { return centralizer.basis_vector(i); }
  /// Inclusion R -> A, dim A x dim R.
  Matrix centralizer_inclusion() const { return centralizer.basis_matrix(); }
  /// R-coordinates of an element of A; throws InternalInconsistency outside R.
  Vector centralizer_coords(const Vector& a) const;
};

/// Throws InvalidAlgebra, NotProper (dependent basis), NotUnital, NotClosed.
Extension build_extension(const Algebra& a, const std::vector<Vector>& sub_basis);

}  // namespace d2lab
