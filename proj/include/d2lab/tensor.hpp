#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "d2lab/linalg.hpp"

namespace d2lab {

/// A bimodule over a ring, given by the action matrices of the ring's basis
/// elements.  Only the sides used for balancing need to be filled in.
struct TensorFactor {
  std::size_t dim = 0;
  std::vector<Matrix> left;
  std::vector<Matrix> right;
};

/// M_1 (x)_R M_2 (x)_R ... (x)_R M_k as a quotient of the field tensor
/// product by the balancing relations  m r (x) m' - m (x) r m'  at every
/// adjacent pair of slots.
///
/// Built recursively as M_1 (x)_R (M_2 (x)_R ... ) so that relation
/// systems stay of size dim(M_1) * dim(rest) instead of the full power.
/// Coordinates of the full tensor product are row-major, first factor
/// most significant.
class BalancedTensor {
 public:
  BalancedTensor() = default;
  explicit BalancedTensor(std::vector<TensorFactor> factors);

  std::size_t arity() const noexcept { return dims_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  const std::vector<std::size_t>& factor_dims() const noexcept { return dims_; }

  /// Full tensor coordinates -> quotient coordinates.
  Vector project(const Vector& full) const;
  /// Quotient coordinates -> canonical representative.
  Vector lift(const Vector& q) const;
  /// Map induced on the quotient by applying `op` to one slot.  The caller
  /// guarantees that op is compatible with the balancing (e.g. an outer
  /// action, or an R-bimodule map).
  Matrix induced(std::size_t slot, const Matrix& op) const;
  /// Induced action of ring basis element s on the first slot.
  const Matrix& left_action(std::size_t s) const { return left_.at(s); }
  /// Induced action of ring basis element s on the last slot.
  const Matrix& right_action(std::size_t s) const { return right_.at(s); }
  /// Number of independent balancing relations.
  std::size_t relation_rank() const noexcept { return ambient_ - dim_; }

 private:
  std::vector<std::size_t> dims_;
  std::size_t dim_ = 0;
  std::size_t ambient_ = 0;
  std::shared_ptr<const BalancedTensor> inner_;  // slots 1..k-1, null when k == 1
  Quotient outer_;                                // of dims_[0] (x) inner_->dim()
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
};

/// Applies `op` to slot `slot` of a full tensor with the given slot dims.
Vector apply_slot(const Vector& full, std::span<const std::size_t> dims, std::size_t slot,
                  const Matrix& op);

/// Calls fn(indices, coefficient) for every nonzero entry of a full tensor.
template <class Fn>
void for_each_term(const Vector& full, std::span<const std::size_t> dims, Fn&& fn) {
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t flat = 0; flat < full.size(); ++flat) {
    if (full[flat].is_zero()) continue;
    std::size_t rem = flat;
    for (std::size_t s = dims.size(); s-- > 0;) {
      idx[s] = rem % dims[s];
      rem /= dims[s];
    }
    fn(static_cast<const std::vector<std::size_t>&>(idx), full[flat]);
  }
}

/// Replaces slot `slot` of a full tensor by a multi-slot block: basis
/// vector i of that slot is sent to the full tensor images[i] with
/// `image_size` entries.  Output keeps the other slots in place.
Vector expand_slot(const Vector& full, std::span<const std::size_t> dims, std::size_t slot,
                   const std::vector<SparseVector>& images, std::size_t image_size);

/// Flat index of a multi-index.
std::size_t flat_index(std::span<const std::size_t> idx, std::span<const std::size_t> dims);

/// Adds coef * (v_1 (x) ... (x) v_k) into a full tensor; v_i may be sparse.
void add_pure_tensor(Vector& full, std::span<const std::size_t> dims, const Scalar& coef,
                     const std::vector<const SparseVector*>& factors);

}  // namespace d2lab
