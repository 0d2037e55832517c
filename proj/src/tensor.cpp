#include "d2lab/tensor.hpp"

#include <functional>
#include <numeric>

namespace d2lab {

namespace {

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

}  // namespace

std::size_t flat_index(std::span<const std::size_t> idx, std::span<const std::size_t> dims) {
  std::size_t f = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) f = f * dims[s] + idx[s];
  return f;
}

void add_pure_tensor(Vector& full, std::span<const std::size_t> dims, const Scalar& coef,
                     const std::vector<const SparseVector*>& factors) {
  if (factors.size() != dims.size()) throw DimensionMismatch("pure tensor arity");
  if (coef.is_zero()) return;
  std::function<void(std::size_t, std::size_t, const Scalar&)> rec =
      [&](std::size_t slot, std::size_t offset, const Scalar& c) {
        if (slot == factors.size()) {
          full[offset] += c;
          return;
        }
        for (const auto& [i, v] : *factors[slot]) rec(slot + 1, offset * dims[slot] + i, c * v);
      };
  rec(0, 0, coef);
}

Vector apply_slot(const Vector& full, std::span<const std::size_t> dims, std::size_t slot,
                  const Matrix& op) {
  if (slot >= dims.size() || op.cols() != dims[slot]) throw DimensionMismatch("apply_slot");
  if (full.size() != product(dims)) throw DimensionMismatch("apply_slot tensor size");
  const std::size_t outer = product(dims.subspan(0, slot));
  const std::size_t inner = product(dims.subspan(slot + 1));
  const std::size_t in_d = dims[slot];
  const std::size_t out_d = op.rows();
  Vector out(outer * out_d * inner);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t i = 0; i < in_d; ++i) {
      for (std::size_t r = 0; r < inner; ++r) {
        const Scalar& x = full[(o * in_d + i) * inner + r];
        if (x.is_zero()) continue;
        for (std::size_t i2 = 0; i2 < out_d; ++i2) {
          const Scalar& a = op(i2, i);
          if (!a.is_zero()) out[(o * out_d + i2) * inner + r] += a * x;
        }
      }
    }
  }
  return out;
}

Vector expand_slot(const Vector& full, std::span<const std::size_t> dims, std::size_t slot,
                   const std::vector<SparseVector>& images, std::size_t image_size) {
  if (slot >= dims.size() || images.size() != dims[slot]) throw DimensionMismatch("expand_slot");
  if (full.size() != product(dims)) throw DimensionMismatch("expand_slot tensor size");
  const std::size_t outer = product(dims.subspan(0, slot));
  const std::size_t inner = product(dims.subspan(slot + 1));
  const std::size_t in_d = dims[slot];
  Vector out(outer * image_size * inner);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t i = 0; i < in_d; ++i) {
      for (std::size_t r = 0; r < inner; ++r) {
        const Scalar& x = full[(o * in_d + i) * inner + r];
        if (x.is_zero()) continue;
        for (const auto& [k, v] : images[i]) out[(o * image_size + k) * inner + r] += x * v;
      }
    }
  }
  return out;
}

BalancedTensor::BalancedTensor(std::vector<TensorFactor> factors) {
  if (factors.empty()) throw DimensionMismatch("tensor product of no factors");
  for (const auto& f : factors) dims_.push_back(f.dim);
  if (factors.size() == 1) {
    dim_ = ambient_ = dims_[0];
    outer_ = Quotient(dim_, Subspace(dim_));
    left_ = factors[0].left;
    right_ = factors[0].right;
    return;
  }
  TensorFactor first = factors.front();
  const bool want_right = !factors.back().right.empty();
  std::vector<Matrix> last_right = factors.back().right;
  factors.erase(factors.begin());
  inner_ = std::make_shared<const BalancedTensor>(std::move(factors));

  const std::size_t d0 = first.dim;
  const std::size_t di = inner_->dim();
  if (first.right.size() != inner_->left_.size())
    throw DimensionMismatch("balancing ring actions differ between adjacent slots");
  SpanBuilder relations(d0 * di);
  for (std::size_t s = 0; s < first.right.size(); ++s) {
    const Matrix& r = first.right[s];
    const Matrix& l = inner_->left_[s];
    if (r.rows() != d0 || r.cols() != d0 || l.rows() != di || l.cols() != di)
      throw DimensionMismatch("ring action matrix shape");
    for (std::size_t a = 0; a < d0; ++a) {
      for (std::size_t m = 0; m < di; ++m) {
        Vector v(d0 * di);
        for (std::size_t a2 = 0; a2 < d0; ++a2)
          if (!r(a2, a).is_zero()) v[a2 * di + m] += r(a2, a);
        for (std::size_t m2 = 0; m2 < di; ++m2)
          if (!l(m2, m).is_zero()) v[a * di + m2] -= l(m2, m);
        relations.add(v);
      }
    }
  }
  outer_ = Quotient(d0 * di, std::move(relations).build());
  dim_ = outer_.dim();
  ambient_ = d0 * inner_->ambient_dim();

  const std::size_t mid_dims[2] = {d0, di};
  for (const auto& op : first.left) {
    Matrix m(dim_, dim_);
    for (std::size_t q = 0; q < dim_; ++q)
      m.set_column(q, outer_.project(apply_slot(outer_.lift(unit_vector(dim_, q)), mid_dims, 0, op)));
    left_.push_back(std::move(m));
  }
  if (want_right) {
    for (std::size_t s = 0; s < last_right.size(); ++s) {
      const Matrix& op = inner_->right_[s];
      Matrix m(dim_, dim_);
      for (std::size_t q = 0; q < dim_; ++q)
        m.set_column(q,
                     outer_.project(apply_slot(outer_.lift(unit_vector(dim_, q)), mid_dims, 1, op)));
      right_.push_back(std::move(m));
    }
  }
}

Vector BalancedTensor::project(const Vector& full) const {
  if (full.size() != ambient_) throw DimensionMismatch("balanced tensor projection");
  if (!inner_) return full;
  const std::size_t d0 = dims_[0];
  const std::size_t ia = inner_->ambient_dim();
  const std::size_t di = inner_->dim();
  Vector mid(d0 * di);
  for (std::size_t a = 0; a < d0; ++a) {
    Vector block(full.begin() + static_cast<long>(a * ia),
                 full.begin() + static_cast<long>((a + 1) * ia));
    if (is_zero(block)) continue;
    Vector q = inner_->project(block);
    for (std::size_t m = 0; m < di; ++m) mid[a * di + m] = std::move(q[m]);
  }
  return outer_.project(mid);
}

Vector BalancedTensor::lift(const Vector& q) const {
  if (q.size() != dim_) throw DimensionMismatch("balanced tensor lift");
  if (!inner_) return q;
  const std::size_t d0 = dims_[0];
  const std::size_t ia = inner_->ambient_dim();
  const std::size_t di = inner_->dim();
  const Vector mid = outer_.lift(q);
  Vector full(ambient_);
  for (std::size_t a = 0; a < d0; ++a) {
    Vector block(mid.begin() + static_cast<long>(a * di),
                 mid.begin() + static_cast<long>((a + 1) * di));
    if (is_zero(block)) continue;
    Vector l = inner_->lift(block);
    for (std::size_t m = 0; m < ia; ++m) full[a * ia + m] = std::move(l[m]);
  }
  return full;
}

Matrix BalancedTensor::induced(std::size_t slot, const Matrix& op) const {
  Matrix m(dim_, dim_);
  for (std::size_t q = 0; q < dim_; ++q)
    m.set_column(q, project(apply_slot(lift(unit_vector(dim_, q)), dims_, slot, op)));
  return m;
}

}  // namespace d2lab
