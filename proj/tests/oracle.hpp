#pragma once
// Brute-force reference computations.  Everything here works directly in
// A (x) A (x) ... coordinates with dense linear algebra and never touches
// the T / S machinery of the library.

#include <cstddef>
#include <vector>

#include "d2lab/algebra.hpp"
#include "d2lab/depth2.hpp"
#include "d2lab/linalg.hpp"

namespace oracle {

using namespace d2lab;

inline std::vector<Vector> sub_basis(const Extension& e) { return e.sub.basis(); }

/// Left multiplication by a on slot `slot` (0 = first factor) of A^(x)k.
inline Vector act_slot(const Algebra& a, const Vector& x, std::size_t k, std::size_t slot, const Vector& by,
                       bool from_left) {
  const std::size_t n = a.dim();
  std::size_t stride = 1;
  for (std::size_t s = slot + 1; s < k; ++s) stride *= n;
  Vector out = zero_vector(x.size());
  for (std::size_t flat = 0; flat < x.size(); ++flat) {
    if (x[flat].is_zero()) continue;
    const std::size_t idx = (flat / stride) % n;
    const Vector prod = from_left ? a.mul(by, a.basis(idx)) : a.mul(a.basis(idx), by);
    const std::size_t base = flat - idx * stride;
    for (std::size_t m = 0; m < n; ++m)
      if (!prod[m].is_zero()) out[base + m * stride] += x[flat] * prod[m];
  }
  return out;
}

/// Balancing relations x b (x) y - x (x) b y between every pair of adjacent slots.
inline Subspace relations(const Extension& e, std::size_t k) {
  const Algebra& a = e.ambient;
  std::size_t total = 1;
  for (std::size_t s = 0; s < k; ++s) total *= a.dim();
  std::vector<Vector> rels;
  for (std::size_t flat = 0; flat < total; ++flat) {
    const Vector x = unit_vector(total, flat);
    for (std::size_t s = 0; s + 1 < k; ++s)
      for (const Vector& b : sub_basis(e))
        rels.push_back(act_slot(a, x, k, s, b, false) - act_slot(a, x, k, s + 1, b, true));
  }
  return Subspace::span(total, rels);
}

inline std::size_t tensor_dim(const Extension& e, std::size_t k) {
  std::size_t total = 1;
  for (std::size_t s = 0; s < k; ++s) total *= e.dim();
  return total - relations(e, k).dim();
}

/// dim {a : ab = ba for all b in B}.
inline std::size_t centralizer_dim(const Extension& e) {
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  std::vector<Matrix> maps;
  for (const Vector& b : sub_basis(e)) maps.push_back(a.left_mult(b) - a.right_mult(b));
  return joint_kernel(n, maps).dim();
}

/// dim of B-B-bimodule endomorphisms of A, as a subspace of n x n matrices.
inline std::size_t bimodule_endo_dim(const Extension& e) {
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  std::vector<LinearMap> maps;
  for (const Vector& b : sub_basis(e)) {
    const Matrix l = a.left_mult(b);
    const Matrix r = a.right_mult(b);
    maps.push_back([l, n](const Vector& v) {
      const Matrix f = unvec(v, n, n);
      return vec(f * l - l * f);
    });
    maps.push_back([r, n](const Vector& v) {
      const Matrix f = unvec(v, n, n);
      return vec(f * r - r * f);
    });
  }
  return joint_kernel(n * n, maps).dim();
}

/// Elements p of A (x) A with b p - p b a balancing relation, for every b in B.
inline Subspace central_preimage(const Extension& e, const Subspace& rel) {
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  std::vector<LinearMap> maps;
  const Quotient q(n * n, rel);
  for (const Vector& b : sub_basis(e)) {
    maps.push_back([&a, &q, b](const Vector& p) {
      return q.project(act_slot(a, p, 2, 0, b, true) - act_slot(a, p, 2, 1, b, false));
    });
  }
  return joint_kernel(n * n, maps);
}

/// dim of (A (x)_B A)^B.
inline std::size_t central_dim(const Extension& e) {
  const Subspace rel = relations(e, 2);
  return central_preimage(e, rel).dim() - rel.dim();
}

/// Right D2: A (x)_B A is an A-B-direct summand of some A^m.  Left D2: the
/// same for B-A-bimodules.  Decided by whether the projection A (x) A ->
/// A (x)_B A lies in the span of all composites f o g with g : A (x)_B A -> A
/// and f : A -> A (x)_B A bimodule maps.
inline bool is_depth_two(const Extension& e, Side side) {
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  const std::size_t nn = n * n;
  const Subspace rel = relations(e, 2);
  const Quotient q(nn, rel);
  const bool right = side == Side::right;

  // g : A (x) A -> A, n x nn, vanishing on relations and bilinear.
  std::vector<LinearMap> maps;
  maps.push_back([&rel, n, nn](const Vector& v) {
    const Matrix g = unvec(v, n, nn);
    Vector out;
    for (std::size_t i = 0; i < rel.dim(); ++i) {
      const Vector img = g * rel.basis_vector(i);
      out.insert(out.end(), img.begin(), img.end());
    }
    return out;
  });
  // right D2: left A-linear, right B-linear.  left D2: left B-linear, right A-linear.
  std::vector<Vector> lefts = right ? std::vector<Vector>{} : sub_basis(e);
  std::vector<Vector> rights = right ? sub_basis(e) : std::vector<Vector>{};
  for (std::size_t i = 0; i < n; ++i) (right ? lefts : rights).push_back(a.basis(i));
  for (const Vector& x : lefts) {
    Matrix on_pair(nn, nn);
    for (std::size_t c = 0; c < nn; ++c) on_pair.set_column(c, act_slot(a, unit_vector(nn, c), 2, 0, x, true));
    const Matrix on_a = a.left_mult(x);
    maps.push_back([on_pair, on_a, n, nn](const Vector& v) {
      const Matrix g = unvec(v, n, nn);
      return vec(g * on_pair - on_a * g);
    });
  }
  for (const Vector& x : rights) {
    Matrix on_pair(nn, nn);
    for (std::size_t c = 0; c < nn; ++c) on_pair.set_column(c, act_slot(a, unit_vector(nn, c), 2, 1, x, false));
    const Matrix on_a = a.right_mult(x);
    maps.push_back([on_pair, on_a, n, nn](const Vector& v) {
      const Matrix g = unvec(v, n, nn);
      return vec(g * on_pair - on_a * g);
    });
  }
  const Subspace homs = joint_kernel(n * nn, maps);

  // f(a) = a p (right) or p a (left) with p B-central.
  const Subspace central = central_preimage(e, rel);
  std::vector<Vector> ps;
  {
    SpanBuilder seen(q.dim());
    for (const Vector& p : central.basis())
      if (seen.add(q.project(p))) ps.push_back(p);
  }

  std::vector<Vector> composites;
  for (const Vector& p : ps) {
    for (std::size_t h = 0; h < homs.dim(); ++h) {
      const Matrix g = unvec(homs.basis_vector(h), n, nn);
      Matrix c(q.dim(), nn);
      for (std::size_t col = 0; col < nn; ++col) {
        const Vector ga = g.column(col);
        c.set_column(col, q.project(right ? act_slot(a, p, 2, 0, ga, true) : act_slot(a, p, 2, 1, ga, false)));
      }
      composites.push_back(vec(c));
    }
  }
  Matrix proj(q.dim(), nn);
  for (std::size_t col = 0; col < nn; ++col) proj.set_column(col, q.project(unit_vector(nn, col)));
  return Subspace::span(q.dim() * nn, composites).contains(vec(proj));
}

}  // namespace oracle
