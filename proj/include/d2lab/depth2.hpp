#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "d2lab/algebra.hpp"
#include "d2lab/report.hpp"
#include "d2lab/tensor.hpp"

namespace d2lab {

enum class Side { left, right };
std::string_view to_string(Side s);

/// A (x)_B ... (x)_B A with `arity` factors, 1 <= arity <= 4.
BalancedTensor build_tensor_power(const Extension& e, std::size_t arity);

/// Induced left and right multiplications by the basis of A on a tensor power.
std::vector<Matrix> outer_left_actions(const Extension& e, const BalancedTensor& power);
std::vector<Matrix> outer_right_actions(const Extension& e, const BalancedTensor& power);

/// The B-central part of a tensor power: joint kernel of b.x - x.b.
Subspace b_invariants(const Extension& e, const BalancedTensor& power);

/// T = (A (x)_B A)^B with product t t' = t'^1 t^1 (x) t^2 t'^2.
struct TSpace {
  BalancedTensor square;
  std::vector<Matrix> left_mult;   // a . x on A (x)_B A, per basis element of A
  std::vector<Matrix> right_mult;  // x . a
  Subspace space;                  // T inside square coordinates
  Algebra algebra;                 // in the echelon basis of `space`
  Matrix source;                   // s_R(r) = 1 (x) r, dim T x dim R
  Matrix target;                   // t_R(r) = r (x) 1
  std::vector<Vector> lifts;       // canonical A (x) A lift of each basis element

  std::size_t dim() const noexcept { return space.dim(); }
  Vector element(const Vector& coords) const { return space.element(coords); }
  /// Throws InternalInconsistency when x is not B-central.
  Vector coords(const Vector& x) const;
  Vector lift(const Vector& coords) const { return square.lift(element(coords)); }
  /// x . a for x in square coordinates and a in A.
  Vector act_right(const Vector& x, const Vector& a) const;
  Vector act_left(const Vector& a, const Vector& x) const;
};

TSpace compute_T(const Extension& e);

/// S = End_B A_B under composition (a b)(x) = a(b(x)).
struct SSpace {
  Subspace space;             // inside row-major vec(End_K(A))
  Algebra algebra;
  Matrix source;              // lambda(r), dim S x dim R
  Matrix target;              // rho(r)
  std::vector<Matrix> maps;   // basis endomorphisms

  std::size_t dim() const noexcept { return space.dim(); }
  Matrix map(const Vector& coords) const;
  /// Throws InternalInconsistency when m is not a B-bimodule map.
  Vector coords(const Matrix& m) const;
};

SSpace compute_S(const Extension& e);

/// Pairs (t_i, beta_i) with a (x) a' = sum t_i beta_i(a) a'   (left), or
/// pairs (u_j, gamma_j) with a (x) a' = sum a gamma_j(a') u_j (right).
/// Both components are stored in T- and S-coordinates.
struct QuasibaseCertificate {
  Side side = Side::left;
  std::vector<Vector> t;
  std::vector<Vector> s;
  std::size_t size() const noexcept { return t.size(); }
};

/// Solves for X in T (x) S with sum t_i beta_i(a) = a (x) 1 (left) or
/// sum gamma_j(a) u_j = 1 (x) a (right) and splits X into pairs by a rank
/// factorization.  nullopt iff the extension is not D2 on that side.
std::optional<QuasibaseCertificate> find_quasibases(const Extension& e, const TSpace& t,
                                                    const SSpace& s, Side side);

/// Checks the full two-variable identity on all basis pairs.
Report verify_quasibases(const Extension& e, const TSpace& t, const SSpace& s,
                         const QuasibaseCertificate& cert);

/// Everything the later stages share for one extension.
struct Depth2 {
  Extension ext;
  TSpace T;
  SSpace S;
  std::optional<QuasibaseCertificate> left;
  std::optional<QuasibaseCertificate> right;

  const std::optional<QuasibaseCertificate>& cert(Side side) const {
    return side == Side::left ? left : right;
  }
};

Depth2 analyze_depth2(Extension e);

}  // namespace d2lab
