#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "d2lab/depth2.hpp"

namespace d2lab {

/// Side-tagged bialgebroid over a base algebra R.
///
/// The R-bimodule structure on the carrier H used by the coring is
///   right:  h.r = h s(r),  r.h = h t(r)
///   left:   h.r = t(r) h,  r.h = s(r) h
struct Bialgebroid {
  Side side = Side::right;
  Algebra carrier;
  Algebra base;
  Matrix source;     // dim H x dim R
  Matrix target;     // dim H x dim R
  Matrix coproduct;  // dim(H (x)_R H) x dim H
  Matrix counit;     // dim R x dim H
};

/// Slot-wise product of two full tensors: (x1 (x) x2 ...)(y1 (x) y2 ...) =
/// x1 y1 (x) x2 y2 ..., slot k multiplied in *slots[k].
Vector slotwise_product(const std::vector<const Algebra*>& slots, const Vector& x, const Vector& y);

/// The carrier as an R-bimodule (action matrices per basis element of R).
TensorFactor carrier_bimodule(const Bialgebroid& bg);

struct CarrierTensors {
  BalancedTensor two;    // H (x)_R H
  BalancedTensor three;  // H (x)_R H (x)_R H
};

CarrierTensors build_carrier_tensors(const Bialgebroid& bg);

/// Coring axioms, base-map conditions and the five compatibility axioms,
/// each checked on all basis elements (pairs) of H and R.  Check ids are
/// prefixed with `prefix` and a dot.
Report verify_axioms(const Bialgebroid& bg, const CarrierTensors& tensors, std::string_view prefix);

/// T as a right bialgebroid over R, with Delta(t) := Phi2^{-1}(t1 (x) 1 (x) t2).
struct TBialgebroid {
  Bialgebroid bg;
  CarrierTensors tensors;
  BalancedTensor cube;  // A (x)_B A (x)_B A
  Subspace cube_invariants;
  Matrix phi2;          // T (x)_R T -> cube invariants (coordinates)
  Matrix phi2_inverse;
  Report report;        // construction checks: inverse formulas, explicit coproduct, images
};

/// Requires a certificate on at least one side (std::invalid_argument
/// otherwise).  Throws InternalInconsistency if Phi2 is not invertible.
TBialgebroid build_T_bialgebroid(const Depth2& d);

/// Delta(t) = sum_j (t1 (x) gamma_j(t2)) (x) u_j for a right certificate.
Matrix explicit_T_coproduct(const Depth2& d, const TBialgebroid& tb,
                            const QuasibaseCertificate& right);

/// Phi3: T (x)_R T (x)_R T -> (A (x)_B A (x)_B A (x)_B A)^B and its inverses.
struct CoassocWitness {
  Matrix phi3;
  Matrix phi3_inverse;
  Report report;
};

CoassocWitness build_coassoc_witness(const Depth2& d, const TBialgebroid& tb);

/// S as a left bialgebroid over R, with Delta characterized by
/// Psi2(Delta(alpha)) = (a (x) a' -> alpha(a a')).
struct SBialgebroid {
  Bialgebroid bg;
  CarrierTensors tensors;
  Subspace hom2;  // Hom_{B-B}(A (x)_B A, A) as vec of dim A x dim(A (x)_B A) matrices
  Matrix psi2;    // S (x)_R S -> hom2 (coordinates)
  Report report;
};

SBialgebroid build_S_bialgebroid(const Depth2& d);

/// Delta(alpha) = sum_j gamma_j (x) u_j1 alpha(u_j2 -) for a right certificate.
Matrix explicit_S_coproduct(const Depth2& d, const SBialgebroid& sb,
                            const QuasibaseCertificate& right);

/// Psi3 bijectivity and Psi3 of both iterated coproducts against alpha(a a' a'').
Report verify_S_coassoc_witness(const Depth2& d, const SBialgebroid& sb);

/// Right bialgebroid -> left bialgebroid on the opposite carrier with
/// s := t, t := s and the same coring structure.
Bialgebroid to_opposite(const Bialgebroid& bg);

/// R-valued functionals f_i(t) = beta_i(t1) t2 (left certificate, matrices
/// dim R x dim T) or h_j(alpha) = u_j1 alpha(u_j2) (right certificate,
/// dim R x dim S).
std::vector<Matrix> dual_basis_functionals(const Depth2& d, Side side);

/// t = sum_i t_i s_R(f_i(t)) on every basis t, alpha = sum_j rho(h_j(alpha)) gamma_j
/// on every basis alpha.  Sides without a certificate are skipped.
Report verify_dual_bases(const Depth2& d);

}  // namespace d2lab
