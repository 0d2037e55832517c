#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "d2lab/bialgebroid.hpp"

namespace d2lab {

/// delta: A -> A (x)_R H (right) or H (x)_R A (left), H = T or T^op.
/// A is an R-bimodule by multiplication in A.
struct Coaction {
  Side side = Side::right;
  Bialgebroid bialgebroid;
  BalancedTensor two;    // A (x)_R H   or  H (x)_R A
  BalancedTensor three;  // A (x)_R H (x)_R H   or  H (x)_R H (x)_R A
  Matrix map;            // two.dim x dim A
};

/// Tensor spaces for a coaction of `bg` on A, with map left zero.
Coaction coaction_frame(const Extension& e, const Bialgebroid& bg, Side side);

/// delta(a) = sum_j gamma_j(a) (x) u_j.  Requires a right certificate.
Coaction build_right_coaction(const Depth2& d, const TBialgebroid& tb);
/// delta(a) = sum_i t_i (x) beta_i(a) over T^op.  Requires a left certificate.
Coaction build_left_coaction(const Depth2& d, const Bialgebroid& t_op);

/// Coassociativity, counit, unit, exchange, multiplicativity, R-linearity,
/// the quasibase-free characterization of delta, and commutation of the
/// coinvariants with R.  `carrier` holds H (x)_R H for the coproduct.
Report verify_comodule_algebra(const Depth2& d, const Coaction& c, const CarrierTensors& carrier);

/// {a : delta(a) = a (x) 1} (right) or {a : delta(a) = 1 (x) a} (left).
Subspace coinvariants(const Extension& e, const Coaction& c);

struct GaloisMap {
  Matrix beta;                    // two.dim x dim(A (x)_B A)
  Matrix formula_inverse;         // a (x) t -> a t1 (x) t2   or  t (x) a -> t1 (x) t2 a
  std::optional<Matrix> inverse;  // exact inverse when beta is bijective
};

/// beta(a (x) a') = a a'_(0) (x) a'_(1)  or  a_(-1) (x) a_(0) a'.
GaloisMap galois_map(const Depth2& d, const Coaction& c);

/// Monic / epic / split monic (A-B-bilinear retraction) for an arbitrary
/// matrix in place of beta; when split monic, re-derives right D2 and right
/// balancedness and checks that beta is then bijective.
Report analyze_comodule_algebra(const Depth2& d, const Coaction& c, const Matrix& beta);

struct BalancedResult {
  bool balanced = false;
  std::size_t endo_dim = 0;       // dim End A_B (right) or End _B A (left)
  std::size_t commutant_dim = 0;  // dim of its commutant in End_K(A)
};

/// Right: commutant of End A_B equals rho(B).  Left: commutant of End _B A
/// equals lambda(B).
BalancedResult check_balanced(const Extension& e, Side side);

struct GaloisReport {
  Side side = Side::right;
  bool depth_two = false;
  bool balanced = false;
  bool constructed = false;
  bool injective = false;
  bool surjective = false;
  bool split_monic = false;
  std::size_t coinvariants_dim = 0;
  bool coinvariants_equal_b = false;
  bool galois = false;  // constructed, beta bijective and coinvariants = B
  Report report;
};

/// Both sides of the characterization computed independently.  `tb` may
/// be null when the extension is not depth two.
GaloisReport run_characterization(const Depth2& d, const TBialgebroid* tb, Side side);

struct DimensionGuard : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::size_t max_algebra_dim = 8;
  std::size_t max_endo_dim = 64;
};

/// End _B A over rho(A^op): left D2 and left balanced verdicts, with the
/// conclusion checked as a property when A|B is D2 on both sides.  Throws
/// DimensionGuard when a limit is exceeded.
Report endo_tower(const Depth2& d, const Limits& limits);

}  // namespace d2lab
