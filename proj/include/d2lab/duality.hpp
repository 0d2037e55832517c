#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "d2lab/bialgebroid.hpp"

namespace d2lab {

/// R-valued pairing between T and S:
///   right: <t|alpha> = t1 alpha(t2)
///   left:  [alpha|t] = alpha(t1) t2
struct Pairing {
  Side side = Side::right;
  std::size_t t_dim = 0;
  std::size_t s_dim = 0;
  std::vector<Vector> values;  // R-coordinates, index t * s_dim + alpha

  const Vector& at(std::size_t t, std::size_t alpha) const { return values[t * s_dim + alpha]; }
  /// Bilinear extension to arbitrary coordinate vectors.
  Vector operator()(const Vector& t, const Vector& alpha) const;
};

/// Throws InternalInconsistency if a value falls outside R.
Pairing build_pairing(const Depth2& d, Side side);

/// eta(t) = pairing with t, as a functional on S.  Codomain for the right
/// side: Hom(S_R, R_R), phi(rho(r) alpha) = phi(alpha) r; for the left
/// side: Hom(_R S, _R R), phi(lambda(r) alpha) = r phi(alpha).
struct EtaMap {
  Side side = Side::right;
  Subspace hom;                          // vec of dim R x dim S matrices
  Matrix eta;                            // hom coordinates x dim T
  std::optional<Matrix> formula_inverse; // right side: phi -> sum_j phi(gamma_j) . u_j
};

EtaMap build_eta(const Depth2& d, const Pairing& p);

/// Identities tying the pairing to both bialgebroid structures, on all
/// basis triples.  The left side uses the mirrored identities.
Report verify_duality(const Depth2& d, const TBialgebroid& tb, const SBialgebroid& sb, Side side);

}  // namespace d2lab
