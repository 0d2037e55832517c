#include <optional>
#include <string>

#include "d2lab/bialgebroid.hpp"

namespace d2lab {

namespace {

// Hom_{B-B}(power, A) as vec of dim A x dim(power) matrices.
Subspace bimodule_homs(const Extension& e, const BalancedTensor& power) {
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  const std::size_t d = power.dim();
  std::vector<std::pair<Matrix, Matrix>> pairs;  // (action on power, action on A)
  for (std::size_t s = 0; s < e.sub.dim(); ++s) {
    pairs.emplace_back(power.left_action(s), a.left_mult(e.sub_element(s)));
    pairs.emplace_back(power.right_action(s), a.right_mult(e.sub_element(s)));
  }
  std::vector<LinearMap> fns;
  for (const auto& pr : pairs) {
    fns.emplace_back([&pr, n, d](const Vector& v) {
      const Matrix f = unvec(v, n, d);
      return vec(f * pr.first - pr.second * f);
    });
  }
  return joint_kernel(n * d, fns);
}

// Column x of the result is sum over the lift of e_x of f_1(a_1) ... f_k(a_k).
Matrix evaluate_on_power(const Algebra& a, const BalancedTensor& power,
                         const std::vector<Vector>& power_lifts, const std::vector<const Matrix*>& maps) {
  const std::size_t n = a.dim();
  const std::vector<std::size_t> dims(maps.size(), n);
  Matrix out(n, power.dim());
  for (std::size_t x = 0; x < power.dim(); ++x) {
    Vector v(n);
    for_each_term(power_lifts[x], dims, [&](const auto& ix, const Scalar& c) {
      Vector prod = maps[0]->column(ix[0]);
      for (std::size_t s = 1; s < maps.size(); ++s) prod = a.mul(prod, maps[s]->column(ix[s]));
      axpy(v, c, prod);
    });
    out.set_column(x, v);
  }
  return out;
}

// alpha composed with the iterated multiplication of `power`.
Matrix compose_with_product(const Algebra& a, const BalancedTensor& power,
                            const std::vector<Vector>& power_lifts, const Matrix& alpha) {
  const Matrix id = Matrix::identity(a.dim());
  const std::vector<const Matrix*> maps(power.arity(), &id);
  return alpha * evaluate_on_power(a, power, power_lifts, maps);
}

std::vector<Vector> lifts_of(const BalancedTensor& power) {
  std::vector<Vector> out;
  for (std::size_t x = 0; x < power.dim(); ++x) out.push_back(power.lift(unit_vector(power.dim(), x)));
  return out;
}

}  // namespace

SBialgebroid build_S_bialgebroid(const Depth2& d) {
  if (!d.left && !d.right) throw std::invalid_argument("extension is not depth two on either side");
  const Extension& e = d.ext;
  const SSpace& S = d.S;
  const TSpace& T = d.T;
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  const std::size_t ms = S.dim();
  const std::size_t nr = e.centralizer.dim();
  const std::size_t sdims[2] = {ms, ms};

  SBialgebroid sb;
  Bialgebroid& bg = sb.bg;
  bg.side = Side::left;
  bg.carrier = S.algebra;
  bg.base = e.centralizer_algebra;
  bg.source = S.source;
  bg.target = S.target;
  bg.counit = Matrix(nr, ms);
  for (std::size_t p = 0; p < ms; ++p) bg.counit.set_column(p, e.centralizer_coords(S.maps[p] * a.unit()));
  sb.tensors = build_carrier_tensors(bg);
  const BalancedTensor& two = sb.tensors.two;

  const BalancedTensor& sq = T.square;
  const std::size_t d2 = sq.dim();
  sb.hom2 = bimodule_homs(e, sq);
  const std::vector<Vector> sq_lifts = lifts_of(sq);

  std::vector<std::optional<Vector>> pair_cache(ms * ms);
  auto pair_vec = [&](std::size_t p, std::size_t q) -> const Vector& {
    auto& slot = pair_cache[p * ms + q];
    if (!slot) slot = vec(evaluate_on_power(a, sq, sq_lifts, {&S.maps[p], &S.maps[q]}));
    return *slot;
  };
  sb.psi2 = Matrix(sb.hom2.dim(), two.dim());
  for (std::size_t k = 0; k < two.dim(); ++k) {
    Vector f(n * d2);
    for_each_term(two.lift(unit_vector(two.dim(), k)), sdims, [&](const auto& ix, const Scalar& c) {
      axpy(f, c, pair_vec(ix[0], ix[1]));
    });
    auto coords = sb.hom2.coordinates(f);
    if (!coords) throw InternalInconsistency("S (x)_R S -> Hom(A (x)_B A, A) image is not B-bilinear");
    sb.psi2.set_column(k, *coords);
  }
  auto psi2_inv = sb.psi2.rows() == sb.psi2.cols() ? inverse(sb.psi2) : std::nullopt;
  if (!psi2_inv) throw InternalInconsistency("S (x)_R S -> Hom(A (x)_B A, A) is not invertible");
  sb.report.property("S.psi2_bijective", true).dims = {{"S(x)S", two.dim()}, {"hom2", sb.hom2.dim()}};

  bg.coproduct = Matrix(two.dim(), ms);
  for (std::size_t p = 0; p < ms; ++p) {
    auto coords = sb.hom2.coordinates(vec(compose_with_product(a, sq, sq_lifts, S.maps[p])));
    if (!coords) throw InternalInconsistency("alpha composed with multiplication is not B-bilinear");
    bg.coproduct.set_column(p, *psi2_inv * *coords);
  }

  if (d.right) {
    const QuasibaseCertificate& right = *d.right;
    const std::size_t dims2[2] = {n, n};
    // F -> sum_j gamma_j (x) u_j1 F(u_j2 (x) -)
    std::vector<std::vector<Vector>> proj_pair(n);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t x = 0; x < n; ++x) proj_pair[b].push_back(sq.project(kron(a.basis(b), a.basis(x))));
    std::string witness;
    for (std::size_t c = 0; c < sb.hom2.dim() && witness.empty(); ++c) {
      const Matrix f = unvec(sb.hom2.basis_vector(c), n, d2);
      Vector full(ms * ms);
      for (std::size_t j = 0; j < right.size() && witness.empty(); ++j) {
        Matrix m(n, n);
        for (std::size_t x = 0; x < n; ++x) {
          Vector v(n);
          for_each_term(T.lift(right.t[j]), dims2, [&](const auto& ix, const Scalar& cf) {
            axpy(v, cf, a.mul(a.basis(ix[0]), f * proj_pair[ix[1]][x]));
          });
          m.set_column(x, v);
        }
        auto mc = S.space.coordinates(vec(m));
        if (!mc) witness = "column " + std::to_string(c) + ": second factor not in S";
        else full = full + kron(right.s[j], *mc);
      }
      if (witness.empty() && two.project(full) != psi2_inv->column(c))
        witness = "column " + std::to_string(c);
    }
    sb.report.property("S.psi2_inverse.right_formula", witness.empty(), witness);

    const Matrix explicit_delta = explicit_S_coproduct(d, sb, right);
    std::string w;
    for (std::size_t p = 0; p < ms && w.empty(); ++p)
      if (explicit_delta.column(p) != bg.coproduct.column(p)) w = "alpha=e" + std::to_string(p);
    sb.report.property("S.coproduct.explicit_formula", w.empty(), w);
  }
  return sb;
}

Matrix explicit_S_coproduct(const Depth2& d, const SBialgebroid& sb, const QuasibaseCertificate& right) {
  const Algebra& a = d.ext.ambient;
  const SSpace& S = d.S;
  const std::size_t n = a.dim();
  const std::size_t ms = S.dim();
  const std::size_t dims2[2] = {n, n};
  const BalancedTensor& two = sb.tensors.two;
  std::vector<Matrix> lambda;
  for (std::size_t i = 0; i < n; ++i) lambda.push_back(a.left_mult(a.basis(i)));
  Matrix out(two.dim(), ms);
  for (std::size_t p = 0; p < ms; ++p) {
    Vector full(ms * ms);
    for (std::size_t j = 0; j < right.size(); ++j) {
      Matrix m(n, n);
      for_each_term(d.T.lift(right.t[j]), dims2, [&](const auto& ix, const Scalar& c) {
        Matrix term = lambda[ix[0]] * S.maps[p] * lambda[ix[1]];
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t q = 0; q < n; ++q) m(r, q) += c * term(r, q);
      });
      full = full + kron(right.s[j], S.coords(m));
    }
    out.set_column(p, two.project(full));
  }
  return out;
}

Report verify_S_coassoc_witness(const Depth2& d, const SBialgebroid& sb) {
  const Extension& e = d.ext;
  const SSpace& S = d.S;
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  const std::size_t ms = S.dim();
  const std::size_t sdims2[2] = {ms, ms};
  const std::size_t sdims3[3] = {ms, ms, ms};
  const BalancedTensor& two = sb.tensors.two;
  const BalancedTensor& three = sb.tensors.three;

  const BalancedTensor cube = build_tensor_power(e, 3);
  const Subspace hom3 = bimodule_homs(e, cube);
  const std::vector<Vector> cube_lifts = lifts_of(cube);

  Report rep;
  Matrix psi3(hom3.dim(), three.dim());
  std::string witness;
  for (std::size_t k = 0; k < three.dim() && witness.empty(); ++k) {
    Vector f(n * cube.dim());
    for_each_term(three.lift(unit_vector(three.dim(), k)), sdims3, [&](const auto& ix, const Scalar& c) {
      axpy(f, c, vec(evaluate_on_power(a, cube, cube_lifts,
                                       {&S.maps[ix[0]], &S.maps[ix[1]], &S.maps[ix[2]]})));
    });
    auto coords = hom3.coordinates(f);
    if (!coords) witness = "column " + std::to_string(k) + " not B-bilinear";
    else psi3.set_column(k, *coords);
  }
  const bool bijective = witness.empty() && psi3.rows() == psi3.cols() && inverse(psi3).has_value();
  if (witness.empty() && !bijective) witness = "not invertible";
  rep.property("S.psi3_bijective", bijective, witness)
      .dims = {{"S(x)S(x)S", three.dim()}, {"hom3", hom3.dim()}};
  if (!bijective) return rep;

  std::vector<SparseVector> delta_lifts;
  for (std::size_t p = 0; p < ms; ++p) delta_lifts.push_back(sparse(two.lift(sb.bg.coproduct.column(p))));
  witness.clear();
  for (std::size_t p = 0; p < ms && witness.empty(); ++p) {
    const Vector expect = vec(compose_with_product(a, cube, cube_lifts, S.maps[p]));
    const Vector dl = two.lift(sb.bg.coproduct.column(p));
    const Vector x = three.project(expand_slot(dl, sdims2, 0, delta_lifts, ms * ms));
    const Vector y = three.project(expand_slot(dl, sdims2, 1, delta_lifts, ms * ms));
    if (hom3.element(psi3 * x) != expect || hom3.element(psi3 * y) != expect)
      witness = "alpha=e" + std::to_string(p);
  }
  rep.property("S.coassociativity_image", witness.empty(), witness);
  return rep;
}

std::vector<Matrix> dual_basis_functionals(const Depth2& d, Side side) {
  const Extension& e = d.ext;
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  const std::size_t nr = e.centralizer.dim();
  const std::size_t dims2[2] = {n, n};
  const auto& cert = d.cert(side);
  if (!cert) return {};
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < cert->size(); ++i) {
    if (side == Side::left) {
      const Matrix beta = d.S.map(cert->s[i]);
      Matrix f(nr, d.T.dim());
      for (std::size_t p = 0; p < d.T.dim(); ++p) {
        Vector v(n);
        for_each_term(d.T.lifts[p], dims2, [&](const auto& ix, const Scalar& c) {
          axpy(v, c, a.mul(beta.column(ix[0]), a.basis(ix[1])));
        });
        f.set_column(p, e.centralizer_coords(v));
      }
      out.push_back(std::move(f));
    } else {
      const Vector u = d.T.lift(cert->t[i]);
      Matrix h(nr, d.S.dim());
      for (std::size_t q = 0; q < d.S.dim(); ++q) {
        Vector v(n);
        for_each_term(u, dims2, [&](const auto& ix, const Scalar& c) {
          axpy(v, c, a.mul(a.basis(ix[0]), d.S.maps[q].column(ix[1])));
        });
        h.set_column(q, e.centralizer_coords(v));
      }
      out.push_back(std::move(h));
    }
  }
  return out;
}

Report verify_dual_bases(const Depth2& d) {
  Report rep;
  for (Side side : {Side::left, Side::right}) {
    const std::string id = side == Side::left ? "dual_basis.T" : "dual_basis.S";
    const auto& cert = d.cert(side);
    if (!cert) {
      rep.skip(id, "no " + std::string(to_string(side)) + " certificate");
      continue;
    }
    std::vector<Matrix> fs;
    try {
      fs = dual_basis_functionals(d, side);
    } catch (const InternalInconsistency& ex) {
      rep.property(id, false, ex.what());
      continue;
    }
    std::string witness;
    if (side == Side::left) {
      const Algebra& t = d.T.algebra;
      for (std::size_t p = 0; p < t.dim() && witness.empty(); ++p) {
        Vector sum(t.dim());
        for (std::size_t i = 0; i < cert->size(); ++i)
          sum = sum + t.mul(cert->t[i], d.T.source * fs[i].column(p));
        if (sum != t.basis(p)) witness = "t=e" + std::to_string(p);
      }
    } else {
      const Algebra& s = d.S.algebra;
      for (std::size_t q = 0; q < s.dim() && witness.empty(); ++q) {
        Vector sum(s.dim());
        for (std::size_t j = 0; j < cert->size(); ++j)
          sum = sum + s.mul(d.S.target * fs[j].column(q), cert->s[j]);
        if (sum != s.basis(q)) witness = "alpha=e" + std::to_string(q);
      }
    }
    rep.property(id, witness.empty(), witness).dims = {{"functionals", fs.size()}};
  }
  return rep;
}

}  // namespace d2lab
