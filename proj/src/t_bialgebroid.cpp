#include <optional>
#include <stdexcept>
#include <string>

#include "d2lab/bialgebroid.hpp"

namespace d2lab {

namespace {

std::vector<SparseVector> unit_vectors(std::size_t n) {
  std::vector<SparseVector> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].emplace_back(i, Scalar(1));
  return out;
}

std::optional<Vector> t_coords(const TSpace& t, const Vector& full) {
  return t.space.coordinates(t.square.project(full));
}

// images[i][a] = map_i(e_a)
std::vector<std::vector<Vector>> images_of(const SSpace& s, const QuasibaseCertificate& cert,
                                           std::size_t n) {
  std::vector<std::vector<Vector>> out(cert.size());
  for (std::size_t i = 0; i < cert.size(); ++i) {
    const Matrix m = s.map(cert.s[i]);
    for (std::size_t a = 0; a < n; ++a) out[i].push_back(m.column(a));
  }
  return out;
}

std::string col(std::size_t k) { return "column " + std::to_string(k); }

}  // namespace

TBialgebroid build_T_bialgebroid(const Depth2& d) {
  if (!d.left && !d.right) throw std::invalid_argument("extension is not depth two on either side");
  const Extension& e = d.ext;
  const TSpace& T = d.T;
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  const std::size_t mt = T.dim();
  const std::size_t nr = e.centralizer.dim();
  const std::size_t dims2[2] = {n, n};
  const std::size_t dims3[3] = {n, n, n};
  const std::size_t tdims[2] = {mt, mt};
  const auto units = unit_vectors(n);

  TBialgebroid tb;
  Bialgebroid& bg = tb.bg;
  bg.side = Side::right;
  bg.carrier = T.algebra;
  bg.base = e.centralizer_algebra;
  bg.source = T.source;
  bg.target = T.target;
  bg.counit = Matrix(nr, mt);
  for (std::size_t p = 0; p < mt; ++p) {
    Vector v(n);
    for_each_term(T.lifts[p], dims2, [&](const auto& ix, const Scalar& c) {
      for (const auto& [k, x] : a.basis_product(ix[0], ix[1])) v[k] += c * x;
    });
    bg.counit.set_column(p, e.centralizer_coords(v));
  }
  tb.tensors = build_carrier_tensors(bg);
  const BalancedTensor& two = tb.tensors.two;

  tb.cube = build_tensor_power(e, 3);
  tb.cube_invariants = b_invariants(e, tb.cube);
  const Subspace& inv = tb.cube_invariants;

  // t_p (x) t_q -> t_p1 (x) t_p2 t_q1 (x) t_q2
  std::vector<Vector> pair_image(mt * mt);
  for (std::size_t p = 0; p < mt; ++p) {
    for (std::size_t q = 0; q < mt; ++q) {
      Vector full(n * n * n);
      for_each_term(T.lifts[p], dims2, [&](const auto& ip, const Scalar& cp) {
        for_each_term(T.lifts[q], dims2, [&](const auto& iq, const Scalar& cq) {
          add_pure_tensor(full, dims3, cp * cq,
                          {&units[ip[0]], &a.basis_product(ip[1], iq[0]), &units[iq[1]]});
        });
      });
      pair_image[p * mt + q] = tb.cube.project(full);
    }
  }
  tb.phi2 = Matrix(inv.dim(), two.dim());
  for (std::size_t k = 0; k < two.dim(); ++k) {
    Vector img(tb.cube.dim());
    for_each_term(two.lift(unit_vector(two.dim(), k)), tdims, [&](const auto& ix, const Scalar& c) {
      axpy(img, c, pair_image[ix[0] * mt + ix[1]]);
    });
    auto coords = inv.coordinates(img);
    if (!coords) throw InternalInconsistency("Phi2 image is not B-central");
    tb.phi2.set_column(k, *coords);
  }
  auto phi2_inv = tb.phi2.rows() == tb.phi2.cols() ? inverse(tb.phi2) : std::nullopt;
  if (!phi2_inv)
    throw InternalInconsistency("T (x)_R T -> (A (x)_B A (x)_B A)^B is not invertible");
  tb.phi2_inverse = *phi2_inv;
  tb.report.property("T.phi2_bijective", true).dims = {{"T(x)T", two.dim()}, {"cube_invariants", inv.dim()}};

  // Delta(t) = Phi2^{-1}(t1 (x) 1 (x) t2)
  bg.coproduct = Matrix(two.dim(), mt);
  for (std::size_t p = 0; p < mt; ++p) {
    Vector full1(n * n * n);
    const SparseVector one = sparse(a.unit());
    for_each_term(T.lifts[p], dims2, [&](const auto& ix, const Scalar& c) {
      add_pure_tensor(full1, dims3, c, {&units[ix[0]], &one, &units[ix[1]]});
    });
    auto coords = inv.coordinates(tb.cube.project(full1));
    if (!coords) throw InternalInconsistency("t1 (x) 1 (x) t2 is not B-central");
    bg.coproduct.set_column(p, tb.phi2_inverse * *coords);
  }

  // Inverse formulas for Phi2.
  const std::size_t ninv = inv.dim();
  std::vector<Vector> cube_lifts;
  for (std::size_t c = 0; c < ninv; ++c) cube_lifts.push_back(tb.cube.lift(inv.basis_vector(c)));

  if (d.left) {
    const auto beta = images_of(d.S, *d.left, n);
    const auto& ts = d.left->t;
    std::string witness;
    for (std::size_t c = 0; c < ninv && witness.empty(); ++c) {
      Vector full(mt * mt);
      for (std::size_t i = 0; i < d.left->size() && witness.empty(); ++i) {
        Vector y(n * n);
        for_each_term(cube_lifts[c], dims3, [&](const auto& ix, const Scalar& cf) {
          const Vector u = a.mul(beta[i][ix[0]], a.basis(ix[1]));
          axpy(y, cf, kron(u, a.basis(ix[2])));
        });
        auto yc = t_coords(T, y);
        if (!yc) witness = col(c) + ": second factor not in T";
        else full = full + kron(ts[i], *yc);
      }
      if (witness.empty() && two.project(full) != tb.phi2_inverse.column(c)) witness = col(c);
    }
    tb.report.property("T.phi2_inverse.left_formula", witness.empty(), witness);
  }
  if (d.right) {
    const auto gamma = images_of(d.S, *d.right, n);
    const auto& us = d.right->t;
    std::string witness;
    for (std::size_t c = 0; c < ninv && witness.empty(); ++c) {
      Vector full(mt * mt);
      for (std::size_t j = 0; j < d.right->size() && witness.empty(); ++j) {
        Vector y(n * n);
        for_each_term(cube_lifts[c], dims3, [&](const auto& ix, const Scalar& cf) {
          const Vector u = a.mul(a.basis(ix[1]), gamma[j][ix[2]]);
          axpy(y, cf, kron(a.basis(ix[0]), u));
        });
        auto yc = t_coords(T, y);
        if (!yc) witness = col(c) + ": first factor not in T";
        else full = full + kron(*yc, us[j]);
      }
      if (witness.empty() && two.project(full) != tb.phi2_inverse.column(c)) witness = col(c);
    }
    tb.report.property("T.phi2_inverse.right_formula", witness.empty(), witness);

    const Matrix explicit_delta = explicit_T_coproduct(d, tb, *d.right);
    std::string w;
    for (std::size_t p = 0; p < mt && w.empty(); ++p)
      if (explicit_delta.column(p) != bg.coproduct.column(p)) w = "t=e" + std::to_string(p);
    tb.report.property("T.coproduct.explicit_formula", w.empty(), w);
  }

  // (s(r) (x) 1) Delta(t) and (1 (x) t(r)) Delta(t) both map to t1 (x) r (x) t2.
  {
    std::string witness;
    for (std::size_t k = 0; k < nr && witness.empty(); ++k) {
      const Vector rv = e.centralizer_element(k);
      const SparseVector rs = sparse(rv);
      const Matrix ls = T.algebra.left_mult(T.source.column(k));
      const Matrix lt = T.algebra.left_mult(T.target.column(k));
      for (std::size_t p = 0; p < mt && witness.empty(); ++p) {
        Vector full(n * n * n);
        for_each_term(T.lifts[p], dims2, [&](const auto& ix, const Scalar& c) {
          add_pure_tensor(full, dims3, c, {&units[ix[0]], &rs, &units[ix[1]]});
        });
        const Vector expect = tb.cube.project(full);
        const Vector lift = two.lift(bg.coproduct.column(p));
        const Vector x = two.project(apply_slot(lift, tdims, 0, ls));
        const Vector y = two.project(apply_slot(lift, tdims, 1, lt));
        if (inv.element(tb.phi2 * x) != expect || inv.element(tb.phi2 * y) != expect)
          witness = "t=e" + std::to_string(p) + " r=e" + std::to_string(k);
      }
    }
    tb.report.property("T.takeuchi_image", witness.empty(), witness);
  }
  // Delta(tt') and Delta(t)Delta(t') both map to t'1 t1 (x) 1 (x) t2 t'2.
  {
    const std::vector<const Algebra*> pair{&T.algebra, &T.algebra};
    const SparseVector one = sparse(a.unit());
    std::vector<Vector> lifts;
    for (std::size_t p = 0; p < mt; ++p) lifts.push_back(two.lift(bg.coproduct.column(p)));
    std::string witness;
    for (std::size_t p = 0; p < mt && witness.empty(); ++p) {
      for (std::size_t q = 0; q < mt && witness.empty(); ++q) {
        Vector full(n * n * n);
        for_each_term(T.lifts[p], dims2, [&](const auto& ip, const Scalar& cp) {
          for_each_term(T.lifts[q], dims2, [&](const auto& iq, const Scalar& cq) {
            add_pure_tensor(full, dims3, cp * cq,
                            {&a.basis_product(iq[0], ip[0]), &one, &a.basis_product(ip[1], iq[1])});
          });
        });
        const Vector expect = tb.cube.project(full);
        const Vector dprod = bg.coproduct * T.algebra.mul(T.algebra.basis(p), T.algebra.basis(q));
        const Vector pprod = two.project(slotwise_product(pair, lifts[p], lifts[q]));
        if (inv.element(tb.phi2 * dprod) != expect || inv.element(tb.phi2 * pprod) != expect)
          witness = "t=e" + std::to_string(p) + " t'=e" + std::to_string(q);
      }
    }
    tb.report.property("T.multiplicative_image", witness.empty(), witness);
  }
  return tb;
}

Matrix explicit_T_coproduct(const Depth2& d, const TBialgebroid& tb,
                            const QuasibaseCertificate& right) {
  const Algebra& a = d.ext.ambient;
  const TSpace& T = d.T;
  const std::size_t n = a.dim();
  const std::size_t mt = T.dim();
  const std::size_t dims2[2] = {n, n};
  const auto gamma = images_of(d.S, right, n);
  const BalancedTensor& two = tb.tensors.two;
  Matrix out(two.dim(), mt);
  for (std::size_t p = 0; p < mt; ++p) {
    Vector full(mt * mt);
    for (std::size_t j = 0; j < right.size(); ++j) {
      Vector y(n * n);
      for_each_term(T.lifts[p], dims2, [&](const auto& ix, const Scalar& c) {
        axpy(y, c, kron(a.basis(ix[0]), gamma[j][ix[1]]));
      });
      auto yc = t_coords(T, y);
      if (!yc) throw InternalInconsistency("t1 (x) gamma(t2) is not B-central");
      full = full + kron(*yc, right.t[j]);
    }
    out.set_column(p, two.project(full));
  }
  return out;
}

CoassocWitness build_coassoc_witness(const Depth2& d, const TBialgebroid& tb) {
  const Extension& e = d.ext;
  const TSpace& T = d.T;
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  const std::size_t mt = T.dim();
  const std::size_t dims2[2] = {n, n};
  const std::size_t dims4[4] = {n, n, n, n};
  const std::size_t tdims2[2] = {mt, mt};
  const std::size_t tdims3[3] = {mt, mt, mt};
  const auto units = unit_vectors(n);
  const BalancedTensor& two = tb.tensors.two;
  const BalancedTensor& three = tb.tensors.three;

  const BalancedTensor quad = build_tensor_power(e, 4);
  const Subspace inv = b_invariants(e, quad);

  CoassocWitness w;
  w.phi3 = Matrix(inv.dim(), three.dim());
  std::vector<SparseVector> sparse_t;
  for (std::size_t p = 0; p < mt; ++p) sparse_t.push_back(sparse(T.lifts[p]));
  for (std::size_t k = 0; k < three.dim(); ++k) {
    Vector full(n * n * n * n);
    for_each_term(three.lift(unit_vector(three.dim(), k)), tdims3, [&](const auto& it, const Scalar& c) {
      for (const auto& [fp, cp] : sparse_t[it[0]]) {
        for (const auto& [fq, cq] : sparse_t[it[1]]) {
          for (const auto& [fr, cr] : sparse_t[it[2]]) {
            add_pure_tensor(full, dims4, c * cp * cq * cr,
                            {&units[fp / n], &a.basis_product(fp % n, fq / n),
                             &a.basis_product(fq % n, fr / n), &units[fr % n]});
          }
        }
      }
    });
    auto coords = inv.coordinates(quad.project(full));
    if (!coords) throw InternalInconsistency("Phi3 image is not B-central");
    w.phi3.set_column(k, *coords);
  }
  auto phi3_inv = w.phi3.rows() == w.phi3.cols() ? inverse(w.phi3) : std::nullopt;
  w.report.property("T.phi3_bijective", phi3_inv.has_value(),
                    phi3_inv ? "" : "T (x)_R T (x)_R T -> (A^(x)4)^B not invertible")
      .dims = {{"T(x)T(x)T", three.dim()}, {"quad_invariants", inv.dim()}};
  if (!phi3_inv) return w;
  w.phi3_inverse = *phi3_inv;

  std::vector<Vector> quad_lifts;
  for (std::size_t c = 0; c < inv.dim(); ++c) quad_lifts.push_back(quad.lift(inv.basis_vector(c)));

  std::optional<Matrix> left_formula, right_formula;
  if (d.left) {
    const auto beta = images_of(d.S, *d.left, n);
    const std::size_t m = d.left->size();
    std::vector<SparseVector> st;
    for (const auto& t : d.left->t) st.push_back(sparse(t));
    Matrix out(three.dim(), inv.dim());
    std::string witness;
    for (std::size_t c = 0; c < inv.dim() && witness.empty(); ++c) {
      Vector full(mt * mt * mt);
      for (std::size_t i = 0; i < m && witness.empty(); ++i) {
        for (std::size_t j = 0; j < m && witness.empty(); ++j) {
          Vector y(n * n);
          for_each_term(quad_lifts[c], dims4, [&](const auto& ix, const Scalar& cf) {
            Vector u = a.mul(beta[i][ix[0]], a.basis(ix[1]));
            Vector bu(n);
            for (std::size_t l = 0; l < n; ++l)
              if (!u[l].is_zero()) axpy(bu, u[l], beta[j][l]);
            axpy(y, cf, kron(a.mul(bu, a.basis(ix[2])), a.basis(ix[3])));
          });
          auto yc = t_coords(T, y);
          if (!yc) {
            witness = col(c) + ": last factor not in T";
            break;
          }
          const SparseVector ys = sparse(*yc);
          add_pure_tensor(full, tdims3, Scalar(1), {&st[i], &st[j], &ys});
        }
      }
      if (witness.empty()) out.set_column(c, three.project(full));
    }
    if (witness.empty() && out != w.phi3_inverse) {
      for (std::size_t c = 0; c < inv.dim(); ++c)
        if (out.column(c) != w.phi3_inverse.column(c)) {
          witness = col(c);
          break;
        }
    }
    w.report.property("T.phi3_inverse.left_formula", witness.empty(), witness);
    left_formula = std::move(out);
  }
  if (d.right) {
    const auto gamma = images_of(d.S, *d.right, n);
    const std::size_t m = d.right->size();
    std::vector<SparseVector> su;
    for (const auto& t : d.right->t) su.push_back(sparse(t));
    Matrix out(three.dim(), inv.dim());
    std::string witness;
    for (std::size_t c = 0; c < inv.dim() && witness.empty(); ++c) {
      Vector full(mt * mt * mt);
      for (std::size_t j = 0; j < m && witness.empty(); ++j) {
        for (std::size_t k = 0; k < m && witness.empty(); ++k) {
          Vector y(n * n);
          for_each_term(quad_lifts[c], dims4, [&](const auto& ix, const Scalar& cf) {
            const Vector u = a.mul(a.basis(ix[2]), gamma[j][ix[3]]);
            Vector gu(n);
            for (std::size_t l = 0; l < n; ++l)
              if (!u[l].is_zero()) axpy(gu, u[l], gamma[k][l]);
            axpy(y, cf, kron(a.basis(ix[0]), a.mul(a.basis(ix[1]), gu)));
          });
          auto yc = t_coords(T, y);
          if (!yc) {
            witness = col(c) + ": first factor not in T";
            break;
          }
          const SparseVector ys = sparse(*yc);
          add_pure_tensor(full, tdims3, Scalar(1), {&ys, &su[k], &su[j]});
        }
      }
      if (witness.empty()) out.set_column(c, three.project(full));
    }
    if (witness.empty() && out != w.phi3_inverse) {
      for (std::size_t c = 0; c < inv.dim(); ++c)
        if (out.column(c) != w.phi3_inverse.column(c)) {
          witness = col(c);
          break;
        }
    }
    w.report.property("T.phi3_inverse.right_formula", witness.empty(), witness);
    right_formula = std::move(out);
  }
  if (left_formula && right_formula) {
    w.report.property("T.phi3_inverse.formulas_agree", *left_formula == *right_formula);
  }

  // Both iterated coproducts map to t1 (x) 1 (x) 1 (x) t2.
  std::vector<SparseVector> delta_lifts;
  for (std::size_t p = 0; p < mt; ++p) delta_lifts.push_back(sparse(two.lift(tb.bg.coproduct.column(p))));
  const SparseVector one = sparse(a.unit());
  std::string witness;
  for (std::size_t p = 0; p < mt && witness.empty(); ++p) {
    Vector full(n * n * n * n);
    for_each_term(T.lifts[p], dims2, [&](const auto& ix, const Scalar& c) {
      add_pure_tensor(full, dims4, c, {&units[ix[0]], &one, &one, &units[ix[1]]});
    });
    const Vector expect = quad.project(full);
    const Vector dl = two.lift(tb.bg.coproduct.column(p));
    const Vector x = three.project(expand_slot(dl, tdims2, 0, delta_lifts, mt * mt));
    const Vector y = three.project(expand_slot(dl, tdims2, 1, delta_lifts, mt * mt));
    if (inv.element(w.phi3 * x) != expect || inv.element(w.phi3 * y) != expect)
      witness = "t=e" + std::to_string(p);
  }
  w.report.property("T.coassociativity_image", witness.empty(), witness);
  return w;
}

}  // namespace d2lab
