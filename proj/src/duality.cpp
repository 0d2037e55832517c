#include "d2lab/duality.hpp"

#include <functional>
#include <string>

namespace d2lab {

Vector Pairing::operator()(const Vector& t, const Vector& alpha) const {
  Vector out(values.empty() ? 0 : values.front().size());
  for (std::size_t p = 0; p < t_dim; ++p) {
    if (t[p].is_zero()) continue;
    for (std::size_t q = 0; q < s_dim; ++q) {
      if (alpha[q].is_zero()) continue;
      axpy(out, t[p] * alpha[q], at(p, q));
    }
  }
  return out;
}

Pairing build_pairing(const Depth2& d, Side side) {
  const Extension& e = d.ext;
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  const std::size_t dims2[2] = {n, n};
  Pairing p;
  p.side = side;
  p.t_dim = d.T.dim();
  p.s_dim = d.S.dim();
  for (std::size_t t = 0; t < p.t_dim; ++t) {
    for (std::size_t q = 0; q < p.s_dim; ++q) {
      const Matrix& alpha = d.S.maps[q];
      Vector v(n);
      for_each_term(d.T.lifts[t], dims2, [&](const auto& ix, const Scalar& c) {
        if (side == Side::right) axpy(v, c, a.mul(a.basis(ix[0]), alpha.column(ix[1])));
        else axpy(v, c, a.mul(alpha.column(ix[0]), a.basis(ix[1])));
      });
      p.values.push_back(e.centralizer_coords(v));
    }
  }
  return p;
}

EtaMap build_eta(const Depth2& d, const Pairing& p) {
  const Algebra& r = d.ext.centralizer_algebra;
  const Algebra& s = d.S.algebra;
  const Algebra& t = d.T.algebra;
  const std::size_t nr = r.dim();
  const std::size_t ms = s.dim();
  const std::size_t mt = t.dim();
  std::vector<std::pair<Matrix, Matrix>> actions;  // (on S, on R)
  for (std::size_t k = 0; k < nr; ++k) {
    if (p.side == Side::right)
      actions.emplace_back(s.left_mult(d.S.target.column(k)), r.right_mult(r.basis(k)));
    else
      actions.emplace_back(s.left_mult(d.S.source.column(k)), r.left_mult(r.basis(k)));
  }
  std::vector<LinearMap> fns;
  for (const auto& pr : actions) {
    fns.emplace_back([&pr, nr, ms](const Vector& v) {
      const Matrix phi = unvec(v, nr, ms);
      return vec(phi * pr.first - pr.second * phi);
    });
  }
  EtaMap eta;
  eta.side = p.side;
  eta.hom = joint_kernel(nr * ms, fns);
  eta.eta = Matrix(eta.hom.dim(), mt);
  for (std::size_t q = 0; q < mt; ++q) {
    Matrix phi(nr, ms);
    for (std::size_t c = 0; c < ms; ++c) phi.set_column(c, p.at(q, c));
    auto coords = eta.hom.coordinates(vec(phi));
    if (!coords) throw InternalInconsistency("pairing with a basis element of T is not R-linear");
    eta.eta.set_column(q, *coords);
  }
  if (p.side == Side::right && d.right) {
    Matrix inv(mt, eta.hom.dim());
    for (std::size_t c = 0; c < eta.hom.dim(); ++c) {
      const Matrix phi = unvec(eta.hom.basis_vector(c), nr, ms);
      Vector sum(mt);
      for (std::size_t j = 0; j < d.right->size(); ++j)
        sum = sum + t.mul(d.right->t[j], d.T.target * (phi * d.right->s[j]));
      inv.set_column(c, sum);
    }
    eta.formula_inverse = std::move(inv);
  }
  return eta;
}

Report verify_duality(const Depth2& d, const TBialgebroid& tb, const SBialgebroid& sb, Side side) {
  const std::string prefix = std::string("duality.") + std::string(to_string(side));
  const bool right = side == Side::right;
  const char* mirrored = "mirrored identity, derived by the implementer";
  Report rep;
  auto record = [&](const std::string& name, bool ok, std::string witness) -> CheckRecord& {
    CheckRecord& rec = rep.property(prefix + "." + name, ok, std::move(witness));
    if (!right) rec.note = mirrored;
    return rec;
  };

  Pairing p;
  try {
    p = build_pairing(d, side);
  } catch (const InternalInconsistency& ex) {
    record("values_in_R", false, ex.what());
    return rep;
  }
  record("values_in_R", true, "");

  const Algebra& ta = d.T.algebra;
  const Algebra& sa = d.S.algebra;
  const Algebra& ra = d.ext.centralizer_algebra;
  const std::size_t mt = ta.dim();
  const std::size_t ms = sa.dim();
  const std::size_t nr = ra.dim();
  auto s_r = [&](const Vector& r) { return d.T.source * r; };
  auto t_r = [&](const Vector& r) { return d.T.target * r; };
  auto lam = [&](const Vector& r) { return d.S.source * r; };
  auto rho = [&](const Vector& r) { return d.S.target * r; };
  // <t|alpha> on the right side, [alpha|t] on the left; always called as P(t, alpha).
  auto P = [&](const Vector& t, const Vector& alpha) { return p(t, alpha); };
  auto te = [&](std::size_t i) { return ta.basis(i); };
  auto se = [&](std::size_t i) { return sa.basis(i); };
  auto w3 = [](const char* a, std::size_t i, const char* b, std::size_t j, const char* c, std::size_t k) {
    return std::string(a) + "=e" + std::to_string(i) + " " + b + "=e" + std::to_string(j) + " " + c +
           "=e" + std::to_string(k);
  };

  try {
    const EtaMap eta = build_eta(d, p);
    record("eta_in_hom", true, "");
    const bool square = eta.eta.rows() == eta.eta.cols();
    const bool bij = square && rank(eta.eta) == mt;
    record("eta_bijective", bij, bij ? "" : "eta is not bijective")
        .dims = {{"T", mt}, {"hom", eta.hom.dim()}};
    if (eta.formula_inverse) {
      const Matrix& f = *eta.formula_inverse;
      const bool ok = square && eta.eta * f == Matrix::identity(eta.eta.rows()) &&
                      f * eta.eta == Matrix::identity(mt);
      record("eta_inverse_formula", ok, ok ? "" : "composite with the formula is not the identity");
    } else if (right) {
      rep.skip(prefix + ".eta_inverse_formula", "no right certificate");
    }
  } catch (const InternalInconsistency& ex) {
    record("eta_in_hom", false, ex.what());
  }

  {
    std::string w;
    for (std::size_t q = 0; q < ms && w.empty(); ++q)
      if (P(ta.unit(), se(q)) != sb.bg.counit.column(q)) w = "alpha=e" + std::to_string(q);
    for (std::size_t t = 0; t < mt && w.empty(); ++t)
      if (P(te(t), sa.unit()) != tb.bg.counit.column(t)) w = "t=e" + std::to_string(t);
    record("unit_counit", w.empty(), w);
  }

  {
    std::string w;
    for (std::size_t k = 0; k < nr && w.empty(); ++k) {
      const Vector r = ra.basis(k);
      for (std::size_t t = 0; t < mt && w.empty(); ++t) {
        for (std::size_t q = 0; q < ms && w.empty(); ++q) {
          const Vector x = te(t);
          const Vector al = se(q);
          const Vector v = P(x, al);
          bool ok;
          if (right) {
            ok = P(ta.mul(x, t_r(r)), al) == ra.mul(r, v) && P(x, sa.mul(rho(r), al)) == ra.mul(v, r) &&
                 P(ta.mul(x, s_r(r)), al) == P(x, sa.mul(al, rho(r))) &&
                 P(ta.mul(t_r(r), x), al) == P(x, sa.mul(lam(r), al)) &&
                 P(ta.mul(s_r(r), x), al) == P(x, sa.mul(al, lam(r)));
          } else {
            ok = P(x, sa.mul(lam(r), al)) == ra.mul(r, v) && P(ta.mul(x, s_r(r)), al) == ra.mul(v, r) &&
                 P(ta.mul(x, t_r(r)), al) == P(x, sa.mul(al, lam(r))) &&
                 P(x, sa.mul(rho(r), al)) == P(ta.mul(s_r(r), x), al) &&
                 P(x, sa.mul(al, rho(r))) == P(ta.mul(t_r(r), x), al);
          }
          if (!ok) w = w3("r", k, "t", t, "alpha", q);
        }
      }
    }
    record("bimodule_compatible", w.empty(), w);
  }

  const std::size_t tdims[2] = {mt, mt};
  const std::size_t sdims[2] = {ms, ms};
  {
    std::string w;
    for (std::size_t t = 0; t < mt && w.empty(); ++t) {
      const Vector dl = tb.tensors.two.lift(tb.bg.coproduct.column(t));
      for (std::size_t q = 0; q < ms && w.empty(); ++q) {
        for (std::size_t q2 = 0; q2 < ms && w.empty(); ++q2) {
          Vector lhs(nr);
          Vector expect;
          if (right) {
            // sum <t_(1) . <t_(2)|alpha'> | alpha> = <t | alpha alpha'>
            for_each_term(dl, tdims, [&](const auto& ix, const Scalar& c) {
              axpy(lhs, c, P(ta.mul(te(ix[0]), s_r(P(te(ix[1]), se(q2)))), se(q)));
            });
            expect = P(te(t), sa.mul(se(q), se(q2)));
          } else {
            // sum [alpha' | [alpha|t_(1)] . t_(2)] = [alpha' alpha | t]
            for_each_term(dl, tdims, [&](const auto& ix, const Scalar& c) {
              axpy(lhs, c, P(ta.mul(te(ix[1]), t_r(P(te(ix[0]), se(q)))), se(q2)));
            });
            expect = P(te(t), sa.mul(se(q2), se(q)));
          }
          if (lhs != expect) w = w3("t", t, "alpha", q, "alpha'", q2);
        }
      }
    }
    record("comultiplicative", w.empty(), w);
  }
  {
    std::string w;
    for (std::size_t q = 0; q < ms && w.empty(); ++q) {
      const Vector dl = sb.tensors.two.lift(sb.bg.coproduct.column(q));
      for (std::size_t t = 0; t < mt && w.empty(); ++t) {
        for (std::size_t t2 = 0; t2 < mt && w.empty(); ++t2) {
          const Vector lhs = P(ta.mul(te(t), te(t2)), se(q));
          Vector rhs(nr);
          for_each_term(dl, sdims, [&](const auto& ix, const Scalar& c) {
            if (right) axpy(rhs, c, P(te(t2), sa.mul(lam(P(te(t), se(ix[0]))), se(ix[1]))));
            else axpy(rhs, c, P(te(t2), sa.mul(rho(P(te(t), se(ix[1]))), se(ix[0]))));
          });
          if (lhs != rhs) w = w3("t", t, "t'", t2, "alpha", q);
        }
      }
    }
    record("product_coproduct", w.empty(), w);
  }
  return rep;
}

}  // namespace d2lab
