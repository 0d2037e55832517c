#include "d2lab/depth2.hpp"

#include <string>

namespace d2lab {

std::string_view to_string(Side s) { return s == Side::left ? "left" : "right"; }

BalancedTensor build_tensor_power(const Extension& e, std::size_t arity) {
  if (arity < 1 || arity > 4)
    throw std::invalid_argument("tensor powers are supported for arity 1..4, got " +
                                std::to_string(arity));
  TensorFactor a{e.dim(), {}, {}};
  for (std::size_t i = 0; i < e.sub.dim(); ++i) {
    a.left.push_back(e.ambient.left_mult(e.sub_element(i)));
    a.right.push_back(e.ambient.right_mult(e.sub_element(i)));
  }
  return BalancedTensor(std::vector<TensorFactor>(arity, a));
}

std::vector<Matrix> outer_left_actions(const Extension& e, const BalancedTensor& power) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < e.dim(); ++i)
    out.push_back(power.induced(0, e.ambient.left_mult(e.ambient.basis(i))));
  return out;
}

std::vector<Matrix> outer_right_actions(const Extension& e, const BalancedTensor& power) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < e.dim(); ++i)
    out.push_back(power.induced(power.arity() - 1, e.ambient.right_mult(e.ambient.basis(i))));
  return out;
}

Subspace b_invariants(const Extension& e, const BalancedTensor& power) {
  std::vector<Matrix> maps;
  for (std::size_t s = 0; s < e.sub.dim(); ++s)
    maps.push_back(power.left_action(s) - power.right_action(s));
  return joint_kernel(power.dim(), maps);
}

// ------------------------------------------------------------------ T

Vector TSpace::coords(const Vector& x) const {
  auto c = space.coordinates(x);
  if (!c) throw InternalInconsistency("element of A (x)_B A expected in T is not B-central");
  return *c;
}

Vector TSpace::act_right(const Vector& x, const Vector& a) const {
  Vector out(square.dim());
  for (std::size_t l = 0; l < a.size(); ++l)
    if (!a[l].is_zero()) axpy(out, a[l], right_mult[l] * x);
  return out;
}

Vector TSpace::act_left(const Vector& a, const Vector& x) const {
  Vector out(square.dim());
  for (std::size_t l = 0; l < a.size(); ++l)
    if (!a[l].is_zero()) axpy(out, a[l], left_mult[l] * x);
  return out;
}

TSpace compute_T(const Extension& e) {
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  TSpace t;
  t.square = build_tensor_power(e, 2);
  t.left_mult = outer_left_actions(e, t.square);
  t.right_mult = outer_right_actions(e, t.square);
  t.space = b_invariants(e, t.square);
  const std::size_t m = t.space.dim();
  for (std::size_t p = 0; p < m; ++p) t.lifts.push_back(t.square.lift(t.space.basis_vector(p)));

  const std::size_t dims[2] = {n, n};
  std::vector<Scalar> c(m * m * m);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      // t_p t_q = t_q^1 t_p^1 (x) t_p^2 t_q^2
      Vector full(n * n);
      for_each_term(t.lifts[p], dims, [&](const auto& ip, const Scalar& cp) {
        for_each_term(t.lifts[q], dims, [&](const auto& iq, const Scalar& cq) {
          add_pure_tensor(full, dims, cp * cq,
                          {&a.basis_product(iq[0], ip[0]), &a.basis_product(ip[1], iq[1])});
        });
      });
      const Vector prod = t.coords(t.square.project(full));
      for (std::size_t k = 0; k < m; ++k) c[(p * m + q) * m + k] = prod[k];
    }
  }
  const Vector unit = t.coords(t.square.project(kron(a.unit(), a.unit())));
  t.algebra = Algebra(e.field(), m, std::move(c), unit);

  const std::size_t r = e.centralizer.dim();
  t.source = Matrix(m, r);
  t.target = Matrix(m, r);
  for (std::size_t i = 0; i < r; ++i) {
    const Vector rv = e.centralizer_element(i);
    t.source.set_column(i, t.coords(t.square.project(kron(a.unit(), rv))));
    t.target.set_column(i, t.coords(t.square.project(kron(rv, a.unit()))));
  }
  return t;
}

// ------------------------------------------------------------------ S

Matrix SSpace::map(const Vector& coords) const {
  const std::size_t n = maps.empty() ? 0 : maps.front().rows();
  return unvec(space.element(coords), n, n);
}

Vector SSpace::coords(const Matrix& m) const {
  auto c = space.coordinates(vec(m));
  if (!c) throw InternalInconsistency("map expected in End_B A_B is not B-bilinear");
  return *c;
}

SSpace compute_S(const Extension& e) {
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  std::vector<Matrix> constraints;
  for (std::size_t i = 0; i < e.sub.dim(); ++i) {
    constraints.push_back(a.left_mult(e.sub_element(i)));
    constraints.push_back(a.right_mult(e.sub_element(i)));
  }
  std::vector<LinearMap> fns;
  for (const auto& x : constraints) {
    fns.emplace_back([&x, n](const Vector& v) {
      const Matrix f = unvec(v, n, n);
      return vec(f * x - x * f);
    });
  }
  SSpace s;
  s.space = joint_kernel(n * n, fns);
  const std::size_t m = s.space.dim();
  for (std::size_t p = 0; p < m; ++p) s.maps.push_back(unvec(s.space.basis_vector(p), n, n));

  std::vector<Scalar> c(m * m * m);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      const Vector prod = s.coords(s.maps[p] * s.maps[q]);
      for (std::size_t k = 0; k < m; ++k) c[(p * m + q) * m + k] = prod[k];
    }
  }
  s.algebra = Algebra(e.field(), m, std::move(c), s.coords(Matrix::identity(n)));

  const std::size_t r = e.centralizer.dim();
  s.source = Matrix(m, r);
  s.target = Matrix(m, r);
  for (std::size_t i = 0; i < r; ++i) {
    s.source.set_column(i, s.coords(a.left_mult(e.centralizer_element(i))));
    s.target.set_column(i, s.coords(a.right_mult(e.centralizer_element(i))));
  }
  return s;
}

// ------------------------------------------------------------ quasibases

std::optional<QuasibaseCertificate> find_quasibases(const Extension& e, const TSpace& t,
                                                    const SSpace& s, Side side) {
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  const std::size_t d2 = t.square.dim();
  const std::size_t mt = t.dim();
  const std::size_t ms = s.dim();

  // acted[p][l] = t_p . e_l (left side) or e_l . t_p (right side)
  std::vector<std::vector<Vector>> acted(mt);
  for (std::size_t p = 0; p < mt; ++p) {
    const Vector tp = t.space.basis_vector(p);
    for (std::size_t l = 0; l < n; ++l)
      acted[p].push_back(side == Side::left ? t.right_mult[l] * tp : t.left_mult[l] * tp);
  }

  Matrix system(n * d2, mt * ms);
  Vector rhs(n * d2);
  for (std::size_t k = 0; k < n; ++k) {
    const Vector target = side == Side::left ? kron(a.basis(k), a.unit()) : kron(a.unit(), a.basis(k));
    const Vector proj = t.square.project(target);
    for (std::size_t x = 0; x < d2; ++x) rhs[k * d2 + x] = proj[x];
    for (std::size_t p = 0; p < mt; ++p) {
      for (std::size_t q = 0; q < ms; ++q) {
        Vector block(d2);
        for (std::size_t l = 0; l < n; ++l) axpy(block, s.maps[q](l, k), acted[p][l]);
        for (std::size_t x = 0; x < d2; ++x) system(k * d2 + x, p * ms + q) = block[x];
      }
    }
  }
  auto sol = solve(system, rhs);
  if (!sol) return std::nullopt;

  // Rank factorization X = C D with D the echelon form of the rows of X.
  std::vector<Vector> rows(mt, Vector(ms));
  for (std::size_t p = 0; p < mt; ++p)
    for (std::size_t q = 0; q < ms; ++q) rows[p][q] = (*sol)[p * ms + q];
  const Subspace d = Subspace::span(ms, rows);
  QuasibaseCertificate cert;
  cert.side = side;
  for (std::size_t k = 0; k < d.dim(); ++k) {
    Vector tk(mt);
    for (std::size_t p = 0; p < mt; ++p) tk[p] = rows[p][d.pivots()[k]];
    cert.t.push_back(std::move(tk));
    cert.s.push_back(d.basis_vector(k));
  }
  return cert;
}

Report verify_quasibases(const Extension& e, const TSpace& t, const SSpace& s,
                         const QuasibaseCertificate& cert) {
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  const std::string id = std::string("quasibase.") + std::string(to_string(cert.side)) + ".identity";
  std::vector<Vector> elems;
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < cert.size(); ++i) {
    elems.push_back(t.element(cert.t[i]));
    maps.push_back(s.map(cert.s[i]));
  }
  Report rep;
  std::string witness;
  for (std::size_t x = 0; x < n && witness.empty(); ++x) {
    for (std::size_t y = 0; y < n && witness.empty(); ++y) {
      const Vector expect = t.square.project(kron(a.basis(x), a.basis(y)));
      Vector got(t.square.dim());
      for (std::size_t i = 0; i < cert.size(); ++i) {
        if (cert.side == Side::left) {
          const Vector coef = a.mul(maps[i] * a.basis(x), a.basis(y));
          got = got + t.act_right(elems[i], coef);
        } else {
          const Vector coef = a.mul(a.basis(x), maps[i] * a.basis(y));
          got = got + t.act_left(coef, elems[i]);
        }
      }
      if (got != expect) witness = "a=e" + std::to_string(x) + " a'=e" + std::to_string(y);
    }
  }
  auto& rec = rep.property(id, witness.empty(), witness);
  rec.dims = {{"pairs", cert.size()}};
  return rep;
}

Depth2 analyze_depth2(Extension e) {
  TSpace t = compute_T(e);
  SSpace s = compute_S(e);
  auto left = find_quasibases(e, t, s, Side::left);
  auto right = find_quasibases(e, t, s, Side::right);
  return Depth2{std::move(e), std::move(t), std::move(s), std::move(left), std::move(right)};
}

}  // namespace d2lab
