#include "d2lab/galois.hpp"

#include <functional>
#include <string>

namespace d2lab {

namespace {

std::string prefix_of(const char* head, Side side) {
  return std::string(head) + "." + std::string(to_string(side));
}

TensorFactor algebra_over_centralizer(const Extension& e) {
  TensorFactor f{e.dim(), {}, {}};
  for (std::size_t k = 0; k < e.centralizer.dim(); ++k) {
    f.left.push_back(e.ambient.left_mult(e.centralizer_element(k)));
    f.right.push_back(e.ambient.right_mult(e.centralizer_element(k)));
  }
  return f;
}

std::vector<Vector> lifts_of(const BalancedTensor& t, const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(t.lift(m.column(c)));
  return out;
}

std::vector<SparseVector> sparse_all(const std::vector<Vector>& vs) {
  std::vector<SparseVector> out;
  for (const auto& v : vs) out.push_back(sparse(v));
  return out;
}

// a (x) t -> a t1 (x) t2  (right)  or  t (x) a -> t1 (x) t2 a  (left), into A (x)_B A.
Matrix mu_matrix(const Depth2& d, const Coaction& c) {
  const Algebra& a = d.ext.ambient;
  const std::size_t n = a.dim();
  const std::size_t mt = d.T.dim();
  const std::size_t dims2[2] = {n, n};
  const BalancedTensor& sq = d.T.square;
  Matrix out(sq.dim(), c.two.dim());
  std::vector<SparseVector> units(n);
  for (std::size_t i = 0; i < n; ++i) units[i].emplace_back(i, Scalar(1));
  const std::vector<std::size_t> dims =
      c.side == Side::right ? std::vector<std::size_t>{n, mt} : std::vector<std::size_t>{mt, n};
  for (std::size_t k = 0; k < c.two.dim(); ++k) {
    Vector full(n * n);
    for_each_term(c.two.lift(unit_vector(c.two.dim(), k)), dims, [&](const auto& ix, const Scalar& cf) {
      const std::size_t x = c.side == Side::right ? ix[0] : ix[1];
      const std::size_t p = c.side == Side::right ? ix[1] : ix[0];
      for_each_term(d.T.lifts[p], dims2, [&](const auto& it, const Scalar& ct) {
        if (c.side == Side::right)
          add_pure_tensor(full, dims2, cf * ct, {&a.basis_product(x, it[0]), &units[it[1]]});
        else
          add_pure_tensor(full, dims2, cf * ct, {&units[it[0]], &a.basis_product(it[1], x)});
      });
    });
    out.set_column(k, sq.project(full));
  }
  return out;
}

}  // namespace

Coaction coaction_frame(const Extension& e, const Bialgebroid& bg, Side side) {
  const TensorFactor fa = algebra_over_centralizer(e);
  const TensorFactor fh = carrier_bimodule(bg);
  Coaction c;
  c.side = side;
  c.bialgebroid = bg;
  if (side == Side::right) {
    c.two = BalancedTensor({fa, fh});
    c.three = BalancedTensor({fa, fh, fh});
  } else {
    c.two = BalancedTensor({fh, fa});
    c.three = BalancedTensor({fh, fh, fa});
  }
  c.map = Matrix(c.two.dim(), e.dim());
  return c;
}

Coaction build_right_coaction(const Depth2& d, const TBialgebroid& tb) {
  if (!d.right) throw std::invalid_argument("right coaction needs a right certificate");
  Coaction c = coaction_frame(d.ext, tb.bg, Side::right);
  const Algebra& a = d.ext.ambient;
  for (std::size_t x = 0; x < a.dim(); ++x) {
    Vector full(a.dim() * d.T.dim());
    for (std::size_t j = 0; j < d.right->size(); ++j)
      full = full + kron(d.S.map(d.right->s[j]).column(x), d.right->t[j]);
    c.map.set_column(x, c.two.project(full));
  }
  return c;
}

Coaction build_left_coaction(const Depth2& d, const Bialgebroid& t_op) {
  if (!d.left) throw std::invalid_argument("left coaction needs a left certificate");
  Coaction c = coaction_frame(d.ext, t_op, Side::left);
  const Algebra& a = d.ext.ambient;
  for (std::size_t x = 0; x < a.dim(); ++x) {
    Vector full(a.dim() * d.T.dim());
    for (std::size_t i = 0; i < d.left->size(); ++i)
      full = full + kron(d.left->t[i], d.S.map(d.left->s[i]).column(x));
    c.map.set_column(x, c.two.project(full));
  }
  return c;
}

Subspace coinvariants(const Extension& e, const Coaction& c) {
  const Algebra& a = e.ambient;
  const Vector& one = c.bialgebroid.carrier.unit();
  Matrix m = c.map;
  for (std::size_t x = 0; x < a.dim(); ++x) {
    const Vector triv = c.side == Side::right ? kron(a.basis(x), one) : kron(one, a.basis(x));
    m.set_column(x, c.map.column(x) - c.two.project(triv));
  }
  return kernel_basis(m);
}

Report verify_comodule_algebra(const Depth2& d, const Coaction& c, const CarrierTensors& carrier) {
  const Extension& e = d.ext;
  const Algebra& a = e.ambient;
  const Bialgebroid& bg = c.bialgebroid;
  const Algebra& h = bg.carrier;
  const Algebra& r = bg.base;
  const std::size_t n = a.dim();
  const std::size_t mh = h.dim();
  const std::size_t nr = r.dim();
  const bool right = c.side == Side::right;
  const std::vector<std::size_t> dims =
      right ? std::vector<std::size_t>{n, mh} : std::vector<std::size_t>{mh, n};
  const std::string prefix = prefix_of("coaction", c.side);

  const std::vector<Vector> lifts = lifts_of(c.two, c.map);
  const std::vector<SparseVector> sparse_lifts = sparse_all(lifts);
  const std::vector<SparseVector> delta_lifts = sparse_all(lifts_of(carrier.two, bg.coproduct));

  Report rep;
  auto run = [&](const char* name, const std::function<std::string()>& check) {
    const std::string w = check();
    rep.property(prefix + "." + name, w.empty(), w);
  };
  auto ae = [](std::size_t x) { return "a=e" + std::to_string(x); };

  run("coassociativity", [&]() -> std::string {
    for (std::size_t x = 0; x < n; ++x) {
      Vector lhs, rhs;
      if (right) {
        lhs = expand_slot(lifts[x], dims, 0, sparse_lifts, n * mh);
        rhs = expand_slot(lifts[x], dims, 1, delta_lifts, mh * mh);
      } else {
        lhs = expand_slot(lifts[x], dims, 0, delta_lifts, mh * mh);
        rhs = expand_slot(lifts[x], dims, 1, sparse_lifts, mh * n);
      }
      if (c.three.project(lhs) != c.three.project(rhs)) return ae(x);
    }
    return {};
  });
  run("counit", [&]() -> std::string {
    for (std::size_t x = 0; x < n; ++x) {
      Vector out(n);
      for_each_term(lifts[x], dims, [&](const auto& ix, const Scalar& cf) {
        const std::size_t ai = right ? ix[0] : ix[1];
        const std::size_t hi = right ? ix[1] : ix[0];
        const Vector rv = e.centralizer.element(bg.counit.column(hi));
        axpy(out, cf, right ? a.mul(a.basis(ai), rv) : a.mul(rv, a.basis(ai)));
      });
      if (out != a.basis(x)) return ae(x);
    }
    return {};
  });
  run("unit", [&]() -> std::string {
    const Vector expect = c.two.project(right ? kron(a.unit(), h.unit()) : kron(h.unit(), a.unit()));
    if (c.map * a.unit() != expect) return "delta(1) != 1 (x) 1";
    return {};
  });
  bool exchange_ok = true;
  run("exchange", [&]() -> std::string {
    for (std::size_t k = 0; k < nr; ++k) {
      const Vector rv = e.centralizer_element(k);
      Matrix first, second;
      if (right) {
        first = a.left_mult(rv);
        second = h.left_mult(bg.target.column(k));
      } else {
        first = h.right_mult(bg.target.column(k));
        second = a.right_mult(rv);
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (c.two.project(apply_slot(lifts[x], dims, 0, first)) !=
            c.two.project(apply_slot(lifts[x], dims, 1, second))) {
          exchange_ok = false;
          return ae(x) + " r=e" + std::to_string(k);
        }
      }
    }
    return {};
  });
  if (!exchange_ok) {
    rep.skip(prefix + ".multiplicative", "coaction image fails the exchange identity");
  } else {
    const std::vector<const Algebra*> slots =
        right ? std::vector<const Algebra*>{&a, &h} : std::vector<const Algebra*>{&h, &a};
    run("multiplicative", [&]() -> std::string {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (c.map * a.mul(a.basis(x), a.basis(y)) !=
              c.two.project(slotwise_product(slots, lifts[x], lifts[y])))
            return ae(x) + " a'=e" + std::to_string(y);
      return {};
    });
  }
  run("r_linear", [&]() -> std::string {
    for (std::size_t k = 0; k < nr; ++k) {
      const Vector rv = e.centralizer_element(k);
      if (right && c.map * a.right_mult(rv) != c.two.right_action(k) * c.map) return "r=e" + std::to_string(k);
      if (!right && c.map * a.left_mult(rv) != c.two.left_action(k) * c.map) return "r=e" + std::to_string(k);
    }
    return {};
  });
  run("characterization", [&]() -> std::string {
    const Matrix mu = mu_matrix(d, c);
    for (std::size_t x = 0; x < n; ++x) {
      const Vector expect =
          d.T.square.project(right ? kron(a.unit(), a.basis(x)) : kron(a.basis(x), a.unit()));
      if (mu * c.map.column(x) != expect) return ae(x);
    }
    return {};
  });
  const Subspace co = coinvariants(e, c);
  run("coinvariants_subalgebra", [&]() -> std::string {
    if (!co.contains(a.unit())) return "1 not coinvariant";
    for (std::size_t p = 0; p < co.dim(); ++p)
      for (std::size_t q = 0; q < co.dim(); ++q)
        if (!co.contains(a.mul(co.basis_vector(p), co.basis_vector(q))))
          return "product of coinvariant basis " + std::to_string(p) + "," + std::to_string(q);
    return {};
  });
  run("coinvariants_commute_with_R", [&]() -> std::string {
    for (std::size_t p = 0; p < co.dim(); ++p)
      for (std::size_t k = 0; k < nr; ++k) {
        const Vector x = co.basis_vector(p);
        const Vector rv = e.centralizer_element(k);
        if (a.mul(x, rv) != a.mul(rv, x)) return "coinvariant " + std::to_string(p) + " r=e" + std::to_string(k);
      }
    return {};
  });
  return rep;
}

GaloisMap galois_map(const Depth2& d, const Coaction& c) {
  const Algebra& a = d.ext.ambient;
  const std::size_t n = a.dim();
  const std::size_t dims2[2] = {n, n};
  const BalancedTensor& sq = d.T.square;
  std::vector<Matrix> acted;  // a . delta(-) (right) or delta(-) . a (left), per basis a
  for (std::size_t i = 0; i < n; ++i) {
    if (c.side == Side::right) acted.push_back(c.two.induced(0, a.left_mult(a.basis(i))) * c.map);
    else acted.push_back(c.two.induced(1, a.right_mult(a.basis(i))) * c.map);
  }
  GaloisMap g;
  g.beta = Matrix(c.two.dim(), sq.dim());
  for (std::size_t x = 0; x < sq.dim(); ++x) {
    Vector v(c.two.dim());
    for_each_term(sq.lift(unit_vector(sq.dim(), x)), dims2, [&](const auto& ix, const Scalar& cf) {
      if (c.side == Side::right) axpy(v, cf, acted[ix[0]].column(ix[1]));
      else axpy(v, cf, acted[ix[1]].column(ix[0]));
    });
    g.beta.set_column(x, v);
  }
  g.formula_inverse = mu_matrix(d, c);
  if (g.beta.rows() == g.beta.cols()) g.inverse = inverse(g.beta);
  return g;
}

Report analyze_comodule_algebra(const Depth2& d, const Coaction& c, const Matrix& beta) {
  const Extension& e = d.ext;
  const Algebra& a = e.ambient;
  const BalancedTensor& sq = d.T.square;
  const std::string prefix = prefix_of("comodule", c.side);
  const std::size_t rk = rank(beta);
  const bool monic = rk == beta.cols();
  const bool epic = rk == beta.rows();

  // Bimodule maps psi: target of beta -> A (x)_B A.
  std::vector<std::pair<Matrix, Matrix>> actions;  // (on target, on A (x)_B A)
  if (c.side == Side::right) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      actions.emplace_back(c.two.induced(0, a.left_mult(a.basis(i))), d.T.left_mult[i]);
    for (std::size_t s = 0; s < e.sub.dim(); ++s)
      actions.emplace_back(c.two.induced(0, a.right_mult(e.sub_element(s))), sq.right_action(s));
  } else {
    for (std::size_t s = 0; s < e.sub.dim(); ++s)
      actions.emplace_back(c.two.induced(1, a.left_mult(e.sub_element(s))), sq.left_action(s));
    for (std::size_t i = 0; i < a.dim(); ++i)
      actions.emplace_back(c.two.induced(1, a.right_mult(a.basis(i))), d.T.right_mult[i]);
  }
  const std::size_t rows = sq.dim();
  const std::size_t cols = beta.rows();
  std::vector<LinearMap> fns;
  for (const auto& pr : actions) {
    fns.emplace_back([&pr, rows, cols](const Vector& v) {
      const Matrix psi = unvec(v, rows, cols);
      return vec(psi * pr.first - pr.second * psi);
    });
  }
  const Subspace homs = joint_kernel(rows * cols, fns);
  bool split = false;
  if (monic && homs.dim() > 0) {
    Matrix system(rows * beta.cols(), homs.dim());
    for (std::size_t k = 0; k < homs.dim(); ++k)
      system.set_column(k, vec(unvec(homs.basis_vector(k), rows, cols) * beta));
    split = solve(system, vec(Matrix::identity(beta.cols()))).has_value();
  }

  Report rep;
  rep.verdict(prefix + ".monic", monic).dims = {{"rank", rk}, {"source", beta.cols()}, {"target", beta.rows()}};
  rep.verdict(prefix + ".epic", epic);
  rep.verdict(prefix + ".split_monic", split).dims = {{"bimodule_maps", homs.dim()}};
  if (split) {
    const bool d2 = d.cert(c.side).has_value();
    const bool bal = check_balanced(e, c.side).balanced;
    rep.property(prefix + ".split_monic_conclusion", d2 && bal && epic,
                 d2 && bal && epic ? "" : "split monic without depth two, balance and bijectivity");
  } else {
    rep.skip(prefix + ".split_monic_conclusion", "beta is not split monic");
  }
  return rep;
}

BalancedResult check_balanced(const Extension& e, Side side) {
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  std::vector<Matrix> ring;
  for (std::size_t s = 0; s < e.sub.dim(); ++s)
    ring.push_back(side == Side::right ? a.right_mult(e.sub_element(s)) : a.left_mult(e.sub_element(s)));
  auto commuting = [n](const std::vector<Matrix>& with) {
    std::vector<LinearMap> fns;
    for (const auto& x : with) {
      fns.emplace_back([&x, n](const Vector& v) {
        const Matrix f = unvec(v, n, n);
        return vec(f * x - x * f);
      });
    }
    return joint_kernel(n * n, fns);
  };
  const Subspace endo = commuting(ring);
  std::vector<Matrix> endo_basis;
  for (std::size_t p = 0; p < endo.dim(); ++p) endo_basis.push_back(unvec(endo.basis_vector(p), n, n));
  const Subspace commutant = commuting(endo_basis);
  std::vector<Vector> ring_vecs;
  for (const auto& x : ring) ring_vecs.push_back(vec(x));
  const Subspace image = Subspace::span(n * n, ring_vecs);
  return BalancedResult{commutant == image, endo.dim(), commutant.dim()};
}

GaloisReport run_characterization(const Depth2& d, const TBialgebroid* tb, Side side) {
  const Extension& e = d.ext;
  GaloisReport g;
  g.side = side;
  const std::string prefix = prefix_of("galois", side);
  Report& rep = g.report;
  g.depth_two = d.cert(side).has_value();
  const BalancedResult bal = check_balanced(e, side);
  g.balanced = bal.balanced;
  rep.verdict(prefix + ".depth_two", g.depth_two);
  rep.verdict(prefix + ".balanced", g.balanced).dims = {{"endo", bal.endo_dim}, {"commutant", bal.commutant_dim}};

  const char* constructed_ids[] = {".beta_bijective", ".inverse_formula", ".coinvariants_equal_B", ".split_monic"};
  if (g.depth_two && tb) {
    g.constructed = true;
    const Coaction c = side == Side::right ? build_right_coaction(d, *tb)
                                           : build_left_coaction(d, to_opposite(tb->bg));
    rep.append(verify_comodule_algebra(d, c, tb->tensors));
    const GaloisMap gm = galois_map(d, c);
    const std::size_t rk = rank(gm.beta);
    g.injective = rk == gm.beta.cols();
    g.surjective = rk == gm.beta.rows();
    rep.verdict(prefix + ".beta_bijective", g.injective && g.surjective).dims = {
        {"A(x)_B A", gm.beta.cols()}, {"target", gm.beta.rows()}, {"rank", rk}};
    if (gm.inverse) {
      const bool ok = *gm.inverse == gm.formula_inverse &&
                      gm.beta * gm.formula_inverse == Matrix::identity(gm.beta.rows()) &&
                      gm.formula_inverse * gm.beta == Matrix::identity(gm.beta.cols());
      rep.property(prefix + ".inverse_formula", ok, ok ? "" : "inverse differs from the formula");
    } else {
      rep.skip(prefix + ".inverse_formula", "beta not invertible");
    }
    const Subspace co = coinvariants(e, c);
    g.coinvariants_dim = co.dim();
    g.coinvariants_equal_b = co == e.sub;
    rep.property(prefix + ".coinvariants_contain_B", co.contains(e.sub));
    rep.verdict(prefix + ".coinvariants_equal_B", g.coinvariants_equal_b).dims = {
        {"coinvariants", co.dim()}, {"B", e.sub.dim()}};
    const Report split = analyze_comodule_algebra(d, c, gm.beta);
    g.split_monic = split.passed(prefix_of("comodule", side) + ".split_monic");
    rep.append(split);
    rep.property(prefix + ".flags_consistent", !(g.injective && g.surjective) || g.split_monic);
  } else {
    for (const char* id : constructed_ids)
      rep.skip(prefix + id, "not depth two: no Galois structure constructed", CheckKind::verdict);
  }
  g.galois = g.constructed && g.injective && g.surjective && g.coinvariants_equal_b;
  rep.verdict(prefix + ".galois", g.galois);
  const bool agree = g.galois == (g.depth_two && g.balanced);
  rep.property(prefix + ".characterization", agree,
               agree ? "" : "Galois status disagrees with depth two and balance");
  rep.info(prefix + ".dims", true, "T and A (x)_B A are reported without asserting a relation")
      .dims = {{"T", d.T.dim()}, {"A(x)_B A", d.T.square.dim()}};
  return g;
}

Report endo_tower(const Depth2& d, const Limits& limits) {
  const Extension& e = d.ext;
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  if (n > limits.max_algebra_dim)
    throw DimensionGuard("dim A = " + std::to_string(n) + " exceeds the limit " +
                         std::to_string(limits.max_algebra_dim));
  std::vector<LinearMap> fns;
  std::vector<Matrix> lambdas;
  for (std::size_t s = 0; s < e.sub.dim(); ++s) lambdas.push_back(a.left_mult(e.sub_element(s)));
  for (const auto& x : lambdas) {
    fns.emplace_back([&x, n](const Vector& v) {
      const Matrix f = unvec(v, n, n);
      return vec(f * x - x * f);
    });
  }
  const Subspace endo = joint_kernel(n * n, fns);
  const std::size_t m = endo.dim();
  if (m > limits.max_endo_dim)
    throw DimensionGuard("dim End_B A = " + std::to_string(m) + " exceeds the limit " +
                         std::to_string(limits.max_endo_dim));
  std::vector<Matrix> maps;
  for (std::size_t p = 0; p < m; ++p) maps.push_back(unvec(endo.basis_vector(p), n, n));
  auto coords = [&](const Matrix& f) {
    auto c = endo.coordinates(vec(f));
    if (!c) throw InternalInconsistency("map expected in End_B A is not left B-linear");
    return *c;
  };
  std::vector<Scalar> constants(m * m * m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      const Vector prod = coords(maps[p] * maps[q]);
      for (std::size_t k = 0; k < m; ++k) constants[(p * m + q) * m + k] = prod[k];
    }
  const Algebra endo_alg(e.field(), m, std::move(constants), coords(Matrix::identity(n)));
  std::vector<Vector> rho;
  for (std::size_t i = 0; i < n; ++i) rho.push_back(coords(a.right_mult(a.basis(i))));
  const Depth2 tower = analyze_depth2(build_extension(endo_alg, rho));

  Report rep;
  const bool left_d2 = tower.left.has_value();
  rep.verdict("endo_tower.left_depth_two", left_d2).dims = {{"End_B A", m}, {"A^op", n}};
  if (left_d2) {
    const Report qb = verify_quasibases(tower.ext, tower.T, tower.S, *tower.left);
    for (const auto& rec : qb.records()) {
      CheckRecord copy = rec;
      copy.id = "endo_tower." + copy.id;
      rep.add(std::move(copy));
    }
  }
  const BalancedResult bal = check_balanced(tower.ext, Side::left);
  rep.verdict("endo_tower.left_balanced", bal.balanced).dims = {{"endo", bal.endo_dim},
                                                                {"commutant", bal.commutant_dim}};
  if (d.left && d.right) {
    const bool ok = left_d2 && bal.balanced;
    rep.property("endo_tower.conclusion", ok, ok ? "" : "End_B A | A^op is not left D2 and left balanced");
  } else {
    rep.skip("endo_tower.conclusion", "A|B is not depth two on both sides");
  }
  rep.info("endo_tower.right_depth_two", tower.right.has_value());
  rep.info("endo_tower.conjecture_probe", !d.right || left_d2,
           "experimental: right depth two of A|B against left depth two of End_B A | A^op");
  return rep;
}

}  // namespace d2lab
