#include "d2lab/bialgebroid.hpp"

#include <functional>
#include <string>

namespace d2lab {

Vector slotwise_product(const std::vector<const Algebra*>& slots, const Vector& x, const Vector& y) {
  std::vector<std::size_t> dims;
  std::size_t total = 1;
  for (const Algebra* a : slots) {
    dims.push_back(a->dim());
    total *= a->dim();
  }
  if (x.size() != total || y.size() != total) throw DimensionMismatch("slotwise product operand");
  Vector out(total);
  std::vector<const SparseVector*> factors(slots.size());
  for_each_term(x, dims, [&](const auto& ix, const Scalar& cx) {
    for_each_term(y, dims, [&](const auto& iy, const Scalar& cy) {
      for (std::size_t s = 0; s < slots.size(); ++s)
        factors[s] = &slots[s]->basis_product(ix[s], iy[s]);
      add_pure_tensor(out, dims, cx * cy, factors);
    });
  });
  return out;
}

TensorFactor carrier_bimodule(const Bialgebroid& bg) {
  const Algebra& h = bg.carrier;
  TensorFactor f{h.dim(), {}, {}};
  for (std::size_t r = 0; r < bg.base.dim(); ++r) {
    const Vector s = bg.source.column(r);
    const Vector t = bg.target.column(r);
    if (bg.side == Side::right) {
      f.left.push_back(h.right_mult(t));
      f.right.push_back(h.right_mult(s));
    } else {
      f.left.push_back(h.left_mult(s));
      f.right.push_back(h.left_mult(t));
    }
  }
  return f;
}

CarrierTensors build_carrier_tensors(const Bialgebroid& bg) {
  const TensorFactor f = carrier_bimodule(bg);
  return CarrierTensors{BalancedTensor({f, f}), BalancedTensor({f, f, f})};
}

namespace {

std::string idx(const char* name, std::size_t i) { return std::string(name) + "=e" + std::to_string(i); }

std::string idx2(const char* a, std::size_t i, const char* b, std::size_t j) {
  return idx(a, i) + " " + idx(b, j);
}

Vector act(const std::vector<Matrix>& actions, const Vector& r, const Vector& x) {
  Vector out(x.size());
  for (std::size_t k = 0; k < r.size(); ++k)
    if (!r[k].is_zero()) axpy(out, r[k], actions[k] * x);
  return out;
}

}  // namespace

Report verify_axioms(const Bialgebroid& bg, const CarrierTensors& tensors, std::string_view prefix) {
  const Algebra& h = bg.carrier;
  const Algebra& r = bg.base;
  const std::size_t nh = h.dim();
  const std::size_t nr = r.dim();
  const TensorFactor f = carrier_bimodule(bg);
  const BalancedTensor& two = tensors.two;
  const BalancedTensor& three = tensors.three;
  const std::size_t dims2[2] = {nh, nh};
  const std::vector<const Algebra*> pair{&h, &h};

  Report rep;
  auto run = [&](const char* name, const std::function<std::string()>& check) {
    const std::string w = check();
    rep.property(std::string(prefix) + "." + name, w.empty(), w);
  };
  auto s_of = [&](const Vector& x) { return bg.source * x; };
  auto t_of = [&](const Vector& x) { return bg.target * x; };

  if (bg.coproduct.rows() != two.dim() || bg.coproduct.cols() != nh || bg.counit.rows() != nr ||
      bg.counit.cols() != nh)
    throw DimensionMismatch("bialgebroid structure maps have the wrong shape");

  std::vector<Vector> lifts;
  std::vector<SparseVector> sparse_lifts;
  for (std::size_t i = 0; i < nh; ++i) {
    lifts.push_back(two.lift(bg.coproduct.column(i)));
    sparse_lifts.push_back(sparse(lifts.back()));
  }

  run("source_multiplicative", [&]() -> std::string {
    if (s_of(r.unit()) != h.unit()) return "s(1) != 1";
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nr; ++j)
        if (s_of(r.mul(r.basis(i), r.basis(j))) != h.mul(s_of(r.basis(i)), s_of(r.basis(j))))
          return idx2("r", i, "r'", j);
    return {};
  });
  run("target_anti_multiplicative", [&]() -> std::string {
    if (t_of(r.unit()) != h.unit()) return "t(1) != 1";
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nr; ++j)
        if (t_of(r.mul(r.basis(i), r.basis(j))) != h.mul(t_of(r.basis(j)), t_of(r.basis(i))))
          return idx2("r", i, "r'", j);
    return {};
  });
  run("source_target_commute", [&]() -> std::string {
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nr; ++j)
        if (h.mul(s_of(r.basis(i)), t_of(r.basis(j))) != h.mul(t_of(r.basis(j)), s_of(r.basis(i))))
          return idx2("r", i, "r'", j);
    return {};
  });
  run("coproduct_bimodule", [&]() -> std::string {
    for (std::size_t i = 0; i < nr; ++i) {
      if (bg.coproduct * f.left[i] != two.left_action(i) * bg.coproduct) return idx("left r", i);
      if (bg.coproduct * f.right[i] != two.right_action(i) * bg.coproduct) return idx("right r", i);
    }
    return {};
  });
  run("counit_bimodule", [&]() -> std::string {
    for (std::size_t i = 0; i < nr; ++i) {
      if (bg.counit * f.left[i] != r.left_mult(r.basis(i)) * bg.counit) return idx("left r", i);
      if (bg.counit * f.right[i] != r.right_mult(r.basis(i)) * bg.counit) return idx("right r", i);
    }
    return {};
  });
  run("coassociativity", [&]() -> std::string {
    for (std::size_t i = 0; i < nh; ++i) {
      const Vector a = three.project(expand_slot(lifts[i], dims2, 0, sparse_lifts, nh * nh));
      const Vector b = three.project(expand_slot(lifts[i], dims2, 1, sparse_lifts, nh * nh));
      if (a != b) return idx("h", i);
    }
    return {};
  });
  run("counit_left", [&]() -> std::string {
    for (std::size_t i = 0; i < nh; ++i) {
      Vector out(nh);
      for_each_term(lifts[i], dims2, [&](const auto& ix, const Scalar& c) {
        axpy(out, c, act(f.left, bg.counit.column(ix[0]), h.basis(ix[1])));
      });
      if (out != h.basis(i)) return idx("h", i);
    }
    return {};
  });
  run("counit_right", [&]() -> std::string {
    for (std::size_t i = 0; i < nh; ++i) {
      Vector out(nh);
      for_each_term(lifts[i], dims2, [&](const auto& ix, const Scalar& c) {
        axpy(out, c, act(f.right, bg.counit.column(ix[1]), h.basis(ix[0])));
      });
      if (out != h.basis(i)) return idx("h", i);
    }
    return {};
  });
  run("coproduct_unital", [&]() -> std::string {
    if (bg.coproduct * h.unit() != two.project(kron(h.unit(), h.unit()))) return "Delta(1) != 1 (x) 1";
    return {};
  });
  run("counit_unital", [&]() -> std::string {
    if (bg.counit * h.unit() != r.unit()) return "eps(1) != 1";
    return {};
  });
  run("counit_product", [&]() -> std::string {
    for (std::size_t i = 0; i < nh; ++i) {
      for (std::size_t j = 0; j < nh; ++j) {
        const Vector x = h.basis(i);
        const Vector y = h.basis(j);
        const Vector lhs = bg.counit * h.mul(x, y);
        Vector via_s, via_t;
        if (bg.side == Side::right) {
          const Vector ex = bg.counit * x;
          via_s = bg.counit * h.mul(s_of(ex), y);
          via_t = bg.counit * h.mul(t_of(ex), y);
        } else {
          const Vector ey = bg.counit * y;
          via_s = bg.counit * h.mul(x, s_of(ey));
          via_t = bg.counit * h.mul(x, t_of(ey));
        }
        if (lhs != via_s || lhs != via_t) return idx2("h", i, "h'", j);
      }
    }
    return {};
  });

  bool takeuchi_ok = true;
  run("takeuchi", [&]() -> std::string {
    for (std::size_t k = 0; k < nr; ++k) {
      Matrix first, second;
      if (bg.side == Side::right) {
        first = h.left_mult(s_of(r.basis(k)));
        second = h.left_mult(t_of(r.basis(k)));
      } else {
        first = h.right_mult(t_of(r.basis(k)));
        second = h.right_mult(s_of(r.basis(k)));
      }
      for (std::size_t i = 0; i < nh; ++i) {
        if (two.project(apply_slot(lifts[i], dims2, 0, first)) !=
            two.project(apply_slot(lifts[i], dims2, 1, second))) {
          takeuchi_ok = false;
          return idx2("h", i, "r", k);
        }
      }
    }
    return {};
  });
  const std::string mult_id = std::string(prefix) + ".coproduct_multiplicative";
  if (!takeuchi_ok) {
    rep.skip(mult_id, "coproduct image not in the Takeuchi product");
  } else {
    run("coproduct_multiplicative", [&]() -> std::string {
      for (std::size_t i = 0; i < nh; ++i)
        for (std::size_t j = 0; j < nh; ++j)
          if (bg.coproduct * h.mul(h.basis(i), h.basis(j)) !=
              two.project(slotwise_product(pair, lifts[i], lifts[j])))
            return idx2("h", i, "h'", j);
      return {};
    });
  }
  return rep;
}

Bialgebroid to_opposite(const Bialgebroid& bg) {
  Bialgebroid out;
  out.side = bg.side == Side::right ? Side::left : Side::right;
  out.carrier = opposite(bg.carrier);
  out.base = bg.base;
  out.source = bg.target;
  out.target = bg.source;
  out.coproduct = bg.coproduct;
  out.counit = bg.counit;
  return out;
}

}  // namespace d2lab
