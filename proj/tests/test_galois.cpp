#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "d2lab/galois.hpp"
#include "support.hpp"

using namespace d2lab;

namespace {

// End A_B (right) or End _B A (left) inside n x n matrices, then its
// commutant; balanced iff the commutant has the dimension of B and
// contains every rho(b) (right) or lambda(b) (left).
bool balanced_oracle(const Extension& e, Side side) {
  const Algebra& a = e.ambient;
  const std::size_t n = a.dim();
  std::vector<Matrix> acts;
  for (const Vector& b : e.sub.basis()) acts.push_back(side == Side::right ? a.right_mult(b) : a.left_mult(b));
  auto commutant = [n](const std::vector<Matrix>& ms) {
    std::vector<LinearMap> maps;
    for (const Matrix& m : ms)
      maps.push_back([m, n](const Vector& v) {
        const Matrix f = unvec(v, n, n);
        return vec(f * m - m * f);
      });
    return joint_kernel(n * n, maps);
  };
  const Subspace endo = commutant(acts);
  std::vector<Matrix> endo_maps;
  for (const Vector& v : endo.basis()) endo_maps.push_back(unvec(v, n, n));
  const Subspace bicommutant = commutant(endo_maps);
  if (bicommutant.dim() != e.sub.dim()) return false;
  for (const Matrix& m : acts)
    if (!bicommutant.contains(vec(m))) return false;
  return true;
}

}  // namespace

TEST_CASE("characterization: both sides agree on every corpus instance") {
  for (const std::string name : support::kCorpus) {
    const Depth2 d = analyze_depth2(support::load(name));
    std::optional<TBialgebroid> tb;
    if (d.left || d.right) tb = build_T_bialgebroid(d);
    for (Side side : {Side::left, Side::right}) {
      CAPTURE(name);
      CAPTURE(to_string(side));
      const GaloisReport g = run_characterization(d, tb ? &*tb : nullptr, side);
      CHECK(g.report.consistent());
      const std::string p = "galois." + std::string(to_string(side));
      CHECK(g.report.passed(p + ".characterization"));
      CHECK(g.depth_two == support::expected_d2(name));
      CHECK(g.galois == (g.depth_two && g.balanced));
      CHECK(g.balanced == balanced_oracle(d.ext, side));
      if (g.depth_two) {
        CHECK(g.injective);
        CHECK(g.surjective);
        CHECK(g.coinvariants_equal_b);
        CHECK(g.coinvariants_dim == d.ext.sub.dim());
        CHECK(g.report.passed(p + ".inverse_formula"));
      }
    }
  }
}

TEST_CASE("s3 over c2 is balanced but not depth two, hence not Galois") {
  const Depth2 d = analyze_depth2(support::load("s3_over_c2"));
  for (Side side : {Side::left, Side::right}) {
    const GaloisReport g = run_characterization(d, nullptr, side);
    CHECK_FALSE(g.depth_two);
    CHECK(g.balanced);
    CHECK_FALSE(g.galois);
    CHECK(g.report.consistent());
  }
}

TEST_CASE("right coaction is a comodule algebra structure with coinvariants B") {
  for (const std::string name : support::kCorpus) {
    CAPTURE(name);
    const Depth2 d = analyze_depth2(support::load(name));
    if (!d.right) continue;
    const TBialgebroid tb = build_T_bialgebroid(d);
    const Coaction c = build_right_coaction(d, tb);
    const Report r = verify_comodule_algebra(d, c, tb.tensors);
    for (const std::string& f : r.failures()) FAIL_CHECK(f);
    const Subspace co = coinvariants(d.ext, c);
    CHECK(co.dim() == d.ext.sub.dim());
    CHECK(co.contains(d.ext.sub));
  }
}

TEST_CASE("left coaction over T^op") {
  for (const std::string name : support::kCorpus) {
    CAPTURE(name);
    const Depth2 d = analyze_depth2(support::load(name));
    if (!d.left) continue;
    const TBialgebroid tb = build_T_bialgebroid(d);
    const Bialgebroid top = to_opposite(tb.bg);
    const Coaction c = build_left_coaction(d, top);
    CHECK(verify_comodule_algebra(d, c, build_carrier_tensors(top)).consistent());
    CHECK(coinvariants(d.ext, c).contains(d.ext.sub));
    CHECK(coinvariants(d.ext, c).dim() == d.ext.sub.dim());
  }
}

TEST_CASE("B = A: delta(a) = a (x) 1 and everything is coinvariant") {
  const Depth2 d = analyze_depth2(support::load("b_equals_a"));
  const TBialgebroid tb = build_T_bialgebroid(d);
  const Coaction c = build_right_coaction(d, tb);
  CHECK(coinvariants(d.ext, c).dim() == d.ext.dim());
}

TEST_CASE("Galois map inverse agrees with the formula") {
  for (const std::string name : {"m2_over_k", "qc2_over_k", "s3_over_c3"}) {
    CAPTURE(name);
    const Depth2 d = analyze_depth2(support::load(name));
    const TBialgebroid tb = build_T_bialgebroid(d);
    const GaloisMap gm = galois_map(d, build_right_coaction(d, tb));
    REQUIRE(gm.inverse);
    CHECK(*gm.inverse == gm.formula_inverse);
    CHECK(gm.beta * gm.formula_inverse == Matrix::identity(gm.beta.rows()));
  }
}

TEST_CASE("split monic analysis rejects a singular replacement for beta") {
  const Depth2 d = analyze_depth2(support::load("qc2_over_k"));
  const TBialgebroid tb = build_T_bialgebroid(d);
  const Coaction c = build_right_coaction(d, tb);
  const GaloisMap gm = galois_map(d, c);
  Matrix zero(gm.beta.rows(), gm.beta.cols());
  const Report r = analyze_comodule_algebra(d, c, zero);
  CHECK_FALSE(r.passed("comodule.right.monic"));
  CHECK_FALSE(r.passed("comodule.right.split_monic"));
  CHECK(r.consistent());
  const Report ok = analyze_comodule_algebra(d, c, gm.beta);
  CHECK(ok.passed("comodule.right.split_monic"));
  CHECK(ok.passed("comodule.right.split_monic_conclusion"));
}

TEST_CASE("balanced check agrees with the brute-force bicommutant") {
  for (const std::string name : support::kCorpus) {
    CAPTURE(name);
    const Extension e = support::load(name);
    for (Side side : {Side::left, Side::right}) CHECK(check_balanced(e, side).balanced == balanced_oracle(e, side));
  }
}

TEST_CASE("endomorphism tower for m2 over k and qc2 over k") {
  for (const std::string name : {"m2_over_k", "qc2_over_k"}) {
    CAPTURE(name);
    const Report r = endo_tower(analyze_depth2(support::load(name)), Limits{});
    CHECK(r.passed("endo_tower.left_depth_two"));
    CHECK(r.passed("endo_tower.left_balanced"));
    CHECK(r.passed("endo_tower.conclusion"));
    CHECK(r.consistent());
  }
}

TEST_CASE("endomorphism tower respects the dimension guard") {
  const Depth2 d = analyze_depth2(support::load("m2_over_k"));
  CHECK_THROWS_AS(endo_tower(d, Limits{3, 9}), DimensionGuard);
  CHECK_THROWS_AS(endo_tower(d, Limits{8, 15}), DimensionGuard);
  CHECK_NOTHROW(endo_tower(d, Limits{4, 16}));
}
