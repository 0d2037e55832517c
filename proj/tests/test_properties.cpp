#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "d2lab/duality.hpp"
#include "d2lab/pipeline.hpp"
#include "mutation.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace d2lab;

namespace {

const char* const kD2[] = {"b_equals_a", "m2_over_k", "m2_over_diagonal", "qc2_over_k", "s3_over_c3"};

Extension rebased(const Extension& e, const Matrix& change) {
  const Matrix inv = *inverse(change);
  std::vector<Vector> sub;
  for (const Vector& b : e.sub.basis()) sub.push_back(inv * b);
  return build_extension(support::rebase(e.ambient, change), sub);
}

std::vector<std::pair<std::string, Status>> verdicts(const Report& r) {
  std::vector<std::pair<std::string, Status>> out;
  for (const CheckRecord& c : r.records())
    if (c.kind == CheckKind::verdict) out.emplace_back(c.id, c.status);
  return out;
}

void report_failures(const Report& r) {
  for (const std::string& f : r.failures()) FAIL_CHECK(f << ": " << r.find(f)->witness);
}

}  // namespace

TEST_CASE("property: a random change of basis preserves every verdict and dimension") {
  std::mt19937 rng(2024);
  for (const std::string name : support::kCorpus) {
    CAPTURE(name);
    const Extension e = support::load(name);
    const Extension f = rebased(e, support::random_shear(e.dim(), 3, rng));
    const Report a = run_pipeline(e, PipelineOptions{});
    const Report b = run_pipeline(f, PipelineOptions{});
    report_failures(b);
    CHECK(b.consistent());
    CHECK(verdicts(a) == verdicts(b));
    CHECK(a.find("extension.dims")->dims == b.find("extension.dims")->dims);
  }
}

TEST_CASE("property: D2 verdicts are basis independent on repeated draws") {
  std::mt19937 rng(99);
  for (int round = 0; round < 4; ++round) {
    for (const std::string name : {"m2_over_diagonal", "qc2_over_k", "s3_over_c2"}) {
      CAPTURE(name);
      CAPTURE(round);
      const Extension e = support::load(name);
      const Matrix change = round == 0 ? support::random_invertible(e.dim(), rng) : support::random_shear(e.dim(), 4, rng);
      const Depth2 d = analyze_depth2(rebased(e, change));
      for (Side side : {Side::left, Side::right}) {
        CHECK(d.cert(side).has_value() == support::expected_d2(name));
        CHECK(d.cert(side).has_value() == oracle::is_depth_two(d.ext, side));
        if (d.cert(side)) CHECK(verify_quasibases(d.ext, d.T, d.S, *d.cert(side)).consistent());
      }
    }
  }
}

TEST_CASE("property: prime field instances are internally consistent") {
  struct Case {
    unsigned p;
    std::vector<const char*> g, h;
    std::size_t degree;
  };
  const Case cases[] = {{2, {"(1 2)"}, {}, 2},
                        {3, {"(1 2 3)", "(1 2)"}, {"(1 2 3)"}, 3},
                        {2, {"(1 2 3)", "(1 2)"}, {"(1 2 3)"}, 3},
                        {5, {"(1 2 3)", "(1 2)"}, {"(1 2)"}, 3}};
  for (const Case& c : cases) {
    CAPTURE(c.p);
    CAPTURE(c.h.size());
    std::vector<Permutation> g, h;
    for (const char* s : c.g) g.push_back(parse_cycles(s, c.degree));
    for (const char* s : c.h) h.push_back(parse_cycles(s, c.degree));
    const auto pair = group_algebra_pair(Field::prime(c.p), g, h, c.degree);
    const Extension e = build_extension(pair.algebra, pair.subgroup_basis);
    const Report r = run_pipeline(e, PipelineOptions{});
    report_failures(r);
    CHECK(r.consistent());
    const Depth2 d = analyze_depth2(e);
    for (Side side : {Side::left, Side::right})
      CHECK(d.cert(side).has_value() == oracle::is_depth_two(e, side));
  }
}

TEST_CASE("property: pairing is R-bilinear in the expected slots for random elements") {
  std::mt19937 rng(7);
  const Depth2 d = analyze_depth2(support::load("m2_over_k"));
  const Pairing p = build_pairing(d, Side::right);
  const Algebra& r = d.ext.centralizer_algebra;
  auto random_vec = [&](std::size_t n) {
    Vector v = zero_vector(n);
    std::uniform_int_distribution<std::size_t> pos(0, n - 1);
    for (int k = 0; k < 3; ++k) v[pos(rng)] += support::small_nonzero(rng);
    return v;
  };
  for (int round = 0; round < 10; ++round) {
    const Vector t = random_vec(d.T.dim()), alpha = random_vec(d.S.dim()), x = random_vec(r.dim());
    CHECK(p(d.T.algebra.mul(t, d.T.target * x), alpha) == r.mul(x, p(t, alpha)));
    CHECK(p(t, d.S.algebra.mul(d.S.target * x, alpha)) == r.mul(p(t, alpha), x));
  }
}

TEST_CASE("mutation sensitivity: 20 fixed single-entry mutations per D2 instance are all detected") {
  unsigned seed = 1000;
  for (const std::string name : kD2) {
    CAPTURE(name);
    const Depth2 d = analyze_depth2(support::load(name));
    const TBialgebroid tb = build_T_bialgebroid(d);
    const SBialgebroid sb = build_S_bialgebroid(d);
    const Coaction c = build_right_coaction(d, tb);
    for (const auto& o : mutation::run(d, tb, sb, c, seed++)) {
      CAPTURE(mutation::name(o.target));
      CAPTURE(o.row);
      CAPTURE(o.col);
      CHECK(o.detected);
    }
  }
}

TEST_CASE("unmutated structures pass the same detectors") {
  for (const std::string name : kD2) {
    CAPTURE(name);
    const Depth2 d = analyze_depth2(support::load(name));
    const TBialgebroid tb = build_T_bialgebroid(d);
    const SBialgebroid sb = build_S_bialgebroid(d);
    CHECK(verify_axioms(tb.bg, tb.tensors, "T").consistent());
    CHECK(verify_axioms(sb.bg, sb.tensors, "S").consistent());
    CHECK(verify_comodule_algebra(d, build_right_coaction(d, tb), tb.tensors).consistent());
  }
}
