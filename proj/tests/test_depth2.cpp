#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "d2lab/bialgebroid.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace d2lab;

TEST_CASE("quasibase search agrees with the brute-force oracle") {
  for (const std::string name : support::kCorpus) {
    const Depth2 d = analyze_depth2(support::load(name));
    for (Side side : {Side::left, Side::right}) {
      CAPTURE(name);
      CAPTURE(to_string(side));
      const bool oracle_d2 = oracle::is_depth_two(d.ext, side);
      CHECK(d.cert(side).has_value() == oracle_d2);
      CHECK(oracle_d2 == support::expected_d2(name));
    }
  }
}

TEST_CASE("T and S dimensions match direct kernel computations") {
  for (const std::string name : support::kCorpus) {
    CAPTURE(name);
    const Depth2 d = analyze_depth2(support::load(name));
    CHECK(d.T.dim() == oracle::central_dim(d.ext));
    CHECK(d.S.dim() == oracle::bimodule_endo_dim(d.ext));
  }
}

TEST_CASE("known dimensions") {
  CHECK(analyze_depth2(support::load("m2_over_k")).T.dim() == 16);
  CHECK(analyze_depth2(support::load("m2_over_k")).S.dim() == 16);
  CHECK(analyze_depth2(support::load("m2_over_diagonal")).T.dim() == 4);
  CHECK(analyze_depth2(support::load("qc2_over_k")).T.dim() == 4);
  const Depth2 s3 = analyze_depth2(support::load("s3_over_c3"));
  CHECK(s3.T.square.dim() == 12);
  CHECK(s3.T.dim() == 8);
  CHECK(s3.ext.centralizer.dim() == 4);
}

TEST_CASE("B = A = M2: T and S are one dimensional") {
  const Depth2 d = analyze_depth2(support::load("b_equals_a"));
  CHECK(d.T.dim() == 1);
  CHECK(d.S.dim() == 1);
  REQUIRE(d.left);
  CHECK(d.left->size() == 1);
  REQUIRE(d.right);
  CHECK(d.right->size() == 1);
}

TEST_CASE("T elements are B-central and S maps are B-bilinear") {
  for (const std::string name : support::kCorpus) {
    CAPTURE(name);
    const Depth2 d = analyze_depth2(support::load(name));
    const Extension& e = d.ext;
    for (std::size_t i = 0; i < d.T.dim(); ++i)
      for (std::size_t j = 0; j < e.sub.dim(); ++j) {
        const Vector x = d.T.element(d.T.algebra.basis(i));
        const Vector b = e.sub_element(j);
        CHECK(d.T.act_left(b, x) == d.T.act_right(x, b));
      }
    for (const Matrix& f : d.S.maps)
      for (std::size_t j = 0; j < e.sub.dim(); ++j) {
        const Vector b = e.sub_element(j);
        CHECK(f * e.ambient.left_mult(b) == e.ambient.left_mult(b) * f);
        CHECK(f * e.ambient.right_mult(b) == e.ambient.right_mult(b) * f);
      }
  }
}

TEST_CASE("T and S algebras are unital and associative") {
  for (const std::string name : support::kCorpus) {
    CAPTURE(name);
    const Depth2 d = analyze_depth2(support::load(name));
    CHECK(validate_algebra(d.T.algebra).valid());
    CHECK(validate_algebra(d.S.algebra).valid());
  }
}

TEST_CASE("S multiplication is composition") {
  const Depth2 d = analyze_depth2(support::load("s3_over_c3"));
  for (std::size_t i = 0; i < d.S.dim(); ++i)
    for (std::size_t j = 0; j < d.S.dim(); ++j)
      CHECK(d.S.map(d.S.algebra.mul(d.S.algebra.basis(i), d.S.algebra.basis(j))) == d.S.maps[i] * d.S.maps[j]);
}

TEST_CASE("certificates satisfy the two-variable identity") {
  for (const std::string name : support::kCorpus) {
    const Depth2 d = analyze_depth2(support::load(name));
    for (Side side : {Side::left, Side::right}) {
      CAPTURE(name);
      CAPTURE(to_string(side));
      if (!d.cert(side)) continue;
      const Report r = verify_quasibases(d.ext, d.T, d.S, *d.cert(side));
      CHECK(r.consistent());
      CHECK(r.passed("quasibase." + std::string(to_string(side)) + ".identity"));
    }
  }
}

TEST_CASE("a corrupted certificate is rejected") {
  const Depth2 d = analyze_depth2(support::load("m2_over_diagonal"));
  REQUIRE(d.right);
  QuasibaseCertificate bad = *d.right;
  bad.s[0] = bad.s[0] + bad.s[0];
  CHECK_FALSE(verify_quasibases(d.ext, d.T, d.S, bad).consistent());
}

TEST_CASE("dual bases for T and S") {
  for (const std::string name : support::kCorpus) {
    CAPTURE(name);
    const Depth2 d = analyze_depth2(support::load(name));
    const Report r = verify_dual_bases(d);
    CHECK(r.consistent());
    if (support::expected_d2(name)) {
      CHECK(r.passed("dual_basis.T"));
      CHECK(r.passed("dual_basis.S"));
    }
  }
}

TEST_CASE("B = A: the dual basis functional is t -> t1 t2") {
  const Depth2 d = analyze_depth2(support::load("b_equals_a"));
  const auto fs = dual_basis_functionals(d, Side::left);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].rows() == 1);
  CHECK(fs[0].cols() == 1);
  CHECK_FALSE(fs[0].is_zero());
}

TEST_CASE("source and target of T commute") {
  const Depth2 d = analyze_depth2(support::load("m2_over_k"));
  const Algebra& r = d.ext.centralizer_algebra;
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) {
      const Vector s = d.T.source * r.basis(i), t = d.T.target * r.basis(j);
      CHECK(d.T.algebra.mul(s, t) == d.T.algebra.mul(t, s));
    }
}
