#pragma once

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "d2lab/io.hpp"

namespace support {

inline const std::array<const char*, 6> kCorpus = {"b_equals_a",  "m2_over_k",  "m2_over_diagonal",
                                                   "qc2_over_k", "s3_over_c3", "s3_over_c2"};

inline std::string corpus_path(const std::string& name) {
  return std::string(D2LAB_CORPUS_DIR) + "/" + name + ".json";
}

inline d2lab::Extension load(const std::string& name) { return d2lab::load_extension(corpus_path(name)).ext; }

inline bool expected_d2(const std::string& name) { return name != "s3_over_c2"; }

struct Run {
  int exit_code = -1;
  std::string out;
};

/// Runs the CLI with `args`, capturing stdout.
inline Run run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + D2LAB_BIN + "\" " + args + " 2>/dev/null";
  Run r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe.get())) > 0) r.out.append(buf, got);
  const int status = pclose(pipe.release());
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

/// A random nonzero small rational.
inline d2lab::Scalar small_nonzero(std::mt19937& rng) {
  static const long nums[] = {1, -1, 2, -2, 3, -3};
  static const long dens[] = {1, 1, 1, 2, 3};
  std::uniform_int_distribution<std::size_t> pn(0, 5), pd(0, 4);
  return d2lab::Scalar(nums[pn(rng)]) / d2lab::Scalar(dens[pd(rng)]);
}

/// Random invertible n x n matrix: unit lower times unit upper triangular, then a permutation.
inline d2lab::Matrix random_invertible(std::size_t n, std::mt19937& rng) {
  using d2lab::Matrix;
  Matrix l = Matrix::identity(n), u = Matrix::identity(n), p(n, n);
  std::bernoulli_distribution coin(0.6);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j && coin(rng)) l(i, j) = small_nonzero(rng);
      if (i < j && coin(rng)) u(i, j) = small_nonzero(rng);
    }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1;
  return p * l * u;
}

/// Permutation times `shears` random elementary matrices I + c E_ij.
inline d2lab::Matrix random_shear(std::size_t n, std::size_t shears, std::mt19937& rng) {
  using d2lab::Matrix;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = 1;
  if (n < 2) return m;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  for (std::size_t s = 0; s < shears; ++s) {
    const std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    while (j == i) j = idx(rng);
    Matrix e = Matrix::identity(n);
    e(i, j) = small_nonzero(rng);
    m = m * e;
  }
  return m;
}

/// The same algebra in the basis given by the columns of `change` (new basis in old coordinates).
inline d2lab::Algebra rebase(const d2lab::Algebra& a, const d2lab::Matrix& change) {
  using namespace d2lab;
  const std::size_t n = a.dim();
  const Matrix inv = *inverse(change);
  std::vector<Scalar> c;
  c.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector prod = inv * a.mul(change.column(i), change.column(j));
      c.insert(c.end(), prod.begin(), prod.end());
    }
  return Algebra(a.field(), n, std::move(c), inv * a.unit());
}

}  // namespace support
