#include "d2lab/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace d2lab {

Algebra::Algebra(Field field, std::size_t dim, std::vector<Scalar> constants, Vector unit,
                 std::vector<std::string> labels)
    : field_(field),
      dim_(dim),
      constants_(std::move(constants)),
      unit_(std::move(unit)),
      labels_(std::move(labels)) {
  if (constants_.size() != dim_ * dim_ * dim_)
    throw DimensionMismatch("structure constants must have dim^3 entries");
  if (unit_.size() != dim_) throw DimensionMismatch("unit vector has wrong length");
  products_.resize(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!constant(i, j, k).is_zero()) products_[i * dim_ + j].emplace_back(k, constant(i, j, k));
}

Vector Algebra::mul(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("algebra product operand");
  Vector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      for (const auto& [k, v] : products_[i * dim_ + j]) r[k] += c * v;
    }
  }
  return r;
}

Matrix Algebra::left_mult(const Vector& a) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, mul(a, basis(j)));
  return m;
}

Matrix Algebra::right_mult(const Vector& a) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, mul(basis(j), a));
  return m;
}

ValidationReport validate_algebra(const Algebra& a) {
  ValidationReport rep;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = a.mul(a.basis(i), a.basis(j));
      for (std::size_t k = 0; k < n; ++k) {
        const Vector lhs = a.mul(ij, a.basis(k));
        const Vector rhs = a.mul(a.basis(i), a.mul(a.basis(j), a.basis(k)));
        if (lhs != rhs)
          rep.failures.push_back("associativity (" + std::to_string(i) + "," + std::to_string(j) +
                                 "," + std::to_string(k) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a.mul(a.unit(), a.basis(i)) != a.basis(i))
      rep.failures.push_back("left unit at e" + std::to_string(i));
    if (a.mul(a.basis(i), a.unit()) != a.basis(i))
      rep.failures.push_back("right unit at e" + std::to_string(i));
  }
  return rep;
}

Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Scalar> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = a.constant(j, i, k);
  return Algebra(a.field(), n, std::move(c), a.unit(), a.labels());
}

Algebra restrict_to(const Algebra& a, const Subspace& space) {
  const std::size_t m = space.dim();
  const std::vector<Vector> basis = space.basis();
  std::vector<Scalar> c(m * m * m);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      auto coords = space.coordinates(a.mul(basis[p], basis[q]));
      if (!coords)
        throw InternalInconsistency("subspace not closed under multiplication at (" +
                                    std::to_string(p) + "," + std::to_string(q) + ")");
      for (std::size_t k = 0; k < m; ++k) c[(p * m + q) * m + k] = (*coords)[k];
    }
  }
  auto unit = space.coordinates(a.unit());
  if (!unit) throw InternalInconsistency("subspace does not contain the unit");
  return Algebra(a.field(), m, std::move(c), *unit);
}

Algebra matrix_algebra(Field field, std::size_t n) {
  const std::size_t d = n * n;
  std::vector<Scalar> c(d * d * d, Scalar::in(field, 0));
  Vector unit(d, Scalar::in(field, 0));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = Scalar::in(field, 1);
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t l = 0; l < n; ++l)
        c[((i * n + j) * d + (j * n + l)) * d + (i * n + l)] = Scalar::in(field, 1);
    }
  }
  return Algebra(field, d, std::move(c), std::move(unit), std::move(labels));
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = i;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  std::set<std::size_t> seen;
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("malformed cycle notation");
      const std::size_t point = std::stoul(std::string(text.substr(start, pos - start)));
      if (point < 1 || point > degree) throw std::invalid_argument("cycle point out of range");
      if (!seen.insert(point).second) throw std::invalid_argument("repeated point in cycles");
      cycle.push_back(point - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

namespace {

Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation r(h.size());
  for (std::size_t x = 0; x < h.size(); ++x) r[x] = g[h[x]];
  return r;
}

}  // namespace

std::vector<Permutation> generate_group(std::size_t degree, const std::vector<Permutation>& gens) {
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = i;
  std::set<Permutation> group{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        if (s.size() != degree) throw std::invalid_argument("generator degree mismatch");
        Permutation h = compose(s, g);
        if (group.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

GroupAlgebraPair group_algebra_pair(Field field, const std::vector<Permutation>& g_gens,
                                    const std::vector<Permutation>& h_gens, std::size_t degree) {
  const std::vector<Permutation> g = generate_group(degree, g_gens);
  const std::vector<Permutation> h = generate_group(degree, h_gens);
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < g.size(); ++i) index[g[i]] = i;
  for (const auto& x : h)
    if (!index.count(x)) throw NotClosed("subgroup generators do not lie in G");
  const std::size_t n = g.size();
  std::vector<Scalar> c(n * n * n, Scalar::in(field, 0));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    std::string label = "[";
    for (std::size_t x = 0; x < degree; ++x) label += (x ? " " : "") + std::to_string(g[i][x] + 1);
    labels.push_back(label + "]");
    for (std::size_t j = 0; j < n; ++j)
      c[(i * n + j) * n + index.at(compose(g[i], g[j]))] = Scalar::in(field, 1);
  }
  Vector unit(n, Scalar::in(field, 0));
  unit[0] = Scalar::in(field, 1);
  GroupAlgebraPair out{Algebra(field, n, std::move(c), std::move(unit), std::move(labels)), g, {}};
  for (const auto& x : h) {
    Vector v(n, Scalar::in(field, 0));
    v[index.at(x)] = Scalar::in(field, 1);
    out.subgroup_basis.push_back(std::move(v));
  }
  return out;
}

std::vector<std::string> AlgebraMap::multiplicativity_failures() const {
  std::vector<std::string> out;
  if (matrix * source.unit() != target.unit()) out.push_back("unit not preserved");
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j)
      if ((*this)(source.mul(source.basis(i), source.basis(j))) !=
          target.mul((*this)(source.basis(i)), (*this)(source.basis(j))))
        out.push_back("product (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return out;
}

Vector Extension::centralizer_coords(const Vector& a) const {
  auto c = centralizer.coordinates(a);
  if (!c) throw InternalInconsistency("element expected in the centralizer lies outside it");
  return *c;
}

Extension build_extension(const Algebra& a, const std::vector<Vector>& sub_basis) {
  ValidationReport v = validate_algebra(a);
  if (!v.valid()) throw InvalidAlgebra("ambient algebra invalid: " + v.failures.front());
  const std::size_t n = a.dim();
  SpanBuilder builder(n);
  for (const auto& b : sub_basis) {
    if (b.size() != n) throw DimensionMismatch("subalgebra basis vector has wrong length");
    if (!builder.add(b)) throw NotProper("subalgebra basis is linearly dependent");
  }
  Subspace sub = std::move(builder).build();
  if (!sub.contains(a.unit())) throw NotUnital("1_A is not in the span of the subalgebra basis");
  const std::vector<Vector> bs = sub.basis();
  for (std::size_t p = 0; p < bs.size(); ++p)
    for (std::size_t q = 0; q < bs.size(); ++q)
      if (!sub.contains(a.mul(bs[p], bs[q])))
        throw NotClosed("span is not closed under multiplication (basis pair " +
                        std::to_string(p) + "," + std::to_string(q) + ")");
  std::vector<Matrix> commutators;
  for (const auto& b : bs) commutators.push_back(a.left_mult(b) - a.right_mult(b));
  Subspace centralizer = joint_kernel(n, commutators);
  Algebra sub_algebra = restrict_to(a, sub);
  Algebra centralizer_algebra = restrict_to(a, centralizer);
  return Extension{a, std::move(sub), std::move(sub_algebra), std::move(centralizer),
                   std::move(centralizer_algebra)};
}

}  // namespace d2lab
