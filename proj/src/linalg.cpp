#include "d2lab/linalg.hpp"

#include <algorithm>
#include <string>

namespace d2lab {

namespace {

// r := r - a * row, both sorted by index.
SparseVector sub_scaled(const SparseVector& r, const Scalar& a, const SparseVector& row) {
  SparseVector out;
  out.reserve(r.size() + row.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < r.size() || j < row.size()) {
    if (j == row.size() || (i < r.size() && r[i].first < row[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || row[j].first < r[i].first) {
      out.emplace_back(row[j].first, -(a * row[j].second));
      ++j;
    } else {
      Scalar v = r[i].second - a * row[j].second;
      if (!v.is_zero()) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void check_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw DimensionMismatch(std::string(what) + ": expected size " + std::to_string(want) +
                            ", got " + std::to_string(got));
}

}  // namespace

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
  check_size(b.size(), a.size(), "vector sum");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  check_size(b.size(), a.size(), "vector difference");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v.size());
  if (s.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = s * v[i];
  return r;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  check_size(x.size(), y.size(), "axpy");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Vector kron(const Vector& a, const Vector& b) {
  Vector r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

SparseVector sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    check_size(rows[r].size(), cols, "matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<long>(r * cols_),
                data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  check_size(v.size(), rows_, "matrix column");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionMismatch("matrix product " + std::to_string(a.rows_) + "x" +
                            std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                            std::to_string(b.cols_));
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
  check_size(x.size(), a.cols_, "matrix-vector product");
  Vector y(a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      const Scalar& aik = a(i, k);
      if (!aik.is_zero()) y[i] += aik * x[k];
    }
  }
  return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

Vector vec(const Matrix& m) {
  Vector v(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m(r, c);
  return v;
}

Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols) {
  check_size(v.size(), rows * cols, "unvec");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

// ----------------------------------------------------------- SpanBuilder

SpanBuilder::SpanBuilder(std::size_t ambient) : ambient_(ambient), rows_(ambient) {}

bool SpanBuilder::add(SparseVector v) {
  std::erase_if(v, [](const auto& e) { return e.second.is_zero(); });
  for (const auto& e : v)
    if (e.first >= ambient_) throw DimensionMismatch("span vector index out of range");
  while (!v.empty()) {
    const std::size_t lead = v.front().first;
    if (rows_[lead].empty()) {
      Scalar inv = v.front().second.inverse();
      for (auto& e : v) e.second *= inv;
      rows_[lead] = std::move(v);
      ++count_;
      return true;
    }
    Scalar coef = v.front().second;
    v = sub_scaled(v, coef, rows_[lead]);
  }
  return false;
}

Subspace SpanBuilder::build() && {
  Subspace s(ambient_);
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (!rows_[c].empty()) pivots.push_back(c);
  // Back substitution from the last pivot: rows with larger pivots are
  // already fully reduced, so subtracting them only touches free columns.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    SparseVector& row = rows_[*it];
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (std::size_t k = 1; k < row.size(); ++k)
      if (!rows_[row[k].first].empty()) hits.push_back(row[k]);
    for (const auto& [col, coef] : hits) row = sub_scaled(row, coef, rows_[col]);
  }
  s.pivots_ = pivots;
  for (std::size_t c : pivots) s.rows_.push_back(std::move(rows_[c]));
  return s;
}

// -------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  SpanBuilder b(ambient);
  for (const auto& v : vectors) {
    check_size(v.size(), ambient, "span vector");
    b.add(v);
  }
  return std::move(b).build();
}

Subspace Subspace::full(std::size_t ambient) {
  SpanBuilder b(ambient);
  for (std::size_t i = 0; i < ambient; ++i) b.add(SparseVector{{i, Scalar(1)}});
  return std::move(b).build();
}

Vector Subspace::basis_vector(std::size_t i) const {
  Vector v(ambient_);
  for (const auto& [c, x] : rows_.at(i)) v[c] = x;
  return v;
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

Matrix Subspace::basis_matrix() const {
  Matrix m(ambient_, dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (const auto& [c, x] : rows_[i]) m(c, i) = x;
  return m;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  check_size(v.size(), ambient_, "subspace coordinates");
  Vector coords(dim());
  for (std::size_t i = 0; i < dim(); ++i) coords[i] = v[pivots_[i]];
  if (element(coords) != v) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Vector Subspace::element(const Vector& coords) const {
  check_size(coords.size(), dim(), "subspace element");
  Vector v(ambient_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords[i].is_zero()) continue;
    for (const auto& [c, x] : rows_[i]) v[c] += coords[i] * x;
  }
  return v;
}

// ------------------------------------------------------- solving, kernels

std::size_t rank(const Matrix& m) {
  SpanBuilder b(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.add(m.row(r));
  return b.rank();
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  check_size(b.size(), m.rows(), "solve right-hand side");
  const std::size_t n = m.cols();
  SpanBuilder builder(n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVector row;
    for (std::size_t c = 0; c < n; ++c)
      if (!m(r, c).is_zero()) row.emplace_back(c, m(r, c));
    if (!b[r].is_zero()) row.emplace_back(n, b[r]);
    builder.add(std::move(row));
  }
  Subspace s = std::move(builder).build();
  Vector x(n);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const std::size_t p = s.pivots()[i];
    if (p == n) return std::nullopt;
    const SparseVector& row = s.sparse_row(i);
    if (row.back().first == n) x[p] = row.back().second;
  }
  return x;
}

Subspace kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  SpanBuilder builder(n);
  for (std::size_t r = 0; r < m.rows(); ++r) builder.add(m.row(r));
  Subspace s = std::move(builder).build();
  std::vector<long> pivot_row(n, -1);
  for (std::size_t i = 0; i < s.dim(); ++i) pivot_row[s.pivots()[i]] = static_cast<long>(i);
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (pivot_row[f] >= 0) continue;
    Vector x(n);
    x[f] = 1;
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (const auto& [c, v] : s.sparse_row(i))
        if (c == f) x[s.pivots()[i]] = -v;
    basis.push_back(std::move(x));
  }
  return Subspace::span(n, basis);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  SpanBuilder builder(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    SparseVector row;
    for (std::size_t c = 0; c < n; ++c)
      if (!m(r, c).is_zero()) row.emplace_back(c, m(r, c));
    row.emplace_back(n + r, Scalar(1));
    builder.add(std::move(row));
  }
  Subspace s = std::move(builder).build();
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (s.pivots()[i] != i) return std::nullopt;
    for (const auto& [c, v] : s.sparse_row(i))
      if (c >= n) inv(i, c - n) = v;
  }
  return inv;
}

Subspace joint_kernel(std::size_t dim, const std::vector<LinearMap>& maps) {
  std::vector<Vector> current;
  current.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) current.push_back(unit_vector(dim, i));
  for (const auto& map : maps) {
    if (current.empty()) break;
    std::vector<Vector> images;
    images.reserve(current.size());
    bool all_zero = true;
    for (const auto& v : current) {
      images.push_back(map(v));
      all_zero = all_zero && is_zero(images.back());
    }
    if (all_zero) continue;
    Subspace k = kernel_basis(Matrix::from_columns(images.front().size(), images));
    std::vector<Vector> next;
    for (std::size_t i = 0; i < k.dim(); ++i) {
      Vector combo(dim);
      for (const auto& [c, x] : k.sparse_row(i)) axpy(combo, x, current[c]);
      next.push_back(std::move(combo));
    }
    current = std::move(next);
  }
  return Subspace::span(dim, current);
}

Subspace joint_kernel(std::size_t dim, const std::vector<Matrix>& maps) {
  std::vector<LinearMap> fns;
  for (const auto& m : maps) {
    if (m.cols() != dim) throw DimensionMismatch("joint kernel map width");
    fns.emplace_back([&m](const Vector& v) { return m * v; });
  }
  return joint_kernel(dim, fns);
}

// -------------------------------------------------------------- Quotient

Quotient::Quotient(std::size_t ambient, Subspace relations)
    : ambient_(ambient),
      relations_(std::move(relations)),
      position_(ambient, -1),
      pivot_row_(ambient, -1) {
  if (relations_.ambient_dim() != ambient) throw DimensionMismatch("quotient relations");
  for (std::size_t i = 0; i < relations_.dim(); ++i)
    pivot_row_[relations_.pivots()[i]] = static_cast<long>(i);
  for (std::size_t c = 0; c < ambient; ++c) {
    if (pivot_row_[c] >= 0) continue;
    position_[c] = static_cast<long>(free_.size());
    free_.push_back(c);
  }
}

Vector Quotient::project(const Vector& v) const {
  check_size(v.size(), ambient_, "quotient projection");
  Vector out(free_.size());
  for (std::size_t k = 0; k < free_.size(); ++k) out[k] = v[free_[k]];
  for (std::size_t i = 0; i < relations_.dim(); ++i) {
    const Scalar& lead = v[relations_.pivots()[i]];
    if (lead.is_zero()) continue;
    for (const auto& [c, x] : relations_.sparse_row(i)) {
      if (position_[c] < 0) continue;
      out[static_cast<std::size_t>(position_[c])] -= lead * x;
    }
  }
  return out;
}

Vector Quotient::lift(const Vector& q) const {
  check_size(q.size(), free_.size(), "quotient lift");
  Vector v(ambient_);
  for (std::size_t k = 0; k < free_.size(); ++k) v[free_[k]] = q[k];
  return v;
}

Matrix Quotient::projection() const {
  Matrix p(dim(), ambient_);
  for (std::size_t c = 0; c < ambient_; ++c) p.set_column(c, project(unit_vector(ambient_, c)));
  return p;
}

Matrix Quotient::section() const {
  Matrix s(ambient_, dim());
  for (std::size_t k = 0; k < free_.size(); ++k) s(free_[k], k) = 1;
  return s;
}

Quotient quotient_basis(std::size_t ambient, const Subspace& relations) {
  return Quotient(ambient, relations);
}

}  // namespace d2lab
