#include "nrs/matrix.hpp"

#include <algorithm>

#include "nrs/error.hpp"

namespace nrs {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "vector sum");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "vector difference");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v);
  for (auto& x : r) x *= s;
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "dot product");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector& diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::ShapeMismatch, "row length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw Error(ErrorKind::ShapeMismatch, "column length");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return nrs::is_zero(data_); }

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Rational Matrix::trace() const {
  if (!is_square()) throw Error(ErrorKind::ShapeMismatch, "trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw Error(ErrorKind::ShapeMismatch, "unflatten");
  Matrix m(rows, cols);
  m.data_ = v;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(const Matrix& a) { return Rational(-1) * a; }
Matrix operator*(const Rational& s, Matrix m) { return m *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matrix product");
  Matrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw Error(ErrorKind::ShapeMismatch, "matrix-vector product");
  Vector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] += m(i, j) * v[j];
    }
  }
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix power(const Matrix& m, unsigned k) {
  Matrix r = Matrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    }
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a(sel, col).is_zero()) ++sel;
    if (sel == n) return Rational(0);
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(sel, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::Singular, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto red = rref(aug);
  if (red.pivots.size() < n || red.pivots[n - 1] != n - 1) throw Error(ErrorKind::Singular, "matrix is not invertible");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

Subspace Subspace::span(std::span<const Vector> vectors, std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  const auto red = rref(Matrix::from_rows(vectors, ambient_dim));
  const std::size_t k = red.pivots.size();
  s.basis_ = Matrix(ambient_dim, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < ambient_dim; ++i) s.basis_(i, j) = red.reduced(j, i);
  s.pivot_rows_ = red.pivots;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> e;
  for (std::size_t i = 0; i < ambient_dim; ++i) e.push_back(unit_vector(ambient_dim, i));
  return span(e, ambient_dim);
}

std::vector<Vector> Subspace::vectors() const {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < dim(); ++j) out.push_back(basis_.column(j));
  return out;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::ShapeMismatch, "subspace coordinates");
  Vector coords(dim());
  for (std::size_t j = 0; j < dim(); ++j) coords[j] = v[pivot_rows_[j]];
  if (basis_ * coords != v) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t j = 0; j < other.dim(); ++j) {
    if (!contains(other.basis_.column(j))) return false;
  }
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  auto vs = vectors();
  for (auto& v : other.vectors()) vs.push_back(std::move(v));
  return span(vs, ambient_);
}

Subspace kernel(const Matrix& m) {
  const auto red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) v[red.pivots[r]] = -red.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  // Solve A x = B y; the intersection is spanned by A x over the solutions.
  const std::size_t n = a.ambient_dim();
  Matrix sys(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) sys(i, j) = a.basis()(i, j);
    for (std::size_t j = 0; j < b.dim(); ++j) sys(i, a.dim() + j) = -b.basis()(i, j);
  }
  std::vector<Vector> out;
  for (const auto& sol : kernel(sys).vectors()) {
    Vector x(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    out.push_back(a.basis() * x);
  }
  return Subspace::span(out, n);
}

LinearSolution solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw Error(ErrorKind::ShapeMismatch, "solve_linear: rows != rhs length");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto red = rref(aug);
  LinearSolution out{std::nullopt, kernel(a)};
  if (!red.pivots.empty() && red.pivots.back() == n) return out;
  Vector x(n);
  for (std::size_t r = 0; r < red.pivots.size(); ++r) x[red.pivots[r]] = red.reduced(r, n);
  out.particular = std::move(x);
  return out;
}

}  // namespace nrs
