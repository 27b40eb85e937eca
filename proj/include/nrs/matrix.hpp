#ifndef NRS_MATRIX_HPP
#define NRS_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "nrs/rational.hpp"

namespace nrs {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
bool is_zero(const Vector& v);
Rational dot(const Vector& a, const Vector& b);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const Vector& diag);
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  Rational trace() const;

  /// Row-major flattening; used to treat spaces of endomorphisms as vector spaces.
  Vector flatten() const { return data_; }
  static Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Rational& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, Matrix m);
Vector operator*(const Matrix& m, const Vector& v);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, unsigned k);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot = leftmost nonzero column, first nonzero row at or below.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);
/// Throws Error(Singular).
Matrix inverse(const Matrix& m);

/// A linear subspace of Q^n, stored as columns in reduced column-echelon form.
/// Two spanning sets of the same subspace give identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> vectors() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates with respect to basis(); nullopt if v is not in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;

  Subspace operator+(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivot_rows_;
};

Subspace intersection(const Subspace& a, const Subspace& b);

/// Null space of m as a subspace of Q^{cols}.
Subspace kernel(const Matrix& m);

struct LinearSolution {
  std::optional<Vector> particular;
  Subspace kernel;
};

/// Solves a x = b. `particular` is absent iff the system is inconsistent.
LinearSolution solve_linear(const Matrix& a, const Vector& b);

}  // namespace nrs

#endif
