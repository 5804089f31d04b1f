#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "bihomega/rational.hpp"

namespace bihomega {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
/// "[a, b, c]"
std::string format_vector(std::span<const Rational> v);

// Elementwise vector arithmetic; lengths must agree (DimensionMismatch).
Vector& add_to(Vector& acc, std::span<const Rational> v);
Vector& sub_from(Vector& acc, std::span<const Rational> v);
Vector negated(Vector v);
Vector scaled(Vector v, const Rational& s);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> entries);
  static Matrix scalar(std::size_t n, const Rational& s);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  [[nodiscard]] std::span<const Rational> entries() const { return entries_; }

  /// Image of the i-th basis vector, i.e. column i.
  [[nodiscard]] Vector column(std::size_t i) const;
  [[nodiscard]] Vector apply(std::span<const Rational> v) const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_identity() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// "[[a,b],[c,d]]", the DSL spelling.
  [[nodiscard]] std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact product. Throws DimensionMismatch when a.cols() != b.rows().
Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// Exact inverse by Gauss-Jordan elimination. The pivot of each column is the
/// first row (top to bottom) with a nonzero entry. Throws Singular.
Matrix mat_inverse(const Matrix& a);

/// True iff ab = ba. Throws DimensionMismatch unless both are square of one size.
bool mats_commute(const Matrix& a, const Matrix& b);

Matrix mat_power(const Matrix& a, unsigned k);

}  // namespace bihomega
