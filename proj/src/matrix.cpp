#include "bihomega/matrix.hpp"

#include <sstream>
#include <utility>

#include "bihomega/errors.hpp"

namespace bihomega {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::string format_vector(std::span<const Rational> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + "]";
}

Vector& add_to(Vector& acc, std::span<const Rational> v) {
  if (acc.size() != v.size()) throw DimensionMismatch("vector length mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i];
  return acc;
}

Vector& sub_from(Vector& acc, std::span<const Rational> v) {
  if (acc.size() != v.size()) throw DimensionMismatch("vector length mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] -= v[i];
  return acc;
}

Vector negated(Vector v) {
  for (auto& x : v) x = -x;
  return v;
}

Vector scaled(Vector v, const Rational& s) {
  for (auto& x : v) x *= s;
  return v;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::scalar(std::size_t n, const Rational& s) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Vector Matrix::column(std::size_t i) const {
  if (i >= cols_) throw IndexOutOfRange("column index out of range");
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, i);
  return v;
}

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& m = (*this)(r, c);
      if (!m.is_zero()) out[r].add_product(m, v[c]);
    }
  }
  return out;
}

bool Matrix::is_zero() const { return bihomega::is_zero(entries_); }

bool Matrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? Rational(1) : Rational(0))) return false;
    }
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

std::string Matrix::str() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ",";
    out += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ",";
      out += (*this)(r, c).str();
    }
    out += "]";
  }
  return out + "]";
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "cannot multiply " << a.rows() << "x" << a.cols() << " by " << b.rows() << "x" << b.cols();
    throw DimensionMismatch(msg.str());
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (!b(k, c).is_zero()) out(r, c).add_product(x, b(k, c));
      }
    }
  }
  return out;
}

Matrix mat_inverse(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("only square matrices have inverses");
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw Singular("matrix is singular (no pivot in column " + std::to_string(col + 1) + ")");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational scale = Rational(1) / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const Rational factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

bool mats_commute(const Matrix& a, const Matrix& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows()) {
    throw DimensionMismatch("commutation test needs two square matrices of one size");
  }
  return mat_mul(a, b) == mat_mul(b, a);
}

Matrix mat_power(const Matrix& a, unsigned k) {
  if (!a.square()) throw DimensionMismatch("power of a non-square matrix");
  Matrix out = Matrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) out = mat_mul(out, a);
  return out;
}

}  // namespace bihomega
