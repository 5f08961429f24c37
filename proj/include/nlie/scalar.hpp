#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nlie {

/// Exact rational scalar, always kept in canonical (reduced) form.
using Scalar = mpq_class;

/// Dense coefficient vector over a fixed basis.
using Vector = std::vector<Scalar>;

/// Malformed or inconsistent user input (bad indices, dimension mismatch, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that holds by construction failed to hold. Signals a
/// convention bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses "p/q", "p", "-p/q" (decimal integers, q != 0) into canonical form.
Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& value);

Vector zero_vector(std::size_t dim);
Vector unit_vector(std::size_t dim, std::size_t index);
bool is_zero(const Vector& v);

/// y += a * x
void add_scaled(Vector& y, const Scalar& a, const Vector& x);

Vector operator+(Vector lhs, const Vector& rhs);
Vector operator-(Vector lhs, const Vector& rhs);
Vector operator*(const Scalar& a, Vector v);
Vector operator-(Vector v);

inline int parity_sign(std::size_t exponent) { return (exponent % 2 == 0) ? 1 : -1; }

/// Dense row-major matrix of scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector apply(const Vector& x) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(Matrix a, const Matrix& b);
  friend Matrix operator-(Matrix a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace nlie
