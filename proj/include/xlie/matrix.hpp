#ifndef XLIE_MATRIX_HPP_
#define XLIE_MATRIX_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "xlie/field.hpp"

namespace xlie {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field field, std::size_t n);
Vector unit_vector(Field field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
// y += s * x
void axpy(const Scalar& s, const Vector& x, Vector& y);
Vector concat(const Vector& a, const Vector& b);

// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix() : Matrix(Field::rational(), 0, 0) {}
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  // Row-major flattening.
  const Vector& entries() const { return entries_; }
  static Matrix unflatten(Field field, std::size_t rows, std::size_t cols, const Vector& flat);

  bool is_zero() const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  Vector entries_;
};

// Stack blocks vertically (same column count) or horizontally (same row count).
Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Some x with a*x = b (free variables set to zero), or nothing if inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace xlie

#endif  // XLIE_MATRIX_HPP_
