#include "xlie/matrix.hpp"

#include <stdexcept>

namespace xlie {

namespace {

void require_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("vector length mismatch");
  }
}

}  // namespace

Vector zero_vector(Field field, std::size_t n) {
  return Vector(n, Scalar::zero(field));
}

Vector unit_vector(Field field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero(const Vector& v) {
  for (const Scalar& s : v) {
    if (!s.is_zero()) {
      return false;
    }
  }
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] += b[i];
  }
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] -= b[i];
  }
  return out;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector out(v);
  for (Scalar& x : out) {
    x *= s;
  }
  return out;
}

void axpy(const Scalar& s, const Vector& x, Vector& y) {
  require_same_length(x, y);
  if (s.is_zero()) {
    return;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) {
      y[i] += s * x[i];
    }
  }
}

Vector concat(const Vector& a, const Vector& b) {
  Vector out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = Scalar::one(field);
  }
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("row length mismatch");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    m.set_column(c, cols[c]);
  }
  return m;
}

Matrix Matrix::unflatten(Field field, std::size_t rows, std::size_t cols, const Vector& flat) {
  if (flat.size() != rows * cols) {
    throw std::invalid_argument("flattened length mismatch");
  }
  Matrix m(field, rows, cols);
  m.entries_ = flat;
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    v.push_back((*this)(r, c));
  }
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) {
    throw std::invalid_argument("column length mismatch");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    (*this)(r, c) = v[r];
  }
}

bool Matrix::is_zero() const {
  return xlie::is_zero(entries_);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || !(a.field_ == b.field_)) {
    throw std::invalid_argument("matrix product shape/field mismatch");
  }
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) {
          out(i, j) += aik * b(k, j);
        }
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) {
    throw std::invalid_argument("matrix-vector shape mismatch");
  }
  Vector out = zero_vector(a.field_, a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (v[k].is_zero()) {
      continue;
    }
    for (std::size_t i = 0; i < a.rows_; ++i) {
      if (!a(i, k).is_zero()) {
        out[i] += a(i, k) * v[k];
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix sum shape mismatch");
  }
  Matrix out(a);
  out.entries_ = add(a.entries_, b.entries_);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix difference shape mismatch");
  }
  Matrix out(a);
  out.entries_ = sub(a.entries_, b.entries_);
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out(m);
  out.entries_ = scale(s, m.entries_);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw std::invalid_argument("vstack column mismatch");
  }
  Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) {
    for (std::size_t c = 0; c < top.cols(); ++c) {
      out(r, c) = top(r, c);
    }
  }
  for (std::size_t r = 0; r < bottom.rows(); ++r) {
    for (std::size_t c = 0; c < bottom.cols(); ++c) {
      out(top.rows() + r, c) = bottom(r, c);
    }
  }
  return out;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) {
    throw std::invalid_argument("hstack row mismatch");
  }
  Matrix out(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) {
      out(r, c) = left(r, c);
    }
    for (std::size_t c = 0; c < right.cols(); ++c) {
      out(r, left.cols() + c) = right(r, c);
    }
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult result{m, {}, 0};
  Matrix& a = result.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (!a(r, c).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == rows) {
      continue;
    }
    if (found != pivot_row) {
      for (std::size_t k = 0; k < cols; ++k) {
        std::swap(a(found, k), a(pivot_row, k));
      }
    }
    Scalar inv = a(pivot_row, c).inverse();
    for (std::size_t k = c; k < cols; ++k) {
      a(pivot_row, k) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a(r, c).is_zero()) {
        continue;
      }
      Scalar factor = a(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!a(pivot_row, k).is_zero()) {
          a(r, k) -= factor * a(pivot_row, k);
        }
      }
    }
    result.pivots.push_back(c);
    ++pivot_row;
  }
  result.rank = pivot_row;
  return result;
}

std::size_t rank(const Matrix& m) {
  return rref(m).rank;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) {
    throw std::invalid_argument("solve: right-hand side length mismatch");
  }
  Matrix augmented = hstack(a, Matrix::from_columns(a.field(), a.rows(), {b}));
  RrefResult r = rref(augmented);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) {
    return std::nullopt;
  }
  Vector x = zero_vector(a.field(), a.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    x[r.pivots[i]] = r.reduced(i, a.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) {
    return std::nullopt;
  }
  const std::size_t n = m.rows();
  RrefResult r = rref(hstack(m, Matrix::identity(m.field(), n)));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) {
    return std::nullopt;
  }
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      inv(i, j) = r.reduced(i, n + j);
    }
  }
  return inv;
}

}  // namespace xlie
