#include "xlie/subspace.hpp"

#include <stdexcept>

namespace xlie {

namespace {

void require_compatible(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || !(u.field() == v.field())) {
    throw std::invalid_argument("subspaces live in different ambient spaces");
  }
}

}  // namespace

Subspace::Subspace(Field field, std::size_t ambient) : basis_(field, 0, ambient) {}

Subspace Subspace::full(Field field, std::size_t ambient) {
  return row_space(Matrix::identity(field, ambient));
}

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(field, ambient, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult r = rref(m);
  Subspace s(m.field(), m.cols());
  Matrix basis(m.field(), r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      basis(i, c) = r.reduced(i, c);
    }
  }
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(r.pivots);
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    out.push_back(basis_.row(i));
  }
  return out;
}

Matrix Subspace::inclusion() const {
  return basis_.transpose();
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim()) {
    throw std::invalid_argument("vector length does not match ambient dimension");
  }
  Vector r(v);
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar coeff = r[pivots_[i]];
    if (!coeff.is_zero()) {
      axpy(-coeff, basis_.row(i), r);
    }
  }
  return r;
}

bool Subspace::contains(const Vector& v) const {
  return xlie::is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) {
      return false;
    }
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) {
    throw std::invalid_argument("vector is not in the subspace");
  }
  Vector coords;
  coords.reserve(dim());
  for (std::size_t p : pivots_) {
    coords.push_back(v[p]);
  }
  return coords;
}

Vector Subspace::from_coordinates(const Vector& coords) const {
  if (coords.size() != dim()) {
    throw std::invalid_argument("coordinate length does not match subspace dimension");
  }
  Vector v = zero_vector(field(), ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    axpy(coords[i], basis_.row(i), v);
  }
  return v;
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) {
    is_pivot[p] = true;
  }
  std::vector<Vector> generators;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    Vector v = unit_vector(m.field(), n, free);
    for (std::size_t i = 0; i < r.rank; ++i) {
      v[r.pivots[i]] = -r.reduced(i, free);
    }
    generators.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, generators);
}

Subspace image(const Matrix& map, const Subspace& s) {
  if (map.cols() != s.ambient_dim()) {
    throw std::invalid_argument("image: map does not act on the subspace's ambient space");
  }
  std::vector<Vector> images;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    images.push_back(map * s.basis_vector(i));
  }
  return Subspace::span(map.field(), map.rows(), images);
}

Subspace column_space(const Matrix& m) {
  return Subspace::row_space(m.transpose());
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  return Subspace::row_space(vstack(u.basis(), v.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  // Solve sum a_i u_i - sum b_j v_j = 0 and keep sum a_i u_i.
  Matrix system = hstack(u.inclusion(), Scalar(u.field(), -1) * v.inclusion());
  Subspace relations = kernel(system);
  std::vector<Vector> common;
  for (std::size_t k = 0; k < relations.dim(); ++k) {
    Vector rel = relations.basis_vector(k);
    Vector a(rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(u.dim()));
    common.push_back(u.from_coordinates(a));
  }
  return Subspace::span(u.field(), u.ambient_dim(), common);
}

QuotientCoords::QuotientCoords(std::size_t ambient, const Subspace& s) : subspace_(s) {
  if (s.ambient_dim() != ambient) {
    throw std::invalid_argument("quotient: subspace ambient dimension mismatch");
  }
  const Field field = s.field();
  std::vector<bool> is_pivot(ambient, false);
  for (std::size_t p : s.pivots()) {
    is_pivot[p] = true;
  }
  for (std::size_t i = 0; i < ambient; ++i) {
    if (!is_pivot[i]) {
      section_indices_.push_back(i);
    }
  }
  const std::size_t q = section_indices_.size();
  lift_ = Matrix(field, ambient, q);
  for (std::size_t k = 0; k < q; ++k) {
    lift_(section_indices_[k], k) = Scalar::one(field);
  }
  // Column j of project: reduce e_j against the basis, read the section entries.
  project_ = Matrix(field, q, ambient);
  for (std::size_t j = 0; j < ambient; ++j) {
    Vector r = unit_vector(field, ambient, j);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      Scalar coeff = r[s.pivots()[i]];
      if (!coeff.is_zero()) {
        axpy(-coeff, s.basis_vector(i), r);
      }
    }
    for (std::size_t k = 0; k < q; ++k) {
      project_(k, j) = r[section_indices_[k]];
    }
  }
}

Matrix QuotientCoords::section() const {
  return lift_.transpose();
}

Vector QuotientCoords::project(const Vector& v) const {
  return project_ * v;
}

Vector QuotientCoords::lift(const Vector& q) const {
  return lift_ * q;
}

}  // namespace xlie
