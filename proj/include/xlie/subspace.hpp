#ifndef XLIE_SUBSPACE_HPP_
#define XLIE_SUBSPACE_HPP_

#include <cstddef>
#include <vector>

#include "xlie/matrix.hpp"

namespace xlie {

// A subspace of K^n held by its canonical basis: the nonzero rows of the
// reduced row echelon form. Two subspaces are equal iff those bases agree.
class Subspace {
 public:
  Subspace() : Subspace(Field::rational(), 0) {}
  // The zero subspace of K^ambient.
  Subspace(Field field, std::size_t ambient);

  static Subspace zero(Field field, std::size_t ambient) { return Subspace(field, ambient); }
  static Subspace full(Field field, std::size_t ambient);
  static Subspace span(Field field, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // ambient x dim matrix whose columns are the basis vectors.
  Matrix inclusion() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of a member in the canonical basis (the entries at the pivot
  // columns). Throws std::invalid_argument if v is not in the subspace.
  Vector coordinates(const Vector& v) const;
  Vector from_coordinates(const Vector& coords) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  // Residual of v after clearing pivot entries with the basis rows.
  Vector reduce(const Vector& v) const;

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
// Image of a subspace under a linear map.
Subspace image(const Matrix& map, const Subspace& s);
Subspace column_space(const Matrix& m);
// Throws std::invalid_argument on ambient or field mismatch.
Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

// Coordinates on K^n / S. The section is spanned by the standard basis
// vectors at the non-pivot columns of S's canonical basis.
class QuotientCoords {
 public:
  QuotientCoords() = default;
  QuotientCoords(std::size_t ambient, const Subspace& s);

  std::size_t ambient_dim() const { return subspace_.ambient_dim(); }
  std::size_t dim() const { return section_indices_.size(); }
  const Subspace& subspace() const { return subspace_; }
  // Ambient indices of the section vectors.
  const std::vector<std::size_t>& section_indices() const { return section_indices_; }
  Matrix section() const;
  const Matrix& project_matrix() const { return project_; }
  const Matrix& lift_matrix() const { return lift_; }

  Vector project(const Vector& v) const;
  Vector lift(const Vector& q) const;

 private:
  Subspace subspace_;
  std::vector<std::size_t> section_indices_;
  Matrix project_;
  Matrix lift_;
};

inline QuotientCoords quotient_coords(std::size_t ambient, const Subspace& s) {
  return QuotientCoords(ambient, s);
}

}  // namespace xlie

#endif  // XLIE_SUBSPACE_HPP_
