#ifndef XLIE_LIE_ALGEBRA_HPP_
#define XLIE_LIE_ALGEBRA_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "xlie/matrix.hpp"
#include "xlie/subspace.hpp"

namespace xlie {

// One failed identity with the basis indices that witness it.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;
  std::string detail;

  std::string to_string() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Thrown when a structure fails the axioms it is required to satisfy.
class InvalidStructure : public std::invalid_argument {
 public:
  InvalidStructure(const std::string& what, ValidationReport report)
      : std::invalid_argument(what + ": " + report.to_string()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Unvalidated structure constants: structure[i * dim + j] = [e_i, e_j].
struct LieData {
  Field field = Field::rational();
  std::size_t dim = 0;
  std::vector<Vector> structure;

  static LieData zero(Field field, std::size_t dim);
  // Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vector& v);
};

// Reports every violated identity (shape, alternating, antisymmetry, Jacobi).
ValidationReport validate_lie(const LieData& data);

// A finite-dimensional Lie algebra given by alternating structure constants
// that satisfy the Jacobi identity. Immutable.
class LieAlgebra {
 public:
  LieAlgebra() : LieAlgebra(LieData::zero(Field::rational(), 0)) {}
  // Throws InvalidStructure when validate_lie(data) is not ok.
  explicit LieAlgebra(LieData data);

  static LieAlgebra abelian(Field field, std::size_t dim);

  const Field& field() const { return data_.field; }
  std::size_t dim() const { return data_.dim; }
  const LieData& data() const { return data_; }
  const Vector& structure(std::size_t i, std::size_t j) const {
    return data_.structure[i * data_.dim + j];
  }
  // Matrix of ad(e_i).
  const Matrix& ad(std::size_t i) const { return ad_[i]; }
  Matrix ad_of(const Vector& x) const;

  Vector bracket(const Vector& x, const Vector& y) const;
  bool is_abelian() const;

 private:
  LieData data_;
  std::vector<Matrix> ad_;
};

Subspace center(const LieAlgebra& g);
Subspace derived_subalgebra(const LieAlgebra& g);
// Span of [a, b] over basis vectors a of s and b of t.
Subspace bracket_span(const LieAlgebra& g, const Subspace& s, const Subspace& t);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
// The subalgebra s written in its canonical basis. Throws if s is not closed.
LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s);

struct QuotientAlgebra {
  LieAlgebra algebra;
  QuotientCoords coords;
};
// g / s in the coordinates of quotient_coords. Throws if s is not an ideal.
QuotientAlgebra quotient_algebra(const LieAlgebra& g, const Subspace& s);
LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h);

enum class SeriesKind { LowerCentral, Derived };

struct SeriesResult {
  // Lower central: terms[0] = g, terms[k] = [g, terms[k-1]].
  // Derived: terms[0] = g, terms[k] = [terms[k-1], terms[k-1]].
  std::vector<Subspace> terms;
  bool terminates = false;
  // Nilpotency class (least c with terms[c] = 0) or derived length (least n
  // with terms[n] = 0); meaningful only when terminates.
  std::size_t index = 0;
};

SeriesResult lie_series(const LieAlgebra& g, SeriesKind kind);

// Der(g): a basis of n x n derivation matrices and the Lie algebra they form
// under the commutator, in that basis.
struct DerivationAlgebra {
  std::vector<Matrix> basis;
  Subspace flat;  // row-major flattened basis; basis[k] is flat's k-th row
  LieAlgebra algebra;

  Vector coordinates(const Matrix& d) const { return flat.coordinates(d.entries()); }
};

DerivationAlgebra derivation_algebra(const LieAlgebra& g);
// Span of ad(e_i) inside the coordinates of der.
Subspace inner_derivations(const LieAlgebra& g, const DerivationAlgebra& der);
Subspace inner_derivations(const LieAlgebra& g);

// Empty string on success, otherwise the first failing basis pair.
std::string check_lie_hom(const LieAlgebra& source, const LieAlgebra& target, const Matrix& map);

// Both quotient g/Z(g) and derived subalgebra [g,g], in canonical coordinates.
struct LieCommutatorData {
  QuotientAlgebra central_quotient;
  Subspace derived;
  LieAlgebra derived_algebra;

  // Commutator map g/Z(g) x g/Z(g) -> [g,g] in derived coordinates.
  Vector commutator(const LieAlgebra& g, std::size_t a, std::size_t b) const;
};

LieCommutatorData lie_commutator_data(const LieAlgebra& g);

// eta: g/Z(g) -> h/Z(h), xi: [g,g] -> [h,h] in the canonical coordinates above.
struct LieIsoclinismWitness {
  Matrix eta;
  Matrix xi;
};

struct LieIsoclinismVerdict {
  bool verified = false;
  std::string violation;
};

// Throws std::invalid_argument if the matrices have the wrong shapes.
LieIsoclinismVerdict lie_isoclinism_verify(const LieAlgebra& g, const LieAlgebra& h,
                                           const LieIsoclinismWitness& w);

}  // namespace xlie

#endif  // XLIE_LIE_ALGEBRA_HPP_
