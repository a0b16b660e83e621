#include "xlie/lie_algebra.hpp"

#include <sstream>

namespace xlie {

namespace {

std::string join_indices(const std::vector<std::size_t>& indices) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    os << (k ? "," : "") << indices[k];
  }
  os << ")";
  return os.str();
}

// [e_i, v] for a coordinate vector v, straight from the tensor.
Vector bracket_basis(const LieData& d, std::size_t i, const Vector& v) {
  Vector out = zero_vector(d.field, d.dim);
  for (std::size_t k = 0; k < d.dim; ++k) {
    if (!v[k].is_zero()) {
      axpy(v[k], d.structure[i * d.dim + k], out);
    }
  }
  return out;
}

}  // namespace

std::string Violation::to_string() const {
  std::string s = axiom + " at " + join_indices(indices);
  if (!detail.empty()) {
    s += ": " + detail;
  }
  return s;
}

std::string ValidationReport::to_string() const {
  if (ok()) {
    return "ok";
  }
  std::string s;
  for (std::size_t k = 0; k < violations.size(); ++k) {
    s += (k ? "; " : "") + violations[k].to_string();
  }
  return s;
}

LieData LieData::zero(Field field, std::size_t dim) {
  return LieData{field, dim, std::vector<Vector>(dim * dim, zero_vector(field, dim))};
}

void LieData::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  structure.at(i * dim + j) = v;
  structure.at(j * dim + i) = scale(Scalar(field, -1), v);
}

ValidationReport validate_lie(const LieData& d) {
  ValidationReport report;
  const std::size_t n = d.dim;
  if (d.structure.size() != n * n) {
    report.violations.push_back({"shape", {}, "structure tensor must have dim^2 entries"});
    return report;
  }
  for (std::size_t k = 0; k < n * n; ++k) {
    if (d.structure[k].size() != n) {
      report.violations.push_back({"shape", {k / n, k % n}, "bracket vector has wrong length"});
      return report;
    }
    for (const Scalar& s : d.structure[k]) {
      if (!(s.field() == d.field)) {
        report.violations.push_back({"field", {k / n, k % n}, "coefficient over wrong field"});
        return report;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(d.structure[i * n + i])) {
      report.violations.push_back({"alternating", {i}, "[e_i, e_i] != 0"});
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!is_zero(add(d.structure[i * n + j], d.structure[j * n + i]))) {
        report.violations.push_back({"antisymmetry", {i, j}, "[e_i, e_j] != -[e_j, e_i]"});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector sum = bracket_basis(d, i, d.structure[j * n + k]);
        sum = add(sum, bracket_basis(d, j, d.structure[k * n + i]));
        sum = add(sum, bracket_basis(d, k, d.structure[i * n + j]));
        if (!is_zero(sum)) {
          report.violations.push_back({"jacobi", {i, j, k}, "cyclic sum is nonzero"});
        }
      }
    }
  }
  return report;
}

LieAlgebra::LieAlgebra(LieData data) : data_(std::move(data)) {
  ValidationReport report = validate_lie(data_);
  if (!report.ok()) {
    throw InvalidStructure("not a Lie algebra", std::move(report));
  }
  const std::size_t n = data_.dim;
  ad_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(data_.field, n, n);
    for (std::size_t k = 0; k < n; ++k) {
      m.set_column(k, structure(i, k));
    }
    ad_.push_back(std::move(m));
  }
}

LieAlgebra LieAlgebra::abelian(Field field, std::size_t dim) {
  return LieAlgebra(LieData::zero(field, dim));
}

Matrix LieAlgebra::ad_of(const Vector& x) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!x[i].is_zero()) {
      m = m + x[i] * ad_[i];
    }
  }
  return m;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) {
    throw std::invalid_argument("bracket: vector length mismatch");
  }
  Vector out = zero_vector(field(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!y[j].is_zero()) {
        axpy(x[i] * y[j], structure(i, j), out);
      }
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const Vector& v : data_.structure) {
    if (!is_zero(v)) {
      return false;
    }
  }
  return true;
}

Subspace center(const LieAlgebra& g) {
  // v is central iff [e_j, v] = 0 for every j: kernel of the stacked ad(e_j).
  Matrix stacked(g.field(), 0, g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    stacked = vstack(stacked, g.ad(j));
  }
  return kernel(stacked);
}

Subspace derived_subalgebra(const LieAlgebra& g) {
  return bracket_span(g, Subspace::full(g.field(), g.dim()), Subspace::full(g.field(), g.dim()));
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& s, const Subspace& t) {
  std::vector<Vector> brackets;
  for (const Vector& a : s.basis_vectors()) {
    for (const Vector& b : t.basis_vectors()) {
      brackets.push_back(g.bracket(a, b));
    }
  }
  return Subspace::span(g.field(), g.dim(), brackets);
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_span(g, s, s));
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_span(g, Subspace::full(g.field(), g.dim()), s));
}

LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s) {
  if (!is_subalgebra(g, s)) {
    throw std::invalid_argument("subspace is not closed under the bracket");
  }
  LieData data = LieData::zero(g.field(), s.dim());
  std::vector<Vector> basis = s.basis_vectors();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      data.structure[i * s.dim() + j] = s.coordinates(g.bracket(basis[i], basis[j]));
    }
  }
  return LieAlgebra(std::move(data));
}

QuotientAlgebra quotient_algebra(const LieAlgebra& g, const Subspace& s) {
  if (!is_ideal(g, s)) {
    throw std::invalid_argument("quotient by a subspace that is not an ideal");
  }
  QuotientCoords coords(g.dim(), s);
  const std::size_t q = coords.dim();
  LieData data = LieData::zero(g.field(), q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      Vector x = coords.lift(unit_vector(g.field(), q, a));
      Vector y = coords.lift(unit_vector(g.field(), q, b));
      data.structure[a * q + b] = coords.project(g.bracket(x, y));
    }
  }
  return QuotientAlgebra{LieAlgebra(std::move(data)), std::move(coords)};
}

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h) {
  if (!(g.field() == h.field())) {
    throw std::invalid_argument("direct sum over different fields");
  }
  const std::size_t n = g.dim() + h.dim();
  LieData data = LieData::zero(g.field(), n);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      data.structure[i * n + j] = concat(g.structure(i, j), zero_vector(g.field(), h.dim()));
    }
  }
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = 0; j < h.dim(); ++j) {
      data.structure[(g.dim() + i) * n + g.dim() + j] =
          concat(zero_vector(g.field(), g.dim()), h.structure(i, j));
    }
  }
  return LieAlgebra(std::move(data));
}

SeriesResult lie_series(const LieAlgebra& g, SeriesKind kind) {
  const Subspace whole = Subspace::full(g.field(), g.dim());
  SeriesResult result;
  result.terms.push_back(whole);
  // A strictly descending chain in dimension n has at most n + 1 terms.
  for (std::size_t step = 0; step <= g.dim() + 1; ++step) {
    const Subspace& last = result.terms.back();
    if (last.is_zero()) {
      result.terminates = true;
      result.index = result.terms.size() - 1;
      return result;
    }
    Subspace next = kind == SeriesKind::LowerCentral ? bracket_span(g, whole, last)
                                                     : bracket_span(g, last, last);
    if (next == last) {
      return result;
    }
    result.terms.push_back(std::move(next));
  }
  throw std::logic_error("lie_series: chain failed to stabilize");
}

DerivationAlgebra derivation_algebra(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const Field f = g.field();
  // Unknown D(r, c) sits at column r * n + c. One block of n rows per pair i < j:
  // D[e_i, e_j] - [D e_i, e_j] - [e_i, D e_j] = 0.
  Matrix system(f, 0, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix block(f, n, n * n);
      const Vector& sij = g.structure(i, j);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          block(r, r * n + c) += sij[c];
        }
        for (std::size_t k = 0; k < n; ++k) {
          // D e_i = sum_k D(k, i) e_k, so [D e_i, e_j] = sum_k D(k, i) [e_k, e_j].
          block(r, k * n + i) -= g.structure(k, j)[r];
          block(r, k * n + j) -= g.structure(i, k)[r];
        }
      }
      system = vstack(system, block);
    }
  }
  Subspace flat = kernel(system);
  std::vector<Matrix> basis;
  for (std::size_t k = 0; k < flat.dim(); ++k) {
    basis.push_back(Matrix::unflatten(f, n, n, flat.basis_vector(k)));
  }
  const std::size_t m = basis.size();
  LieData data = LieData::zero(f, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Matrix comm = basis[a] * basis[b] - basis[b] * basis[a];
      data.structure[a * m + b] = flat.coordinates(comm.entries());
    }
  }
  return DerivationAlgebra{std::move(basis), std::move(flat), LieAlgebra(std::move(data))};
}

Subspace inner_derivations(const LieAlgebra& g, const DerivationAlgebra& der) {
  std::vector<Vector> coords;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    coords.push_back(der.coordinates(g.ad(i)));
  }
  return Subspace::span(g.field(), der.basis.size(), coords);
}

Subspace inner_derivations(const LieAlgebra& g) {
  return inner_derivations(g, derivation_algebra(g));
}

std::string check_lie_hom(const LieAlgebra& source, const LieAlgebra& target, const Matrix& map) {
  if (map.rows() != target.dim() || map.cols() != source.dim()) {
    return "map has the wrong shape";
  }
  for (std::size_t i = 0; i < source.dim(); ++i) {
    for (std::size_t j = i + 1; j < source.dim(); ++j) {
      Vector lhs = map * source.structure(i, j);
      Vector rhs = target.bracket(map.column(i), map.column(j));
      if (lhs != rhs) {
        return "bracket not preserved on basis pair (" + std::to_string(i) + "," +
               std::to_string(j) + ")";
      }
    }
  }
  return "";
}

Vector LieCommutatorData::commutator(const LieAlgebra& g, std::size_t a, std::size_t b) const {
  const QuotientCoords& q = central_quotient.coords;
  Vector x = q.lift(unit_vector(g.field(), q.dim(), a));
  Vector y = q.lift(unit_vector(g.field(), q.dim(), b));
  return derived.coordinates(g.bracket(x, y));
}

LieCommutatorData lie_commutator_data(const LieAlgebra& g) {
  Subspace derived = derived_subalgebra(g);
  LieAlgebra derived_alg = subalgebra(g, derived);
  return LieCommutatorData{quotient_algebra(g, center(g)), std::move(derived),
                           std::move(derived_alg)};
}

LieIsoclinismVerdict lie_isoclinism_verify(const LieAlgebra& g, const LieAlgebra& h,
                                           const LieIsoclinismWitness& w) {
  LieCommutatorData cg = lie_commutator_data(g);
  LieCommutatorData ch = lie_commutator_data(h);
  const std::size_t qg = cg.central_quotient.coords.dim();
  const std::size_t qh = ch.central_quotient.coords.dim();
  if (w.eta.rows() != qh || w.eta.cols() != qg || w.xi.rows() != ch.derived.dim() ||
      w.xi.cols() != cg.derived.dim()) {
    throw std::invalid_argument("isoclinism witness has the wrong shape");
  }
  auto fail = [](std::string why) { return LieIsoclinismVerdict{false, std::move(why)}; };
  if (!inverse(w.eta)) {
    return fail("eta is not bijective");
  }
  if (!inverse(w.xi)) {
    return fail("xi is not bijective");
  }
  if (std::string e = check_lie_hom(cg.central_quotient.algebra, ch.central_quotient.algebra,
                                    w.eta);
      !e.empty()) {
    return fail("eta: " + e);
  }
  if (std::string e = check_lie_hom(cg.derived_algebra, ch.derived_algebra, w.xi); !e.empty()) {
    return fail("xi: " + e);
  }
  for (std::size_t a = 0; a < qg; ++a) {
    for (std::size_t b = a + 1; b < qg; ++b) {
      Vector lhs = w.xi * cg.commutator(g, a, b);
      // c_h(eta a, eta b): lift both images and bracket in h.
      const QuotientCoords& q = ch.central_quotient.coords;
      Vector x = q.lift(w.eta.column(a));
      Vector y = q.lift(w.eta.column(b));
      Vector rhs = ch.derived.coordinates(h.bracket(x, y));
      if (lhs != rhs) {
        return fail("commutator square fails on pair (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
      }
    }
  }
  return LieIsoclinismVerdict{true, ""};
}

}  // namespace xlie
