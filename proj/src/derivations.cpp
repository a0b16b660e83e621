#include "xlie/derivations.hpp"

#include <functional>
#include <stdexcept>

namespace xlie {

namespace {

using Row = Vector;

// Rows expressing D in Der(g) for a block of unknowns D(r, c) at
// offset + r * n + c.
void append_lie_derivation_rows(const LieAlgebra& g, std::size_t offset, std::size_t width,
                                std::vector<Row>& rows) {
  const std::size_t n = g.dim();
  const Field f = g.field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& sij = g.structure(i, j);
      for (std::size_t r = 0; r < n; ++r) {
        Row row = zero_vector(f, width);
        for (std::size_t c = 0; c < n; ++c) {
          row[offset + r * n + c] += sij[c];
        }
        for (std::size_t k = 0; k < n; ++k) {
          row[offset + k * n + i] -= g.structure(k, j)[r];
          row[offset + k * n + j] -= g.structure(i, k)[r];
        }
        rows.push_back(std::move(row));
      }
    }
  }
}

Subspace solution_space(Field f, std::size_t width, const std::vector<Row>& rows) {
  return kernel(Matrix::from_rows(f, width, rows));
}

// Fills maps/partners from flat and computes the structure constants from
// the concrete bracket, throwing std::logic_error if a bracket leaves the span.
void realize(DerivationSpace& s, const std::function<Vector(const Vector&, const Vector&)>& bracket) {
  const Field f = s.flat.field();
  const std::size_t m = s.flat.dim();
  std::vector<Vector> elems;
  for (std::size_t k = 0; k < m; ++k) {
    Vector v = s.flat.basis_vector(k);
    if (s.is_pair()) {
      Vector a(v.begin(), v.begin() + s.n1 * s.n1);
      Vector b(v.begin() + s.n1 * s.n1, v.end());
      s.maps.push_back(Matrix::unflatten(f, s.n1, s.n1, a));
      s.partners.push_back(Matrix::unflatten(f, s.n0, s.n0, b));
    } else {
      s.maps.push_back(Matrix::unflatten(f, s.n1, s.n0, v));
    }
    elems.push_back(std::move(v));
  }
  LieData data = LieData::zero(f, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      Vector br = bracket(elems[a], elems[b]);
      if (!s.flat.contains(br)) {
        throw std::logic_error(to_string(s.kind) + " space is not closed under the bracket (basis pair " +
                               std::to_string(a) + "," + std::to_string(b) + ")");
      }
      data.set_bracket(a, b, s.flat.coordinates(br));
    }
  }
  s.algebra = LieAlgebra(std::move(data));
}

std::function<Vector(const Vector&, const Vector&)> whitehead_bracket(const CrossedModule& x) {
  const Field f = x.field();
  const std::size_t n1 = x.dim1();
  const std::size_t n0 = x.dim0();
  Matrix d = x.boundary();
  return [=](const Vector& u, const Vector& v) {
    Matrix a = Matrix::unflatten(f, n1, n0, u);
    Matrix b = Matrix::unflatten(f, n1, n0, v);
    return (a * d * b - b * d * a).entries();
  };
}

std::function<Vector(const Vector&, const Vector&)> pair_bracket(const CrossedModule& x) {
  const Field f = x.field();
  const std::size_t n1 = x.dim1();
  const std::size_t n0 = x.dim0();
  return [=](const Vector& u, const Vector& v) {
    auto split = [&](const Vector& w) {
      Vector a(w.begin(), w.begin() + n1 * n1);
      Vector b(w.begin() + n1 * n1, w.end());
      return std::pair{Matrix::unflatten(f, n1, n1, a), Matrix::unflatten(f, n0, n0, b)};
    };
    auto [a1, b1] = split(u);
    auto [a2, b2] = split(v);
    return flatten_pair(a1 * a2 - a2 * a1, b1 * b2 - b2 * b1);
  };
}

// Span of generators inside the full space, with the in_full coordinates.
DerivationSpace class_space(DerivationKind kind, const CrossedModule& x, const DerivationSpace& full,
                            const std::vector<Vector>& generators) {
  DerivationSpace s;
  s.kind = kind;
  s.n1 = x.dim1();
  s.n0 = x.dim0();
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (!full.flat.contains(generators[k])) {
      throw std::logic_error("induced map of basis vector " + std::to_string(k) +
                             " is not a derivation");
    }
  }
  s.flat = Subspace::span(x.field(), full.flat.ambient_dim(), generators);
  std::vector<Vector> coords;
  for (const Vector& v : s.flat.basis_vectors()) {
    coords.push_back(full.flat.coordinates(v));
  }
  s.in_full = Subspace::span(x.field(), full.dim(), coords);
  realize(s, kind == DerivationKind::WhiteheadClass ? whitehead_bracket(x) : pair_bracket(x));
  return s;
}

}  // namespace

std::string to_string(DerivationKind kind) {
  switch (kind) {
    case DerivationKind::Whitehead:
      return "whitehead";
    case DerivationKind::XMod:
      return "xmod";
    case DerivationKind::WhiteheadClass:
      return "whitehead_class";
    case DerivationKind::XModClass:
      return "xmod_class";
  }
  return "unknown";
}

std::optional<DerivationKind> parse_derivation_kind(const std::string& text) {
  for (DerivationKind k : {DerivationKind::Whitehead, DerivationKind::XMod,
                           DerivationKind::WhiteheadClass, DerivationKind::XModClass}) {
    if (to_string(k) == text) {
      return k;
    }
  }
  return std::nullopt;
}

Vector flatten_pair(const Matrix& alpha, const Matrix& beta) {
  return concat(alpha.entries(), beta.entries());
}

bool DerivationSpace::contains(const Matrix& map) const {
  return !is_pair() && map.rows() == n1 && map.cols() == n0 && flat.contains(map.entries());
}

bool DerivationSpace::contains(const Matrix& alpha, const Matrix& beta) const {
  return is_pair() && alpha.rows() == n1 && alpha.cols() == n1 && beta.rows() == n0 &&
         beta.cols() == n0 && flat.contains(flatten_pair(alpha, beta));
}

Vector DerivationSpace::coordinates(const Matrix& map) const {
  if (!contains(map)) {
    throw std::invalid_argument("map is not in the " + to_string(kind) + " space");
  }
  return flat.coordinates(map.entries());
}

Vector DerivationSpace::coordinates(const Matrix& alpha, const Matrix& beta) const {
  if (!contains(alpha, beta)) {
    throw std::invalid_argument("pair is not in the " + to_string(kind) + " space");
  }
  return flat.coordinates(flatten_pair(alpha, beta));
}

DerivationSpace whitehead_derivations(const CrossedModule& x) {
  const Field f = x.field();
  const std::size_t n1 = x.dim1();
  const std::size_t n0 = x.dim0();
  const std::size_t width = n1 * n0;
  // Unknown D(r, c) at r * n0 + c. For a < b:
  // D[e_a, e_b] - [e_a, D e_b] + [e_b, D e_a] = 0.
  std::vector<Row> rows;
  for (std::size_t a = 0; a < n0; ++a) {
    for (std::size_t b = a + 1; b < n0; ++b) {
      const Vector& sab = x.l0().structure(a, b);
      for (std::size_t k = 0; k < n1; ++k) {
        Row row = zero_vector(f, width);
        for (std::size_t c = 0; c < n0; ++c) {
          row[k * n0 + c] += sab[c];
        }
        for (std::size_t r = 0; r < n1; ++r) {
          row[r * n0 + b] -= x.action(a, r)[k];
          row[r * n0 + a] += x.action(b, r)[k];
        }
        rows.push_back(std::move(row));
      }
    }
  }
  DerivationSpace s;
  s.kind = DerivationKind::Whitehead;
  s.n1 = n1;
  s.n0 = n0;
  s.flat = solution_space(f, width, rows);
  s.in_full = Subspace::full(f, s.flat.dim());
  realize(s, whitehead_bracket(x));
  return s;
}

DerivationSpace xmod_derivations(const CrossedModule& x) {
  const Field f = x.field();
  const std::size_t n1 = x.dim1();
  const std::size_t n0 = x.dim0();
  const std::size_t off = n1 * n1;  // beta(r, c) sits at off + r * n0 + c
  const std::size_t width = off + n0 * n0;
  const Matrix& d = x.boundary();
  std::vector<Row> rows;
  append_lie_derivation_rows(x.l1(), 0, width, rows);
  append_lie_derivation_rows(x.l0(), off, width, rows);
  // beta d = d alpha.
  for (std::size_t r = 0; r < n0; ++r) {
    for (std::size_t c = 0; c < n1; ++c) {
      Row row = zero_vector(f, width);
      for (std::size_t k = 0; k < n0; ++k) {
        row[off + r * n0 + k] += d(k, c);
      }
      for (std::size_t k = 0; k < n1; ++k) {
        row[k * n1 + c] -= d(r, k);
      }
      rows.push_back(std::move(row));
    }
  }
  // alpha[e_i, f_j] = [e_i, alpha f_j] + [beta e_i, f_j].
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      const Vector& v = x.action(i, j);
      for (std::size_t k = 0; k < n1; ++k) {
        Row row = zero_vector(f, width);
        for (std::size_t c = 0; c < n1; ++c) {
          row[k * n1 + c] += v[c];
        }
        for (std::size_t r = 0; r < n1; ++r) {
          row[r * n1 + j] -= x.action(i, r)[k];
        }
        for (std::size_t r = 0; r < n0; ++r) {
          row[off + r * n0 + i] -= x.action(r, j)[k];
        }
        rows.push_back(std::move(row));
      }
    }
  }
  DerivationSpace s;
  s.kind = DerivationKind::XMod;
  s.n1 = n1;
  s.n0 = n0;
  s.flat = solution_space(f, width, rows);
  s.in_full = Subspace::full(f, s.flat.dim());
  realize(s, pair_bracket(x));
  return s;
}

Matrix class_derivation(const CrossedModule& x, const Vector& l1) {
  Matrix m(x.field(), x.dim1(), x.dim0());
  for (std::size_t c = 0; c < x.dim0(); ++c) {
    m.set_column(c, x.act(unit_vector(x.field(), x.dim0(), c), l1));
  }
  return m;
}

std::pair<Matrix, Matrix> class_pair(const CrossedModule& x, const Vector& l0) {
  return {x.action_matrix_of(l0), x.l0().ad_of(l0)};
}

DerivationSpace class_preserving_whitehead(const CrossedModule& x) {
  DerivationSpace full = whitehead_derivations(x);
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < x.dim1(); ++j) {
    gens.push_back(class_derivation(x, unit_vector(x.field(), x.dim1(), j)).entries());
  }
  return class_space(DerivationKind::WhiteheadClass, x, full, gens);
}

DerivationSpace class_preserving_xmod(const CrossedModule& x) {
  DerivationSpace full = xmod_derivations(x);
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < x.dim0(); ++i) {
    gens.push_back(flatten_pair(x.action_matrix(i), x.l0().ad(i)));
  }
  return class_space(DerivationKind::XModClass, x, full, gens);
}

CrossedModule actor_from(const CrossedModule& x, const DerivationSpace& w,
                         const DerivationSpace& p) {
  const Field f = x.field();
  const Matrix& d = x.boundary();
  const std::size_t m1 = w.dim();
  const std::size_t m0 = p.dim();
  Matrix boundary(f, m0, m1);
  for (std::size_t j = 0; j < m1; ++j) {
    const Matrix& a = w.maps[j];
    Matrix alpha = a * d;
    Matrix beta = d * a;
    if (!p.contains(alpha, beta)) {
      throw std::logic_error("boundary image of derivation " + std::to_string(j) +
                             " is outside the target space");
    }
    boundary.set_column(j, p.coordinates(alpha, beta));
  }
  std::vector<Vector> action;
  for (std::size_t i = 0; i < m0; ++i) {
    for (std::size_t j = 0; j < m1; ++j) {
      Matrix img = p.maps[i] * w.maps[j] - w.maps[j] * p.partners[i];
      if (!w.contains(img)) {
        throw std::logic_error("action of " + std::to_string(i) + " on " + std::to_string(j) +
                               " leaves the derivation space");
      }
      action.push_back(w.coordinates(img));
    }
  }
  return CrossedModule(
      XModData{w.algebra.data(), p.algebra.data(), std::move(boundary), std::move(action)});
}

CrossedModule actor(const CrossedModule& x) {
  return actor_from(x, whitehead_derivations(x), xmod_derivations(x));
}

CrossedModule class_actor(const CrossedModule& x) {
  return actor_from(x, class_preserving_whitehead(x), class_preserving_xmod(x));
}

SubXMod inner_actor(const CrossedModule& x) {
  const Field f = x.field();
  DerivationSpace w = whitehead_derivations(x);
  DerivationSpace p = xmod_derivations(x);
  CrossedModule act = actor_from(x, w, p);
  std::vector<Vector> c1;
  for (std::size_t j = 0; j < x.dim1(); ++j) {
    c1.push_back(w.coordinates(class_derivation(x, unit_vector(f, x.dim1(), j))));
  }
  std::vector<Vector> c0;
  for (std::size_t i = 0; i < x.dim0(); ++i) {
    auto [alpha, beta] = class_pair(x, unit_vector(f, x.dim0(), i));
    c0.push_back(p.coordinates(alpha, beta));
  }
  SubXMod inner{Subspace::span(f, w.dim(), c1), Subspace::span(f, p.dim(), c0), false};

  DerivationSpace cw = class_preserving_whitehead(x);
  DerivationSpace cp = class_preserving_xmod(x);
  std::string err = check_subxmod(act, cw.in_full, cp.in_full);
  if (!err.empty()) {
    throw std::logic_error("class-preserving part is not a subcrossed module of the actor: " + err);
  }
  if (!cw.in_full.contains(inner.s1) || !cp.in_full.contains(inner.s0)) {
    throw std::logic_error("inner actor is not contained in the class-preserving actor");
  }
  err = check_ideal(act, inner.s1, inner.s0);
  if (!err.empty()) {
    throw std::logic_error("inner actor is not an ideal: " + err);
  }
  inner.ideal = true;
  return inner;
}

}  // namespace xlie
