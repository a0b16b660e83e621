#include "xlie/crossed_module.hpp"

#include <stdexcept>

namespace xlie {

namespace {

Vector raw_bracket(const LieData& d, const Vector& x, const Vector& y) {
  Vector out = zero_vector(d.field, d.dim);
  for (std::size_t i = 0; i < d.dim; ++i) {
    if (x[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < d.dim; ++j) {
      if (!y[j].is_zero()) {
        axpy(x[i] * y[j], d.structure[i * d.dim + j], out);
      }
    }
  }
  return out;
}

Vector raw_act(const XModData& d, const Vector& x0, const Vector& x1) {
  const std::size_t n1 = d.l1.dim;
  Vector out = zero_vector(d.l1.field, n1);
  for (std::size_t i = 0; i < d.l0.dim; ++i) {
    if (x0[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < n1; ++j) {
      if (!x1[j].is_zero()) {
        axpy(x0[i] * x1[j], d.action[i * n1 + j], out);
      }
    }
  }
  return out;
}

void prefix_into(ValidationReport& out, const ValidationReport& in, const std::string& prefix) {
  for (const Violation& v : in.violations) {
    out.violations.push_back({prefix + v.axiom, v.indices, v.detail});
  }
}

// Span of [a0, a1] over basis vectors a0 of s0 and a1 of s1.
Subspace action_span(const CrossedModule& x, const Subspace& s0, const Subspace& s1) {
  std::vector<Vector> values;
  for (const Vector& a0 : s0.basis_vectors()) {
    for (const Vector& a1 : s1.basis_vectors()) {
      values.push_back(x.act(a0, a1));
    }
  }
  return Subspace::span(x.field(), x.dim1(), values);
}

Subspace full1(const CrossedModule& x) {
  return Subspace::full(x.field(), x.dim1());
}

Subspace full0(const CrossedModule& x) {
  return Subspace::full(x.field(), x.dim0());
}

// Coordinates of the subspace inner (of the ambient space) inside outer's basis.
Subspace relative(const Subspace& outer, const Subspace& inner) {
  std::vector<Vector> coords;
  for (const Vector& v : inner.basis_vectors()) {
    coords.push_back(outer.coordinates(v));
  }
  return Subspace::span(outer.field(), outer.dim(), coords);
}

}  // namespace

ValidationReport validate_xmod(const XModData& d) {
  ValidationReport report;
  prefix_into(report, validate_lie(d.l1), "L1.");
  prefix_into(report, validate_lie(d.l0), "L0.");
  for (const Violation& v : report.violations) {
    if (v.axiom == "L1.shape" || v.axiom == "L0.shape" || v.axiom == "L1.field" ||
        v.axiom == "L0.field") {
      return report;
    }
  }
  const std::size_t n1 = d.l1.dim;
  const std::size_t n0 = d.l0.dim;
  const Field f = d.l1.field;
  if (!(d.l0.field == f) || !(d.boundary.field() == f)) {
    report.violations.push_back({"field", {}, "components over different fields"});
    return report;
  }
  if (d.boundary.rows() != n0 || d.boundary.cols() != n1) {
    report.violations.push_back({"shape", {}, "boundary must be dim(L0) x dim(L1)"});
    return report;
  }
  if (d.action.size() != n0 * n1) {
    report.violations.push_back({"shape", {}, "action tensor must have dim(L0)*dim(L1) entries"});
    return report;
  }
  for (std::size_t k = 0; k < d.action.size(); ++k) {
    if (d.action[k].size() != n1) {
      report.violations.push_back({"shape", {k / n1, k % n1}, "action vector has wrong length"});
      return report;
    }
    for (const Scalar& s : d.action[k]) {
      if (!(s.field() == f)) {
        report.violations.push_back({"field", {k / n1, k % n1}, "action over wrong field"});
        return report;
      }
    }
  }
  auto e0 = [&](std::size_t i) { return unit_vector(f, n0, i); };
  auto e1 = [&](std::size_t j) { return unit_vector(f, n1, j); };
  const Matrix& dm = d.boundary;

  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = a + 1; b < n1; ++b) {
      Vector lhs = dm * d.l1.structure[a * n1 + b];
      Vector rhs = raw_bracket(d.l0, dm.column(a), dm.column(b));
      if (lhs != rhs) {
        report.violations.push_back({"boundary-homomorphism", {a, b}, "d[f_a,f_b] != [d f_a, d f_b]"});
      }
    }
  }
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = i + 1; j < n0; ++j) {
      for (std::size_t k = 0; k < n1; ++k) {
        Vector lhs = raw_act(d, d.l0.structure[i * n0 + j], e1(k));
        Vector rhs = sub(raw_act(d, e0(i), d.action[j * n1 + k]),
                         raw_act(d, e0(j), d.action[i * n1 + k]));
        if (lhs != rhs) {
          report.violations.push_back(
              {"action-representation", {i, j, k}, "[[e_i,e_j],f_k] != [e_i,[e_j,f_k]] - [e_j,[e_i,f_k]]"});
        }
      }
    }
  }
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      for (std::size_t k = j + 1; k < n1; ++k) {
        Vector lhs = raw_act(d, e0(i), d.l1.structure[j * n1 + k]);
        Vector rhs = add(raw_bracket(d.l1, d.action[i * n1 + j], e1(k)),
                         raw_bracket(d.l1, e1(j), d.action[i * n1 + k]));
        if (lhs != rhs) {
          report.violations.push_back(
              {"action-derivation", {i, j, k}, "[e_i,[f_j,f_k]] != [[e_i,f_j],f_k] + [f_j,[e_i,f_k]]"});
        }
      }
    }
  }
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      Vector lhs = dm * d.action[i * n1 + j];
      Vector rhs = raw_bracket(d.l0, e0(i), dm.column(j));
      if (lhs != rhs) {
        report.violations.push_back({"equivariance", {i, j}, "d([e_i,f_j]) != [e_i, d f_j]"});
      }
    }
  }
  for (std::size_t j = 0; j < n1; ++j) {
    for (std::size_t k = 0; k < n1; ++k) {
      Vector lhs = raw_act(d, dm.column(j), e1(k));
      const Vector& rhs = d.l1.structure[j * n1 + k];
      if (lhs != rhs) {
        report.violations.push_back({"peiffer", {j, k}, "[d f_j, f_k] != [f_j, f_k]"});
      }
    }
  }
  return report;
}

CrossedModule::CrossedModule(XModData data) {
  ValidationReport report = validate_xmod(data);
  if (!report.ok()) {
    throw InvalidStructure("not a crossed module", std::move(report));
  }
  l1_ = LieAlgebra(std::move(data.l1));
  l0_ = LieAlgebra(std::move(data.l0));
  boundary_ = std::move(data.boundary);
  action_ = std::move(data.action);
  for (std::size_t i = 0; i < dim0(); ++i) {
    Matrix m(field(), dim1(), dim1());
    for (std::size_t j = 0; j < dim1(); ++j) {
      m.set_column(j, action(i, j));
    }
    action_matrices_.push_back(std::move(m));
  }
}

CrossedModule CrossedModule::zero(Field field) {
  return CrossedModule(XModData{LieData::zero(field, 0), LieData::zero(field, 0),
                                Matrix(field, 0, 0), {}});
}

Matrix CrossedModule::action_matrix_of(const Vector& x0) const {
  Matrix m(field(), dim1(), dim1());
  for (std::size_t i = 0; i < dim0(); ++i) {
    if (!x0[i].is_zero()) {
      m = m + x0[i] * action_matrices_[i];
    }
  }
  return m;
}

Vector CrossedModule::act(const Vector& x0, const Vector& x1) const {
  if (x0.size() != dim0() || x1.size() != dim1()) {
    throw std::invalid_argument("act: vector length mismatch");
  }
  return action_matrix_of(x0) * x1;
}

XModData CrossedModule::data() const {
  return XModData{l1_.data(), l0_.data(), boundary_, action_};
}

std::string check_subxmod(const CrossedModule& x, const Subspace& s1, const Subspace& s0) {
  if (s1.ambient_dim() != x.dim1() || s0.ambient_dim() != x.dim0()) {
    return "subspaces have the wrong ambient dimension";
  }
  if (!is_subalgebra(x.l1(), s1)) {
    return "degree-1 part is not a subalgebra";
  }
  if (!is_subalgebra(x.l0(), s0)) {
    return "degree-0 part is not a subalgebra";
  }
  if (!s0.contains(image(x.boundary(), s1))) {
    return "boundary does not map the degree-1 part into the degree-0 part";
  }
  if (!s1.contains(action_span(x, s0, s1))) {
    return "degree-0 part does not preserve the degree-1 part";
  }
  return "";
}

std::string check_ideal(const CrossedModule& x, const Subspace& s1, const Subspace& s0) {
  if (std::string e = check_subxmod(x, s1, s0); !e.empty()) {
    return e;
  }
  if (!is_ideal(x.l1(), s1)) {
    return "degree-1 part is not an ideal of L1";
  }
  if (!is_ideal(x.l0(), s0)) {
    return "degree-0 part is not an ideal of L0";
  }
  if (!s1.contains(action_span(x, full0(x), s1))) {
    return "[L0, M1] is not inside M1";
  }
  if (!s1.contains(action_span(x, s0, full1(x)))) {
    return "[M0, L1] is not inside M1";
  }
  return "";
}

SubXMod make_subxmod(const CrossedModule& x, Subspace s1, Subspace s0) {
  if (std::string e = check_subxmod(x, s1, s0); !e.empty()) {
    throw std::invalid_argument("not a subcrossed module: " + e);
  }
  bool ideal = check_ideal(x, s1, s0).empty();
  return SubXMod{std::move(s1), std::move(s0), ideal};
}

SubXMod make_ideal(const CrossedModule& x, Subspace s1, Subspace s0) {
  if (std::string e = check_ideal(x, s1, s0); !e.empty()) {
    throw std::invalid_argument("not an ideal: " + e);
  }
  return SubXMod{std::move(s1), std::move(s0), true};
}

SubXMod whole(const CrossedModule& x) {
  return SubXMod{full1(x), full0(x), true};
}

SubXMod zero_sub(const CrossedModule& x) {
  return SubXMod{Subspace::zero(x.field(), x.dim1()), Subspace::zero(x.field(), x.dim0()), true};
}

bool contains(const SubXMod& outer, const SubXMod& inner) {
  return outer.s1.contains(inner.s1) && outer.s0.contains(inner.s0);
}

CrossedModule restrict_xmod(const CrossedModule& x, const SubXMod& m) {
  if (std::string e = check_subxmod(x, m.s1, m.s0); !e.empty()) {
    throw std::invalid_argument("restrict_xmod: " + e);
  }
  LieAlgebra l1 = subalgebra(x.l1(), m.s1);
  LieAlgebra l0 = subalgebra(x.l0(), m.s0);
  const std::size_t k1 = m.s1.dim();
  const std::size_t k0 = m.s0.dim();
  Matrix boundary(x.field(), k0, k1);
  std::vector<Vector> b1 = m.s1.basis_vectors();
  std::vector<Vector> b0 = m.s0.basis_vectors();
  for (std::size_t j = 0; j < k1; ++j) {
    boundary.set_column(j, m.s0.coordinates(x.boundary() * b1[j]));
  }
  std::vector<Vector> action;
  for (std::size_t i = 0; i < k0; ++i) {
    for (std::size_t j = 0; j < k1; ++j) {
      action.push_back(m.s1.coordinates(x.act(b0[i], b1[j])));
    }
  }
  return CrossedModule(XModData{l1.data(), l0.data(), std::move(boundary), std::move(action)});
}

std::string check_morphism(const CrossedModule& source, const CrossedModule& target,
                           const XModMorphism& m) {
  if (m.alpha.rows() != target.dim1() || m.alpha.cols() != source.dim1() ||
      m.beta.rows() != target.dim0() || m.beta.cols() != source.dim0()) {
    return "morphism matrices have the wrong shape";
  }
  if (std::string e = check_lie_hom(source.l1(), target.l1(), m.alpha); !e.empty()) {
    return "alpha: " + e;
  }
  if (std::string e = check_lie_hom(source.l0(), target.l0(), m.beta); !e.empty()) {
    return "beta: " + e;
  }
  if (!(m.beta * source.boundary() == target.boundary() * m.alpha)) {
    return "boundary square does not commute";
  }
  for (std::size_t i = 0; i < source.dim0(); ++i) {
    for (std::size_t j = 0; j < source.dim1(); ++j) {
      Vector lhs = m.alpha * source.action(i, j);
      Vector rhs = target.act(m.beta.column(i), m.alpha.column(j));
      if (lhs != rhs) {
        return "action not preserved on basis pair (" + std::to_string(i) + "," +
               std::to_string(j) + ")";
      }
    }
  }
  return "";
}

bool is_isomorphism(const CrossedModule& source, const CrossedModule& target,
                    const XModMorphism& m) {
  return check_morphism(source, target, m).empty() && inverse(m.alpha) && inverse(m.beta);
}

XModMorphism identity_morphism(const CrossedModule& x) {
  return XModMorphism{Matrix::identity(x.field(), x.dim1()), Matrix::identity(x.field(), x.dim0())};
}

XModMorphism compose(const XModMorphism& second, const XModMorphism& first) {
  return XModMorphism{second.alpha * first.alpha, second.beta * first.beta};
}

Subspace fixed_points(const CrossedModule& x) {
  Matrix stacked(x.field(), 0, x.dim1());
  for (std::size_t i = 0; i < x.dim0(); ++i) {
    stacked = vstack(stacked, x.action_matrix(i));
  }
  return kernel(stacked);
}

Subspace stabilizer(const CrossedModule& x) {
  // Row block j maps l0 to [l0, f_j]: column i of the block is [e_i, f_j].
  Matrix stacked(x.field(), 0, x.dim0());
  for (std::size_t j = 0; j < x.dim1(); ++j) {
    Matrix block(x.field(), x.dim1(), x.dim0());
    for (std::size_t i = 0; i < x.dim0(); ++i) {
      block.set_column(i, x.action(i, j));
    }
    stacked = vstack(stacked, block);
  }
  return kernel(stacked);
}

Subspace central_stabilizer(const CrossedModule& x) {
  return subspace_intersect(stabilizer(x), center(x.l0()));
}

SubXMod center_xmod(const CrossedModule& x) {
  Subspace s1 = fixed_points(x);
  Subspace s0 = central_stabilizer(x);
  if (std::string e = check_ideal(x, s1, s0); !e.empty()) {
    throw std::logic_error("center is not an ideal: " + e);
  }
  return SubXMod{std::move(s1), std::move(s0), true};
}

Subspace displacement(const CrossedModule& x) {
  return action_span(x, full0(x), full1(x));
}

SubXMod commutator_xmod(const CrossedModule& x) {
  return commutator_ideals(x, whole(x), whole(x));
}

SubXMod commutator_ideals(const CrossedModule& x, const SubXMod& m, const SubXMod& n) {
  if (!check_ideal(x, m.s1, m.s0).empty() || !check_ideal(x, n.s1, n.s0).empty()) {
    throw std::invalid_argument("commutator_ideals: arguments must be ideals");
  }
  Subspace s1 = subspace_sum(action_span(x, m.s0, n.s1), action_span(x, n.s0, m.s1));
  Subspace s0 = bracket_span(x.l0(), m.s0, n.s0);
  if (std::string e = check_ideal(x, s1, s0); !e.empty()) {
    throw std::logic_error("commutator of ideals is not an ideal: " + e);
  }
  return SubXMod{std::move(s1), std::move(s0), true};
}

QuotientXMod quotient_xmod(const CrossedModule& x, const SubXMod& n) {
  if (std::string e = check_ideal(x, n.s1, n.s0); !e.empty()) {
    throw std::invalid_argument("quotient by a non-ideal: " + e);
  }
  QuotientAlgebra a1 = quotient_algebra(x.l1(), n.s1);
  QuotientAlgebra a0 = quotient_algebra(x.l0(), n.s0);
  const QuotientCoords& q1 = a1.coords;
  const QuotientCoords& q0 = a0.coords;
  Matrix boundary = q0.project_matrix() * x.boundary() * q1.lift_matrix();
  std::vector<Vector> action;
  for (std::size_t a = 0; a < q0.dim(); ++a) {
    Vector l0 = q0.lift(unit_vector(x.field(), q0.dim(), a));
    for (std::size_t b = 0; b < q1.dim(); ++b) {
      Vector l1 = q1.lift(unit_vector(x.field(), q1.dim(), b));
      action.push_back(q1.project(x.act(l0, l1)));
    }
  }
  CrossedModule quotient(XModData{a1.algebra.data(), a0.algebra.data(), std::move(boundary),
                                  std::move(action)});
  XModMorphism projection{q1.project_matrix(), q0.project_matrix()};
  return QuotientXMod{std::move(quotient), q1, q0, std::move(projection)};
}

SecondIsomorphism second_isomorphism(const CrossedModule& x, const SubXMod& m, const SubXMod& n) {
  if (std::string e = check_subxmod(x, m.s1, m.s0); !e.empty()) {
    throw std::invalid_argument("second_isomorphism: M is not a subcrossed module: " + e);
  }
  if (std::string e = check_ideal(x, n.s1, n.s0); !e.empty()) {
    throw std::invalid_argument("second_isomorphism: N is not an ideal: " + e);
  }
  SubXMod inter = make_subxmod(x, subspace_intersect(m.s1, n.s1), subspace_intersect(m.s0, n.s0));
  SubXMod sum = make_subxmod(x, subspace_sum(m.s1, n.s1), subspace_sum(m.s0, n.s0));

  CrossedModule xm = restrict_xmod(x, m);
  CrossedModule xs = restrict_xmod(x, sum);
  SubXMod inter_in_m{relative(m.s1, inter.s1), relative(m.s0, inter.s0), true};
  SubXMod n_in_sum{relative(sum.s1, n.s1), relative(sum.s0, n.s0), true};
  QuotientXMod left = quotient_xmod(xm, inter_in_m);
  QuotientXMod right = quotient_xmod(xs, n_in_sum);

  const Field f = x.field();
  auto induced = [&](const QuotientCoords& from, const Subspace& from_sub,
                     const Subspace& to_sub, const QuotientCoords& to) {
    Matrix out(f, to.dim(), from.dim());
    for (std::size_t a = 0; a < from.dim(); ++a) {
      Vector ambient = from_sub.from_coordinates(from.lift(unit_vector(f, from.dim(), a)));
      out.set_column(a, to.project(to_sub.coordinates(ambient)));
    }
    return out;
  };
  XModMorphism iso{induced(left.q1, m.s1, sum.s1, right.q1),
                   induced(left.q0, m.s0, sum.s0, right.q0)};
  if (!is_isomorphism(left.quotient, right.quotient, iso)) {
    throw std::logic_error("second isomorphism map is not an isomorphism");
  }
  return SecondIsomorphism{std::move(inter), std::move(sum),  std::move(xm),  std::move(xs),
                           std::move(left),  std::move(right), std::move(iso)};
}

Predicates predicates(const CrossedModule& x) {
  Predicates p;
  p.aspherical = kernel(x.boundary()).is_zero();
  p.simply_connected = rank(x.boundary()) == x.dim0();
  p.abelian = center_xmod(x) == whole(x);
  p.finite_dimensional = true;
  return p;
}

XModSeries xmod_series(const CrossedModule& x, SeriesKind kind) {
  XModSeries result;
  result.terms.push_back(whole(x));
  const SubXMod all = whole(x);
  for (std::size_t step = 0; step <= x.dim1() + x.dim0() + 1; ++step) {
    const SubXMod& last = result.terms.back();
    if (last.s1.is_zero() && last.s0.is_zero()) {
      result.terminates = true;
      result.index = result.terms.size() - 1;
      return result;
    }
    SubXMod next = kind == SeriesKind::LowerCentral ? commutator_ideals(x, all, last)
                                                    : commutator_ideals(x, last, last);
    if (next == last) {
      return result;
    }
    result.terms.push_back(std::move(next));
  }
  throw std::logic_error("xmod_series: chain failed to stabilize");
}

CrossedModule direct_sum_xmod(const CrossedModule& x, const CrossedModule& y) {
  if (!(x.field() == y.field())) {
    throw std::invalid_argument("direct sum of crossed modules over different fields");
  }
  const Field f = x.field();
  LieAlgebra l1 = direct_sum(x.l1(), y.l1());
  LieAlgebra l0 = direct_sum(x.l0(), y.l0());
  const std::size_t n1 = l1.dim();
  const std::size_t n0 = l0.dim();
  Matrix boundary(f, n0, n1);
  for (std::size_t r = 0; r < x.dim0(); ++r) {
    for (std::size_t c = 0; c < x.dim1(); ++c) {
      boundary(r, c) = x.boundary()(r, c);
    }
  }
  for (std::size_t r = 0; r < y.dim0(); ++r) {
    for (std::size_t c = 0; c < y.dim1(); ++c) {
      boundary(x.dim0() + r, x.dim1() + c) = y.boundary()(r, c);
    }
  }
  std::vector<Vector> action(n0 * n1, zero_vector(f, n1));
  for (std::size_t i = 0; i < x.dim0(); ++i) {
    for (std::size_t j = 0; j < x.dim1(); ++j) {
      action[i * n1 + j] = concat(x.action(i, j), zero_vector(f, y.dim1()));
    }
  }
  for (std::size_t i = 0; i < y.dim0(); ++i) {
    for (std::size_t j = 0; j < y.dim1(); ++j) {
      action[(x.dim0() + i) * n1 + x.dim1() + j] = concat(zero_vector(f, x.dim1()), y.action(i, j));
    }
  }
  return CrossedModule(XModData{l1.data(), l0.data(), std::move(boundary), std::move(action)});
}

BoundaryCenterReport boundary_center_identities(const CrossedModule& x) {
  BoundaryCenterReport r;
  Predicates p = predicates(x);
  r.simply_connected = p.simply_connected;
  r.aspherical = p.aspherical;
  if (p.simply_connected) {
    r.fixed_points_equal_center = fixed_points(x) == center(x.l1());
    r.displacement_equals_derived = displacement(x) == derived_subalgebra(x.l1());
  }
  if (p.aspherical) {
    Subspace z0 = center(x.l0());
    r.center_inside_stabilizer = subspace_intersect(z0, stabilizer(x)) == z0;
  }
  return r;
}

}  // namespace xlie
