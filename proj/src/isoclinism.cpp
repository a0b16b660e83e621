#include "xlie/isoclinism.hpp"

#include <algorithm>
#include <stdexcept>

#include "xlie/catalog.hpp"
#include "xlie/derivations.hpp"

namespace xlie {

namespace {

std::string pair_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw std::invalid_argument(std::string("witness ") + name + " should be " +
                                std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

XModMorphism invert_morphism(const XModMorphism& m) {
  auto a = inverse(m.alpha);
  auto b = inverse(m.beta);
  if (!a || !b) {
    throw std::invalid_argument("witness map is not invertible");
  }
  return XModMorphism{*a, *b};
}

// Solves xi * sources = targets column by column, where the source vectors
// span the whole domain. Returns nullopt when the system is inconsistent.
std::optional<Matrix> forced_map(Field f, std::size_t dom, std::size_t cod,
                                 const std::vector<Vector>& sources,
                                 const std::vector<Vector>& targets) {
  // Rows of xi: xi_r . s_k = t_k[r], so S^T xi_r^T = (t_k[r])_k.
  Matrix st = Matrix::from_rows(f, dom, sources);
  Matrix xi(f, cod, dom);
  for (std::size_t r = 0; r < cod; ++r) {
    Vector rhs;
    for (const Vector& t : targets) {
      rhs.push_back(t[r]);
    }
    auto sol = solve(st, rhs);
    if (!sol) {
      return std::nullopt;
    }
    for (std::size_t c = 0; c < dom; ++c) {
      xi(r, c) = (*sol)[c];
    }
  }
  return xi;
}

// eta on A/U -> A'/U' induced to A/W -> A'/W' (U inside W). Empty optional
// when W/U is not carried into W'/U'.
std::optional<Matrix> induce(Field f, const QuotientCoords& small, const QuotientCoords& small2,
                             const Matrix& eta, const QuotientCoords& big,
                             const QuotientCoords& big2) {
  for (const Vector& w : big.subspace().basis_vectors()) {
    Vector img = small2.lift(eta * small.project(w));
    if (!big2.subspace().contains(img)) {
      return std::nullopt;
    }
  }
  Matrix out(f, big2.dim(), big.dim());
  for (std::size_t a = 0; a < big.dim(); ++a) {
    Vector l = big.lift(unit_vector(f, big.dim(), a));
    out.set_column(a, big2.project(small2.lift(eta * small.project(l))));
  }
  return out;
}

// xi on S -> S' restricted to T -> T' (T inside S, canonical coordinates).
std::optional<Matrix> restrict_map(Field f, const Subspace& s, const Subspace& s2,
                                   const Matrix& xi, const Subspace& t, const Subspace& t2) {
  Matrix out(f, t2.dim(), t.dim());
  for (std::size_t a = 0; a < t.dim(); ++a) {
    Vector img = s2.from_coordinates(xi * s.coordinates(t.basis_vector(a)));
    if (!t2.contains(img)) {
      return std::nullopt;
    }
    out.set_column(a, t2.coordinates(img));
  }
  return out;
}

LieIsoclinismWitness checked_lie(const LieAlgebra& g, const LieAlgebra& h, LieIsoclinismWitness w,
                                 const char* which) {
  LieIsoclinismVerdict v = lie_isoclinism_verify(g, h, w);
  if (!v.verified) {
    throw std::logic_error(std::string(which) + " component witness fails: " + v.violation);
  }
  return w;
}

}  // namespace

Vector CommutatorPairing::c1_of(const Vector& u1, const Vector& u0) const {
  Vector out = zero_vector(commutator.s1.field(), m1());
  for (std::size_t a = 0; a < k1; ++a) {
    for (std::size_t b = 0; b < k0; ++b) {
      if (!u1[a].is_zero() && !u0[b].is_zero()) {
        axpy(u1[a] * u0[b], c1[a * k0 + b], out);
      }
    }
  }
  return out;
}

Vector CommutatorPairing::c0_of(const Vector& u0, const Vector& v0) const {
  Vector out = zero_vector(commutator.s0.field(), m0());
  for (std::size_t a = 0; a < k0; ++a) {
    for (std::size_t b = 0; b < k0; ++b) {
      if (!u0[a].is_zero() && !v0[b].is_zero()) {
        axpy(u0[a] * v0[b], c0[a * k0 + b], out);
      }
    }
  }
  return out;
}

QuotientXMod central_quotient(const CrossedModule& x) {
  return quotient_xmod(x, center_xmod(x));
}

CommutatorPairing commutator_pairing(const CrossedModule& x) {
  const Field f = x.field();
  CommutatorPairing p{central_quotient(x), commutator_xmod(x), CrossedModule::zero(f), 0, 0, {}, {}};
  p.commutator_module = restrict_xmod(x, p.commutator);
  p.k1 = p.central.q1.dim();
  p.k0 = p.central.q0.dim();
  for (std::size_t a = 0; a < p.k1; ++a) {
    Vector l1 = p.central.q1.lift(unit_vector(f, p.k1, a));
    for (std::size_t b = 0; b < p.k0; ++b) {
      Vector l0 = p.central.q0.lift(unit_vector(f, p.k0, b));
      p.c1.push_back(p.commutator.s1.coordinates(x.act(l0, l1)));
    }
  }
  for (std::size_t a = 0; a < p.k0; ++a) {
    Vector l0 = p.central.q0.lift(unit_vector(f, p.k0, a));
    for (std::size_t b = 0; b < p.k0; ++b) {
      Vector m0 = p.central.q0.lift(unit_vector(f, p.k0, b));
      p.c0.push_back(p.commutator.s0.coordinates(x.l0().bracket(l0, m0)));
    }
  }
  return p;
}

std::string check_pairing_well_defined(const CrossedModule& x, const CommutatorPairing& c) {
  const Field f = x.field();
  std::vector<Vector> z1 = c.central.q1.subspace().basis_vectors();
  std::vector<Vector> z0 = c.central.q0.subspace().basis_vectors();
  z1.push_back(zero_vector(f, x.dim1()));
  z0.push_back(zero_vector(f, x.dim0()));
  for (std::size_t a = 0; a < c.k1; ++a) {
    Vector l1 = c.central.q1.lift(unit_vector(f, c.k1, a));
    for (std::size_t b = 0; b < c.k0; ++b) {
      Vector l0 = c.central.q0.lift(unit_vector(f, c.k0, b));
      for (const Vector& s1 : z1) {
        for (const Vector& s0 : z0) {
          Vector v = x.act(add(l0, s0), add(l1, s1));
          if (!c.commutator.s1.contains(v) ||
              c.commutator.s1.coordinates(v) != c.c1[a * c.k0 + b]) {
            return "c1 changes under a central shift at " + pair_str(a, b);
          }
        }
      }
    }
  }
  for (std::size_t a = 0; a < c.k0; ++a) {
    Vector l0 = c.central.q0.lift(unit_vector(f, c.k0, a));
    for (std::size_t b = 0; b < c.k0; ++b) {
      Vector m0 = c.central.q0.lift(unit_vector(f, c.k0, b));
      for (const Vector& s : z0) {
        for (const Vector& t : z0) {
          Vector v = x.l0().bracket(add(l0, s), add(m0, t));
          if (!c.commutator.s0.contains(v) ||
              c.commutator.s0.coordinates(v) != c.c0[a * c.k0 + b]) {
            return "c0 changes under a central shift at " + pair_str(a, b);
          }
        }
      }
    }
  }
  return "";
}

std::string check_pairing_diagrams(const CommutatorPairing& px, const CommutatorPairing& py,
                                   const IsoclinismWitness& w) {
  for (std::size_t a = 0; a < px.k1; ++a) {
    Vector u1 = w.eta.alpha.column(a);
    for (std::size_t b = 0; b < px.k0; ++b) {
      if (w.xi.alpha * px.c1[a * px.k0 + b] != py.c1_of(u1, w.eta.beta.column(b))) {
        return "c1 diagram fails on quotient basis pair " + pair_str(a, b);
      }
    }
  }
  for (std::size_t a = 0; a < px.k0; ++a) {
    for (std::size_t b = 0; b < px.k0; ++b) {
      if (w.xi.beta * px.c0[a * px.k0 + b] !=
          py.c0_of(w.eta.beta.column(a), w.eta.beta.column(b))) {
        return "c0 diagram fails on quotient basis pair " + pair_str(a, b);
      }
    }
  }
  return "";
}

std::pair<Vector, Vector> combined_pairing(const CommutatorPairing& p, const Vector& u1,
                                           const Vector& u0, const Vector& v1, const Vector& v0) {
  const Field f = p.commutator.s1.field();
  Vector shifted = u0;
  axpy(Scalar::one(f), p.central.quotient.boundary() * u1, shifted);
  Vector first = p.c1_of(v1, shifted);
  axpy(-Scalar::one(f), p.c1_of(u1, v0), first);
  return {first, p.c0_of(u0, v0)};
}

std::string check_combined_diagram(const CommutatorPairing& px, const CommutatorPairing& py,
                                   const IsoclinismWitness& w) {
  const Field f = px.commutator.s1.field();
  const std::size_t n = px.k1 + px.k0;
  // Basis vector i of L/Z as a pair of coordinate vectors.
  auto basis = [&](std::size_t i) {
    Vector u1 = zero_vector(f, px.k1);
    Vector u0 = zero_vector(f, px.k0);
    if (i < px.k1) {
      u1[i] = Scalar::one(f);
    } else {
      u0[i - px.k1] = Scalar::one(f);
    }
    return std::make_pair(u1, u0);
  };
  for (std::size_t i = 0; i < n; ++i) {
    auto [u1, u0] = basis(i);
    for (std::size_t j = 0; j < n; ++j) {
      auto [v1, v0] = basis(j);
      auto [c1, c0] = combined_pairing(px, u1, u0, v1, v0);
      auto [e1, e0] = combined_pairing(py, w.eta.alpha * u1, w.eta.beta * u0, w.eta.alpha * v1,
                                       w.eta.beta * v0);
      if (w.xi.alpha * c1 != e1 || w.xi.beta * c0 != e0) {
        return "combined diagram fails on quotient basis pair " + pair_str(i, j);
      }
    }
  }
  return "";
}

IsoclinismVerdict isoclinism_verify(const CommutatorPairing& px, const CommutatorPairing& py,
                                    const IsoclinismWitness& w) {
  require_shape(w.eta.alpha, py.k1, px.k1, "eta1");
  require_shape(w.eta.beta, py.k0, px.k0, "eta0");
  require_shape(w.xi.alpha, py.m1(), px.m1(), "xi1");
  require_shape(w.xi.beta, py.m0(), px.m0(), "xi0");
  IsoclinismVerdict v;
  if (std::string e = check_morphism(px.central.quotient, py.central.quotient, w.eta); !e.empty()) {
    v.violation = "eta is not a morphism of central quotients: " + e;
    return v;
  }
  if (!inverse(w.eta.alpha) || !inverse(w.eta.beta)) {
    v.violation = "eta is not bijective";
    return v;
  }
  if (std::string e = check_morphism(px.commutator_module, py.commutator_module, w.xi);
      !e.empty()) {
    v.violation = "xi is not a morphism of commutator crossed modules: " + e;
    return v;
  }
  if (!inverse(w.xi.alpha) || !inverse(w.xi.beta)) {
    v.violation = "xi is not bijective";
    return v;
  }
  v.violation = check_pairing_diagrams(px, py, w);
  if (!v.violation.empty()) {
    return v;
  }
  v.verified = true;
  return v;
}

IsoclinismVerdict isoclinism_verify(const CrossedModule& x, const CrossedModule& y,
                                    const IsoclinismWitness& w) {
  if (!(x.field() == y.field())) {
    throw std::invalid_argument("crossed modules over different fields");
  }
  return isoclinism_verify(commutator_pairing(x), commutator_pairing(y), w);
}

std::optional<XModMorphism> xi_from_eta(const CommutatorPairing& px, const CommutatorPairing& py,
                                        const XModMorphism& eta) {
  const Field f = eta.alpha.field();
  std::vector<Vector> s1, t1, s0, t0;
  for (std::size_t a = 0; a < px.k1; ++a) {
    for (std::size_t b = 0; b < px.k0; ++b) {
      s1.push_back(px.c1[a * px.k0 + b]);
      t1.push_back(py.c1_of(eta.alpha.column(a), eta.beta.column(b)));
    }
  }
  for (std::size_t a = 0; a < px.k0; ++a) {
    for (std::size_t b = 0; b < px.k0; ++b) {
      s0.push_back(px.c0[a * px.k0 + b]);
      t0.push_back(py.c0_of(eta.beta.column(a), eta.beta.column(b)));
    }
  }
  auto xi1 = forced_map(f, px.m1(), py.m1(), s1, t1);
  auto xi0 = forced_map(f, px.m0(), py.m0(), s0, t0);
  if (!xi1 || !xi0) {
    return std::nullopt;
  }
  return XModMorphism{*xi1, *xi0};
}

IsoclinismWitness identity_isoclinism(const CrossedModule& x) {
  CommutatorPairing p = commutator_pairing(x);
  const Field f = x.field();
  IsoclinismWitness w{
      XModMorphism{Matrix::identity(f, p.k1), Matrix::identity(f, p.k0)},
      XModMorphism{Matrix::identity(f, p.m1()), Matrix::identity(f, p.m0())}, false};
  w.verified = isoclinism_verify(p, p, w).verified;
  return w;
}

IsoclinismWitness isoclinism_invert(const CrossedModule& x, const CrossedModule& y,
                                    const IsoclinismWitness& w) {
  CommutatorPairing px = commutator_pairing(x);
  CommutatorPairing py = commutator_pairing(y);
  if (IsoclinismVerdict v = isoclinism_verify(px, py, w); !v.verified) {
    throw std::invalid_argument("cannot invert an unverified witness: " + v.violation);
  }
  IsoclinismWitness inv{invert_morphism(w.eta), invert_morphism(w.xi), false};
  IsoclinismVerdict v = isoclinism_verify(py, px, inv);
  if (!v.verified) {
    throw std::logic_error("inverse witness fails: " + v.violation);
  }
  inv.verified = true;
  return inv;
}

IsoclinismWitness isoclinism_compose(const CrossedModule& x, const CrossedModule& y,
                                     const CrossedModule& z, const IsoclinismWitness& xy,
                                     const IsoclinismWitness& yz) {
  CommutatorPairing px = commutator_pairing(x);
  CommutatorPairing py = commutator_pairing(y);
  CommutatorPairing pz = commutator_pairing(z);
  if (IsoclinismVerdict v = isoclinism_verify(px, py, xy); !v.verified) {
    throw std::invalid_argument("first witness does not verify: " + v.violation);
  }
  if (IsoclinismVerdict v = isoclinism_verify(py, pz, yz); !v.verified) {
    throw std::invalid_argument("second witness does not verify: " + v.violation);
  }
  IsoclinismWitness w{compose(yz.eta, xy.eta), compose(yz.xi, xy.xi), false};
  IsoclinismVerdict v = isoclinism_verify(px, pz, w);
  if (!v.verified) {
    throw std::logic_error("composite witness fails: " + v.violation);
  }
  w.verified = true;
  return w;
}

SplitCenterResult split_center_isoclinism(const CrossedModule& x, const SubXMod& m) {
  if (std::string e = check_subxmod(x, m.s1, m.s0); !e.empty()) {
    throw std::invalid_argument("split_center_isoclinism: not a subcrossed module: " + e);
  }
  const Field f = x.field();
  SubXMod z = center_xmod(x);
  if (!subspace_sum(m.s1, z.s1).is_full() || !subspace_sum(m.s0, z.s0).is_full()) {
    throw std::invalid_argument(
        "split_center_isoclinism: M together with the center does not span L");
  }
  CrossedModule mx = restrict_xmod(x, m);
  CommutatorPairing pm = commutator_pairing(mx);
  CommutatorPairing px = commutator_pairing(x);

  SplitCenterResult r{mx, {}, false, false};
  auto up1 = [&](const Subspace& s) {
    std::vector<Vector> vs;
    for (const Vector& v : s.basis_vectors()) {
      vs.push_back(m.s1.from_coordinates(v));
    }
    return Subspace::span(f, x.dim1(), vs);
  };
  auto up0 = [&](const Subspace& s) {
    std::vector<Vector> vs;
    for (const Vector& v : s.basis_vectors()) {
      vs.push_back(m.s0.from_coordinates(v));
    }
    return Subspace::span(f, x.dim0(), vs);
  };
  r.fixed_points_identity = up1(fixed_points(mx)) == subspace_intersect(m.s1, z.s1);
  r.stabilizer_identity = up0(central_stabilizer(mx)) == subspace_intersect(m.s0, z.s0);
  if (!r.fixed_points_identity || !r.stabilizer_identity) {
    throw std::logic_error("split_center_isoclinism: center identities fail for M");
  }

  auto eta_part = [&](const QuotientCoords& qm, const QuotientCoords& qx, const Subspace& s) {
    Matrix out(f, qx.dim(), qm.dim());
    for (std::size_t a = 0; a < qm.dim(); ++a) {
      out.set_column(a, qx.project(s.from_coordinates(qm.lift(unit_vector(f, qm.dim(), a)))));
    }
    return out;
  };
  auto xi_part = [&](const Subspace& cm, const Subspace& cx, const Subspace& s) {
    Matrix out(f, cx.dim(), cm.dim());
    for (std::size_t a = 0; a < cm.dim(); ++a) {
      Vector v = s.from_coordinates(cm.basis_vector(a));
      if (!cx.contains(v)) {
        throw std::logic_error("split_center_isoclinism: commutators of M and L differ");
      }
      out.set_column(a, cx.coordinates(v));
    }
    return out;
  };
  r.witness.eta = XModMorphism{eta_part(pm.central.q1, px.central.q1, m.s1),
                               eta_part(pm.central.q0, px.central.q0, m.s0)};
  r.witness.xi = XModMorphism{xi_part(pm.commutator.s1, px.commutator.s1, m.s1),
                              xi_part(pm.commutator.s0, px.commutator.s0, m.s0)};
  IsoclinismVerdict v = isoclinism_verify(pm, px, r.witness);
  if (!v.verified) {
    throw std::logic_error("split_center_isoclinism: constructed witness fails: " + v.violation);
  }
  r.witness.verified = true;
  return r;
}

ComponentIsoclinisms component_isoclinisms(const CrossedModule& x, const CrossedModule& y,
                                           const IsoclinismWitness& w, ComponentCase c) {
  CommutatorPairing px = commutator_pairing(x);
  CommutatorPairing py = commutator_pairing(y);
  if (IsoclinismVerdict v = isoclinism_verify(px, py, w); !v.verified) {
    throw std::invalid_argument("component_isoclinisms: witness does not verify: " + v.violation);
  }
  const Field f = x.field();
  Predicates ax = predicates(x);
  Predicates ay = predicates(y);
  ComponentIsoclinisms out;

  if (c == ComponentCase::Aspherical) {
    if (!ax.aspherical || !ay.aspherical) {
      throw std::invalid_argument("component_isoclinisms: both crossed modules must be aspherical");
    }
    if (!(central_stabilizer(x) == center(x.l0())) || !(central_stabilizer(y) == center(y.l0()))) {
      throw std::logic_error("aspherical crossed module with St n Z != Z(L0)");
    }
    out.l0 = checked_lie(x.l0(), y.l0(), LieIsoclinismWitness{w.eta.beta, w.xi.beta}, "L0");
    return out;
  }
  if (c == ComponentCase::SimplyConnected) {
    if (!ax.simply_connected || !ay.simply_connected) {
      throw std::invalid_argument(
          "component_isoclinisms: both crossed modules must be simply connected");
    }
    for (const CrossedModule* m : {&x, &y}) {
      if (!(fixed_points(*m) == center(m->l1())) ||
          !(displacement(*m) == derived_subalgebra(m->l1()))) {
        throw std::logic_error("simply connected crossed module violates the center identities");
      }
    }
    out.l1 = checked_lie(x.l1(), y.l1(), LieIsoclinismWitness{w.eta.alpha, w.xi.alpha}, "L1");
    return out;
  }

  LieCommutatorData gx1 = lie_commutator_data(x.l1());
  LieCommutatorData gy1 = lie_commutator_data(y.l1());
  LieCommutatorData gx0 = lie_commutator_data(x.l0());
  LieCommutatorData gy0 = lie_commutator_data(y.l0());
  auto eta1 = induce(f, px.central.q1, py.central.q1, w.eta.alpha, gx1.central_quotient.coords,
                     gy1.central_quotient.coords);
  auto eta0 = induce(f, px.central.q0, py.central.q0, w.eta.beta, gx0.central_quotient.coords,
                     gy0.central_quotient.coords);
  auto xi1 = restrict_map(f, px.commutator.s1, py.commutator.s1, w.xi.alpha, gx1.derived,
                          gy1.derived);
  auto xi0 = restrict_map(f, px.commutator.s0, py.commutator.s0, w.xi.beta, gx0.derived,
                          gy0.derived);
  if (!eta1 || !xi1) {
    throw std::logic_error("witness does not induce maps on L1/Z(L1) and [L1,L1]");
  }
  if (!eta0 || !xi0) {
    throw std::logic_error("witness does not induce maps on L0/Z(L0) and [L0,L0]");
  }
  out.l1 = checked_lie(x.l1(), y.l1(), LieIsoclinismWitness{*eta1, *xi1}, "L1");
  out.l0 = checked_lie(x.l0(), y.l0(), LieIsoclinismWitness{*eta0, *xi0}, "L0");
  return out;
}

IsoclinismWitness isoclinism_from_lie(const LieAlgebra& g, const LieAlgebra& h,
                                      const LieIsoclinismWitness& w) {
  IsoclinismWitness out{XModMorphism{w.eta, w.eta}, XModMorphism{w.xi, w.xi}, false};
  CrossedModule x = catalog::identity_xmod(g);
  CrossedModule y = catalog::identity_xmod(h);
  out.verified = isoclinism_verify(x, y, out).verified;
  return out;
}

std::string Fingerprint::first_difference(const Fingerprint& other) const {
  const std::size_t n = std::min(labels.size(), other.labels.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] != other.labels[i] || values[i] != other.values[i]) {
      return labels[i];
    }
  }
  if (labels.size() != other.labels.size()) {
    return labels.size() > n ? labels[n] : other.labels[n];
  }
  return "";
}

Fingerprint fingerprint(const CrossedModule& x) {
  Fingerprint fp;
  auto put = [&](const std::string& label, std::size_t v) {
    fp.labels.push_back(label);
    fp.values.push_back(v);
  };
  SubXMod z = center_xmod(x);
  SubXMod c = commutator_xmod(x);
  put("displacement", c.s1.dim());
  put("derived_l0", c.s0.dim());
  put("quotient_l1", x.dim1() - z.s1.dim());
  put("quotient_l0", x.dim0() - z.s0.dim());
  QuotientXMod q = quotient_xmod(x, z);
  put("rank_quotient_boundary", rank(q.quotient.boundary()));
  put("rank_commutator_boundary", rank(restrict_xmod(x, c).boundary()));
  // Series below [L, L], which every isoclinism carries term by term.
  SubXMod all = whole(x);
  SubXMod lc = c;
  for (std::size_t k = 2;; ++k) {
    put("lower_central_" + std::to_string(k), lc.s1.dim());
    put("lower_central_" + std::to_string(k) + "_l0", lc.s0.dim());
    SubXMod next = commutator_ideals(x, all, lc);
    if (next == lc) {
      break;
    }
    lc = next;
  }
  SubXMod dr = c;
  for (std::size_t k = 1;; ++k) {
    put("derived_" + std::to_string(k), dr.s1.dim());
    put("derived_" + std::to_string(k) + "_l0", dr.s0.dim());
    SubXMod next = commutator_ideals(x, dr, dr);
    if (next == dr) {
      break;
    }
    dr = next;
  }
  return fp;
}

bool DercTransportReport::ok() const {
  if (whitehead_x != whitehead_y || xmod_x != xmod_y) {
    return false;
  }
  if (!searched) {
    return true;
  }
  return whitehead_iso == SearchStatus::Found && xmod_iso == SearchStatus::Found &&
         actor_iso == SearchStatus::Found;
}

DercTransportReport derc_dimension_transport_check(const CrossedModule& x, const CrossedModule& y,
                                                   const IsoclinismWitness& w,
                                                   const SearchOptions& options) {
  if (IsoclinismVerdict v = isoclinism_verify(x, y, w); !v.verified) {
    throw std::invalid_argument("derc_dimension_transport_check: witness does not verify: " +
                                v.violation);
  }
  DercTransportReport r;
  DerivationSpace wx = class_preserving_whitehead(x);
  DerivationSpace wy = class_preserving_whitehead(y);
  DerivationSpace px = class_preserving_xmod(x);
  DerivationSpace py = class_preserving_xmod(y);
  r.whitehead_x = wx.dim();
  r.whitehead_y = wy.dim();
  r.xmod_x = px.dim();
  r.xmod_y = py.dim();
  if (x.field().is_finite()) {
    r.searched = true;
    r.whitehead_iso = lie_isomorphism_search(wx.algebra, wy.algebra, options).status;
    r.xmod_iso = lie_isomorphism_search(px.algebra, py.algebra, options).status;
    r.actor_iso = xmod_isomorphism_search(actor_from(x, wx, px), actor_from(y, wy, py), options)
                      .status;
  }
  return r;
}

bool NilpotencyTransportReport::ok() const {
  if (nilpotent_x != nilpotent_y || solvable_x != solvable_y) {
    return false;
  }
  if (!nontrivial) {
    return true;
  }
  return (!nilpotent_x || class_x == class_y) && (!solvable_x || length_x == length_y);
}

NilpotencyTransportReport nilpotency_transport_check(const CrossedModule& x, const CrossedModule& y,
                                                     const IsoclinismWitness& w) {
  if (IsoclinismVerdict v = isoclinism_verify(x, y, w); !v.verified) {
    throw std::invalid_argument("nilpotency_transport_check: witness does not verify: " +
                                v.violation);
  }
  NilpotencyTransportReport r;
  XModSeries lx = xmod_series(x, SeriesKind::LowerCentral);
  XModSeries ly = xmod_series(y, SeriesKind::LowerCentral);
  XModSeries dx = xmod_series(x, SeriesKind::Derived);
  XModSeries dy = xmod_series(y, SeriesKind::Derived);
  r.nilpotent_x = lx.terminates;
  r.nilpotent_y = ly.terminates;
  r.solvable_x = dx.terminates;
  r.solvable_y = dy.terminates;
  r.class_x = lx.index;
  r.class_y = ly.index;
  r.length_x = dx.index;
  r.length_y = dy.index;
  r.nontrivial = x.dim1() + x.dim0() > 0 && y.dim1() + y.dim0() > 0;
  return r;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::None:
      return "none";
    case SearchStatus::BudgetExhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

}  // namespace xlie
