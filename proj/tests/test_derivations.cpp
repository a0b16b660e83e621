#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xlie/catalog.hpp"
#include "xlie/derivations.hpp"

using namespace xlie;

namespace {

const Field Q = Field::rational();

CrossedModule entry(const std::string& name, Field f = Q) {
  return catalog::build(name, f).xmod();
}

// Steps m through every matrix over F_p in lexicographic order; false once
// it wraps back to zero.
bool next_matrix(Matrix& m) {
  const Field f = m.field();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      m(r, c) += Scalar::one(f);
      if (!m(r, c).is_zero()) {
        return true;
      }
    }
  }
  return false;
}

Vector e(Field f, std::size_t n, std::size_t i) { return unit_vector(f, n, i); }

bool whitehead_law(const CrossedModule& x, const Matrix& dm) {
  const Field f = x.field();
  const std::size_t n0 = x.dim0();
  for (std::size_t a = 0; a < n0; ++a) {
    for (std::size_t b = 0; b < n0; ++b) {
      Vector lhs = dm * x.l0().bracket(e(f, n0, a), e(f, n0, b));
      Vector rhs = sub(x.act(e(f, n0, a), dm.column(b)), x.act(e(f, n0, b), dm.column(a)));
      if (lhs != rhs) {
        return false;
      }
    }
  }
  return true;
}

bool is_lie_derivation(const LieAlgebra& g, const Matrix& dm) {
  const std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Vector ea = e(g.field(), n, a);
      Vector eb = e(g.field(), n, b);
      if (dm * g.bracket(ea, eb) != add(g.bracket(dm * ea, eb), g.bracket(ea, dm * eb))) {
        return false;
      }
    }
  }
  return true;
}

bool xmod_law(const CrossedModule& x, const Matrix& alpha, const Matrix& beta) {
  if (!is_lie_derivation(x.l1(), alpha) || !is_lie_derivation(x.l0(), beta)) {
    return false;
  }
  if (beta * x.boundary() != x.boundary() * alpha) {
    return false;
  }
  const Field f = x.field();
  for (std::size_t i = 0; i < x.dim0(); ++i) {
    for (std::size_t j = 0; j < x.dim1(); ++j) {
      Vector ei = e(f, x.dim0(), i);
      Vector fj = e(f, x.dim1(), j);
      if (alpha * x.act(ei, fj) != add(x.act(ei, alpha * fj), x.act(beta * ei, fj))) {
        return false;
      }
    }
  }
  return true;
}

std::size_t count_whitehead(const CrossedModule& x) {
  Matrix m(x.field(), x.dim1(), x.dim0());
  std::size_t count = 0;
  do {
    count += whitehead_law(x, m);
  } while (next_matrix(m));
  return count;
}

std::size_t count_xmod(const CrossedModule& x) {
  Matrix a(x.field(), x.dim1(), x.dim1());
  std::size_t count = 0;
  do {
    Matrix b(x.field(), x.dim0(), x.dim0());
    do {
      count += xmod_law(x, a, b);
    } while (next_matrix(b));
  } while (next_matrix(a));
  return count;
}

std::size_t power(std::size_t p, std::size_t k) {
  std::size_t r = 1;
  while (k-- > 0) {
    r *= p;
  }
  return r;
}

std::vector<CrossedModule> small_catalog(Field f) {
  std::vector<CrossedModule> out;
  for (const catalog::Entry& en : catalog::crossed_modules(f)) {
    out.push_back(en.xmod());
  }
  return out;
}

}  // namespace

TEST_CASE("whitehead derivations examples") {
  for (const std::string name : {"n2", "h3", "sl2", "a3"}) {
    LieAlgebra g = catalog::named_algebra(name, Q);
    CHECK(whitehead_derivations(catalog::identity_xmod(g)).dim() ==
          derivation_algebra(g).basis.size());
  }
  CHECK(whitehead_derivations(entry("mod_trivial_a2_a1")).dim() == 2 * 1);
  CrossedModule big = catalog::module_xmod(catalog::abelian(Q, 3), catalog::abelian(Q, 2),
                                           std::vector<Vector>(6, zero_vector(Q, 3)));
  CHECK(whitehead_derivations(big).dim() == 6);
  CHECK(whitehead_derivations(entry("id_sl2")).dim() == 3);
}

TEST_CASE("xmod derivations examples") {
  for (const std::string name : {"n2", "h3", "sl2"}) {
    LieAlgebra g = catalog::named_algebra(name, Q);
    DerivationSpace s = xmod_derivations(catalog::identity_xmod(g));
    CHECK(s.dim() == derivation_algebra(g).basis.size());
    for (std::size_t k = 0; k < s.dim(); ++k) {
      CHECK(s.maps[k] == s.partners[k]);
    }
  }
  CrossedModule zero_action = catalog::module_xmod(catalog::abelian(Q, 1), catalog::abelian(Q, 1),
                                                   {zero_vector(Q, 1)});
  CHECK(xmod_derivations(zero_action).dim() == 2);
  CHECK(xmod_derivations(entry("id_sl2")).dim() == 3);
}

TEST_CASE("derivation counts agree with exhaustive enumeration over small fields") {
  const Field f2 = Field::prime(2);
  const Field f3 = Field::prime(3);
  for (const std::string name : {"id_n2", "mod_natural_n2", "abelian_a2_a1", "inc_z_h3",
                                 "mod_scale_a1_a1", "inc_yz_h3"}) {
    for (Field f : {f2, f3}) {
      CAPTURE(name);
      CAPTURE(f.name());
      CrossedModule x = entry(name, f);
      CHECK(count_whitehead(x) == power(f.modulus(), whitehead_derivations(x).dim()));
      if (x.dim1() * x.dim1() + x.dim0() * x.dim0() <= 10) {
        CHECK(count_xmod(x) == power(f.modulus(), xmod_derivations(x).dim()));
      }
    }
  }
}

TEST_CASE("every computed derivation satisfies its law") {
  for (Field f : {Q, Field::prime(3)}) {
    for (const CrossedModule& x : small_catalog(f)) {
      DerivationSpace w = whitehead_derivations(x);
      for (const Matrix& m : w.maps) {
        CHECK(whitehead_law(x, m));
      }
      DerivationSpace p = xmod_derivations(x);
      for (std::size_t k = 0; k < p.dim(); ++k) {
        CHECK(xmod_law(x, p.maps[k], p.partners[k]));
      }
    }
  }
}

TEST_CASE("abstract structure constants reproduce the concrete brackets") {
  for (const CrossedModule& x : small_catalog(Q)) {
    DerivationSpace w = whitehead_derivations(x);
    const Matrix& d = x.boundary();
    for (std::size_t a = 0; a < w.dim(); ++a) {
      for (std::size_t b = 0; b < w.dim(); ++b) {
        Matrix concrete = w.maps[a] * d * w.maps[b] - w.maps[b] * d * w.maps[a];
        Matrix abstract(Q, x.dim1(), x.dim0());
        const Vector& s = w.algebra.structure(a, b);
        for (std::size_t k = 0; k < w.dim(); ++k) {
          abstract = abstract + s[k] * w.maps[k];
        }
        CHECK(concrete == abstract);
      }
    }
    DerivationSpace p = xmod_derivations(x);
    for (std::size_t a = 0; a < p.dim(); ++a) {
      for (std::size_t b = 0; b < p.dim(); ++b) {
        Matrix alpha = p.maps[a] * p.maps[b] - p.maps[b] * p.maps[a];
        Matrix beta = p.partners[a] * p.partners[b] - p.partners[b] * p.partners[a];
        CHECK(p.coordinates(alpha, beta) == p.algebra.structure(a, b));
      }
    }
  }
}

TEST_CASE("actor examples") {
  CrossedModule triv = entry("mod_trivial_a2_a1");
  CrossedModule act = actor(triv);
  CHECK(act.boundary().is_zero());
  DerivationSpace w = whitehead_derivations(triv);
  DerivationSpace p = xmod_derivations(triv);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    for (std::size_t j = 0; j < w.dim(); ++j) {
      Matrix img = p.maps[i] * w.maps[j] - w.maps[j] * p.partners[i];
      CHECK(act.action(i, j) == w.coordinates(img));
    }
  }

  CrossedModule sl = actor(entry("id_sl2"));
  CHECK(sl.dim1() == 3);
  CHECK(sl.dim0() == 3);
  CHECK(rank(sl.boundary()) == 3);
}

TEST_CASE("actor is a crossed module for every catalog entry") {
  for (Field f : {Q, Field::prime(2), Field::prime(5)}) {
    for (const CrossedModule& x : small_catalog(f)) {
      CrossedModule act = actor(x);
      CHECK(validate_xmod(act.data()).ok());
      CHECK(validate_xmod(class_actor(x).data()).ok());
    }
  }
}

TEST_CASE("boundary of an induced derivation is the induced pair of -d(l1)") {
  for (const CrossedModule& x : small_catalog(Q)) {
    for (std::size_t j = 0; j < x.dim1(); ++j) {
      Vector fj = unit_vector(Q, x.dim1(), j);
      Matrix delta = class_derivation(x, fj);
      auto [alpha, beta] = class_pair(x, scale(Scalar(Q, -1), x.boundary() * fj));
      CHECK(delta * x.boundary() == alpha);
      CHECK(x.boundary() * delta == beta);
    }
  }
}

TEST_CASE("class-preserving examples") {
  CHECK(class_preserving_whitehead(entry("mod_trivial_a2_a1")).dim() == 0);
  CHECK(class_preserving_whitehead(entry("id_sl2")).dim() == 3);
  CHECK(class_preserving_whitehead(entry("id_h3")).dim() == 2);
  CHECK(class_preserving_xmod(entry("abelian_a2_a1")).dim() == 0);
  CHECK(class_preserving_xmod(entry("id_sl2")).dim() == 3);
  CHECK(class_preserving_xmod(entry("id_h3")).dim() == 2);

  CrossedModule ab = class_actor(entry("abelian_a2_a1"));
  CHECK(ab.dim1() == 0);
  CHECK(ab.dim0() == 0);
  CrossedModule sl = class_actor(entry("id_sl2"));
  CHECK(sl.dim1() == 3);
  CHECK(sl.dim0() == 3);
  CrossedModule h = class_actor(entry("id_h3"));
  CHECK(h.dim1() == 2);
  CHECK(h.dim0() == 2);
}

TEST_CASE("class-preserving dimensions match the central quotient") {
  for (Field f : {Q, Field::prime(2), Field::prime(3)}) {
    for (const CrossedModule& x : small_catalog(f)) {
      std::size_t q1 = x.dim1() - fixed_points(x).dim();
      std::size_t q0 = x.dim0() - central_stabilizer(x).dim();
      CHECK(class_preserving_whitehead(x).dim() == q1);
      CHECK(class_preserving_xmod(x).dim() == q0);
    }
  }
}

TEST_CASE("inner actor") {
  CrossedModule ab = entry("abelian_a2_a1");
  SubXMod z = inner_actor(ab);
  CHECK(z.s1.is_zero());
  CHECK(z.s0.is_zero());

  CrossedModule sl = entry("id_sl2");
  SubXMod in = inner_actor(sl);
  CHECK(in.s1.dim() == 3);
  CHECK(in.s0.dim() == 3);
  CHECK(in.s1 == class_preserving_whitehead(sl).in_full);
  CHECK(in.s0 == class_preserving_xmod(sl).in_full);

  for (Field f : {Q, Field::prime(3)}) {
    for (const CrossedModule& x : small_catalog(f)) {
      SubXMod i = inner_actor(x);
      CrossedModule act = actor(x);
      DerivationSpace cw = class_preserving_whitehead(x);
      DerivationSpace cp = class_preserving_xmod(x);
      CHECK(i.ideal);
      CHECK(check_ideal(act, i.s1, i.s0).empty());
      CHECK(check_subxmod(act, cw.in_full, cp.in_full).empty());
      CHECK(cw.in_full.contains(i.s1));
      CHECK(cp.in_full.contains(i.s0));
    }
  }
}

TEST_CASE("kind names round-trip") {
  for (DerivationKind k : {DerivationKind::Whitehead, DerivationKind::XMod,
                           DerivationKind::WhiteheadClass, DerivationKind::XModClass}) {
    CHECK(parse_derivation_kind(to_string(k)) == k);
  }
  CHECK_FALSE(parse_derivation_kind("inner").has_value());
}
