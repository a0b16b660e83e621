#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xlie/catalog.hpp"
#include "xlie/derivations.hpp"
#include "xlie/isoclinism.hpp"

using namespace xlie;

namespace {

const Field Q = Field::rational();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

CrossedModule entry(const std::string& name, Field f = Q) {
  return catalog::build(name, f).xmod();
}

Vector vec(Field f, std::vector<long> xs) {
  Vector v;
  for (long x : xs) {
    v.emplace_back(f, x);
  }
  return v;
}

Subspace span(Field f, std::size_t n, std::vector<std::vector<long>> rows) {
  std::vector<Vector> vs;
  for (auto& r : rows) {
    vs.push_back(vec(f, r));
  }
  return Subspace::span(f, n, vs);
}

// The id(h3) summand of id(h3) + (a1 -0-> a1).
SubXMod h3_summand(Field f) {
  Subspace s = span(f, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  return SubXMod{s, s, false};
}

CrossedModule wrap_lie(const LieAlgebra& g) {
  return CrossedModule(
      XModData{LieData::zero(g.field(), 0), g.data(), Matrix(g.field(), g.dim(), 0), {}});
}

// span{e1} included in n2.
CrossedModule inc_e1_n2(Field f) {
  return catalog::inclusion_xmod(catalog::n2(f), span(f, 2, {{0, 1}}));
}

bool next_matrix(Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      m(r, c) += Scalar::one(m.field());
      if (!m(r, c).is_zero()) {
        return true;
      }
    }
  }
  return false;
}

// Tries every quadruple of matrices of the witness shapes.
bool brute_force_isoclinic(const CrossedModule& x, const CrossedModule& y) {
  CommutatorPairing px = commutator_pairing(x);
  CommutatorPairing py = commutator_pairing(y);
  const Field f = x.field();
  Matrix e1(f, py.k1, px.k1);
  do {
    Matrix e0(f, py.k0, px.k0);
    do {
      Matrix x1(f, py.m1(), px.m1());
      do {
        Matrix x0(f, py.m0(), px.m0());
        do {
          if (isoclinism_verify(px, py, IsoclinismWitness{{e1, e0}, {x1, x0}, false}).verified) {
            return true;
          }
        } while (next_matrix(x0));
      } while (next_matrix(x1));
    } while (next_matrix(e0));
  } while (next_matrix(e1));
  return false;
}

std::vector<CrossedModule> catalog_modules(Field f) {
  std::vector<CrossedModule> out;
  for (const catalog::Entry& e : catalog::crossed_modules(f)) {
    if (e.is_xmod()) {
      out.push_back(e.xmod());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("commutator pairing examples") {
  CommutatorPairing ab = commutator_pairing(entry("abelian_a2_a1"));
  CHECK(ab.k1 == 0);
  CHECK(ab.k0 == 0);
  CHECK(ab.c1.empty());
  CHECK(ab.c0.empty());

  CrossedModule h = entry("id_h3");
  CommutatorPairing p = commutator_pairing(h);
  CHECK(p.k1 == 2);
  CHECK(p.k0 == 2);
  CHECK(p.m1() == 1);
  // c1(x, y) = [y, x] = -z and c1(y, x) = [x, y] = z.
  CHECK(p.c1[0 * 2 + 1] == vec(Q, {-1}));
  CHECK(p.c1[1 * 2 + 0] == vec(Q, {1}));
  CHECK(p.c1[0] == vec(Q, {0}));
  CHECK(p.c0[0 * 2 + 1] == vec(Q, {1}));
}

TEST_CASE("pairings are well defined on every catalog entry") {
  for (Field f : {Q, F2, F3, Field::prime(5)}) {
    for (const CrossedModule& x : catalog_modules(f)) {
      CommutatorPairing p = commutator_pairing(x);
      CHECK(check_pairing_well_defined(x, p) == "");
      // c1 agrees with the action on lifts.
      for (std::size_t a = 0; a < p.k1; ++a) {
        for (std::size_t b = 0; b < p.k0; ++b) {
          Vector l1 = p.central.q1.lift(unit_vector(f, p.k1, a));
          Vector l0 = p.central.q0.lift(unit_vector(f, p.k0, b));
          CHECK(p.commutator.s1.from_coordinates(p.c1[a * p.k0 + b]) == x.act(l0, l1));
        }
      }
    }
  }
}

TEST_CASE("central quotients") {
  QuotientXMod ab = central_quotient(entry("abelian_a2_a1"));
  CHECK(ab.quotient.dim1() == 0);
  CHECK(ab.quotient.dim0() == 0);
  QuotientXMod h = central_quotient(entry("id_h3"));
  CHECK(h.quotient.dim1() == 2);
  CHECK(h.quotient.boundary() == Matrix::identity(Q, 2));
  CHECK(h.quotient.l0().is_abelian());
  CrossedModule sl = entry("id_sl2");
  QuotientXMod s = central_quotient(sl);
  CHECK(s.quotient.data().l1.structure == sl.data().l1.structure);
  CHECK(s.quotient.data().action == sl.data().action);
}

TEST_CASE("verification examples") {
  for (Field f : {Q, F3}) {
    for (const CrossedModule& x : catalog_modules(f)) {
      IsoclinismWitness id = identity_isoclinism(x);
      CHECK(id.verified);
      CHECK(isoclinism_verify(x, x, id).verified);
    }
  }
  CrossedModule a = entry("abelian_a2_a1");
  CrossedModule b = entry("mod_trivial_a2_a1");
  IsoclinismWitness empty{{Matrix(Q, 0, 0), Matrix(Q, 0, 0)}, {Matrix(Q, 0, 0), Matrix(Q, 0, 0)}};
  CHECK(isoclinism_verify(a, b, empty).verified);
  CHECK(isoclinism_verify(CrossedModule::zero(Q), a, empty).verified);

  // Commutator dimensions differ, so no candidate has consistent shapes.
  CrossedModule flat = catalog::identity_xmod(catalog::abelian(Q, 3));
  CHECK_THROWS_AS(isoclinism_verify(entry("id_h3"), flat, identity_isoclinism(entry("id_h3"))),
                  std::invalid_argument);

  CrossedModule h = entry("id_h3");
  IsoclinismWitness bad = identity_isoclinism(h);
  bad.xi.alpha(0, 0) = Scalar(Q, 2);
  bad.xi.beta(0, 0) = Scalar(Q, 2);
  IsoclinismVerdict v = isoclinism_verify(h, h, bad);
  CHECK_FALSE(v.verified);
  CHECK(v.violation.find("diagram") != std::string::npos);

  IsoclinismWitness singular = identity_isoclinism(h);
  singular.eta.alpha = Matrix(Q, 2, 2);
  singular.eta.beta = Matrix(Q, 2, 2);
  CHECK_FALSE(isoclinism_verify(h, h, singular).verified);
}

TEST_CASE("xi is forced by eta") {
  for (const CrossedModule& x : catalog_modules(Q)) {
    CommutatorPairing p = commutator_pairing(x);
    IsoclinismWitness id = identity_isoclinism(x);
    auto xi = xi_from_eta(p, p, id.eta);
    REQUIRE(xi);
    CHECK(xi->alpha == id.xi.alpha);
    CHECK(xi->beta == id.xi.beta);
  }
  CrossedModule x = entry("id_h3+triv");
  SplitCenterResult s = split_center_isoclinism(x, h3_summand(Q));
  auto xi = xi_from_eta(commutator_pairing(s.m), commutator_pairing(x), s.witness.eta);
  REQUIRE(xi);
  CHECK(xi->alpha == s.witness.xi.alpha);
  CHECK(xi->beta == s.witness.xi.beta);
}

TEST_CASE("split center isoclinism") {
  CrossedModule ab = entry("abelian_a2_a1");
  SplitCenterResult z = split_center_isoclinism(ab, zero_sub(ab));
  CHECK(z.witness.verified);
  CHECK(z.m.dim1() == 0);

  for (Field f : {Q, F2, F3}) {
    CrossedModule x = entry("id_h3+triv", f);
    SplitCenterResult r = split_center_isoclinism(x, h3_summand(f));
    CHECK(r.witness.verified);
    CHECK(r.fixed_points_identity);
    CHECK(r.stabilizer_identity);
    CHECK(r.m.dim1() == 3);
    CHECK(isoclinism_verify(r.m, x, r.witness).verified);
  }

  CrossedModule x = entry("id_h3+triv");
  SubXMod small{span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}}), span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}}),
                false};
  CHECK_THROWS_AS(split_center_isoclinism(x, small), std::invalid_argument);

  // An ideal I with I + Z(g) = g: (I -> g) ~ id(g).
  CrossedModule g = entry("id_h3+a1");
  Subspace i = span(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  SplitCenterResult inc = split_center_isoclinism(g, SubXMod{i, Subspace::full(Q, 4), false});
  CHECK(inc.witness.verified);
  CrossedModule cat = entry("inc_h3_h3+a1");
  CHECK(inc.m.data().boundary == cat.data().boundary);
  CHECK(inc.m.data().action == cat.data().action);
}

TEST_CASE("equivalence relation") {
  for (Field f : {Q, F3}) {
    CrossedModule x = entry("id_h3+triv", f);
    SplitCenterResult r = split_center_isoclinism(x, h3_summand(f));
    const CrossedModule& m = r.m;
    IsoclinismWitness inv = isoclinism_invert(m, x, r.witness);
    CHECK(inv.verified);
    IsoclinismWitness back = isoclinism_invert(x, m, inv);
    CHECK(back.eta.alpha == r.witness.eta.alpha);
    CHECK(back.xi.beta == r.witness.xi.beta);
    IsoclinismWitness loop = isoclinism_compose(m, x, m, r.witness, inv);
    IsoclinismWitness id = identity_isoclinism(m);
    CHECK(loop.eta.alpha == id.eta.alpha);
    CHECK(loop.eta.beta == id.eta.beta);
    CHECK(loop.xi.alpha == id.xi.alpha);
    CHECK(loop.xi.beta == id.xi.beta);

    // id(h3) summand ~ x ~ id(h3+a1) through the center.
    CrossedModule y = entry("id_h3+a1", f);
    SplitCenterResult s = split_center_isoclinism(y, h3_summand(f));
    IsoclinismWitness xy = isoclinism_compose(
        x, m, s.m, inv, identity_isoclinism(m));
    IsoclinismWitness chain = isoclinism_compose(x, s.m, y, xy, s.witness);
    CHECK(chain.verified);
  }
  CrossedModule h = entry("id_h3");
  IsoclinismWitness bad = identity_isoclinism(h);
  bad.xi.alpha(0, 0) = Scalar(Q, 2);
  CHECK_THROWS_AS(isoclinism_invert(h, h, bad), std::invalid_argument);
}

TEST_CASE("component isoclinisms") {
  CrossedModule sl = entry("id_sl2");
  IsoclinismWitness id = identity_isoclinism(sl);
  ComponentIsoclinisms c = component_isoclinisms(sl, sl, id, ComponentCase::SimplyConnected);
  REQUIRE(c.l1);
  CHECK(c.l1->eta == Matrix::identity(Q, 3));
  CHECK(c.l1->xi == Matrix::identity(Q, 3));
  ComponentIsoclinisms a = component_isoclinisms(sl, sl, id, ComponentCase::Aspherical);
  REQUIRE(a.l0);
  CHECK(a.l0->eta == Matrix::identity(Q, 3));

  // id(h3) ~ id(h3+a1) gives h3 ~ h3+a1.
  CrossedModule y = entry("id_h3+a1");
  SplitCenterResult s = split_center_isoclinism(y, h3_summand(Q));
  ComponentIsoclinisms h = component_isoclinisms(s.m, y, s.witness, ComponentCase::SimplyConnected);
  REQUIRE(h.l1);
  CHECK(lie_isoclinism_verify(s.m.l1(), catalog::named_algebra("h3+a1", Q), *h.l1).verified);

  // (I -> g) ~ id(g) gives g ~ g on the base.
  Subspace i = span(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  SplitCenterResult inc = split_center_isoclinism(y, SubXMod{i, Subspace::full(Q, 4), false});
  ComponentIsoclinisms base = component_isoclinisms(inc.m, y, inc.witness, ComponentCase::Aspherical);
  REQUIRE(base.l0);
  CHECK(lie_isoclinism_verify(y.l0(), y.l0(), *base.l0).verified);
  CHECK_THROWS_AS(
      component_isoclinisms(inc.m, y, inc.witness, ComponentCase::SimplyConnected),
      std::invalid_argument);

  // Neither aspherical nor simply connected: both components still come out.
  CrossedModule x = entry("id_h3+triv");
  SplitCenterResult t = split_center_isoclinism(x, h3_summand(Q));
  ComponentIsoclinisms both = component_isoclinisms(t.m, x, t.witness, ComponentCase::FiniteDimensional);
  REQUIRE(both.l1);
  REQUIRE(both.l0);
  CHECK_THROWS_AS(component_isoclinisms(t.m, x, t.witness, ComponentCase::Aspherical),
                  std::invalid_argument);
}

TEST_CASE("finite-dimensional components on catalog identities") {
  for (const CrossedModule& x : catalog_modules(Q)) {
    ComponentIsoclinisms c =
        component_isoclinisms(x, x, identity_isoclinism(x), ComponentCase::FiniteDimensional);
    CHECK(c.l1);
    CHECK(c.l0);
  }
}

TEST_CASE("isoclinism from a Lie isoclinism") {
  LieAlgebra g = catalog::h3(Q);
  LieAlgebra h = catalog::named_algebra("h3+a1", Q);
  LieIsoclinismWitness lw{Matrix::identity(Q, 2), Matrix::identity(Q, 1)};
  REQUIRE(lie_isoclinism_verify(g, h, lw).verified);
  IsoclinismWitness w = isoclinism_from_lie(g, h, lw);
  CHECK(w.verified);
  CrossedModule x = catalog::identity_xmod(g);
  CrossedModule y = catalog::identity_xmod(h);
  ComponentIsoclinisms c = component_isoclinisms(x, y, w, ComponentCase::SimplyConnected);
  REQUIRE(c.l1);
  CHECK(lie_isoclinism_verify(g, h, *c.l1).verified);
  CHECK(c.l1->eta == lw.eta);
}

TEST_CASE("fingerprints") {
  Fingerprint h = fingerprint(entry("id_h3"));
  Fingerprint a = fingerprint(catalog::identity_xmod(catalog::abelian(Q, 3)));
  CHECK(h.first_difference(a) == "displacement");
  std::size_t disp = 0;
  for (std::size_t i = 0; i < h.labels.size(); ++i) {
    if (h.labels[i] == "displacement") {
      disp = i;
    }
  }
  CHECK(h.values[disp] == 1);
  CHECK(a.values[disp] == 0);

  Fingerprint ab = fingerprint(entry("abelian_a2_a1"));
  for (std::size_t i = 0; i < ab.values.size(); ++i) {
    CHECK(ab.values[i] == 0);
  }
  CHECK(fingerprint(entry("id_h3+triv")) == fingerprint(entry("id_h3")));
  CHECK(fingerprint(entry("id_h3+a1")) == fingerprint(entry("id_h3")));
  CHECK(fingerprint(entry("inc_h3_h3+a1")) == fingerprint(entry("id_h3+a1")));
  CHECK(fingerprint(entry("id_sl2")) == fingerprint(entry("id_sl2")));
  CHECK_FALSE(fingerprint(entry("id_sl2")) == fingerprint(entry("id_h3")));
}

TEST_CASE("search examples") {
  CrossedModule h = entry("id_h3", F2);
  IsoclinismSearchResult self = isoclinism_search(h, h);
  CHECK(self.status == SearchStatus::Found);
  CHECK(self.witness.verified);

  IsoclinismSearchResult ab =
      isoclinism_search(entry("abelian_a2_a1", F2), entry("id_a1", F2));
  CHECK(ab.status == SearchStatus::Found);
  CHECK(ab.witness.eta.alpha.rows() == 0);

  IsoclinismSearchResult neg = isoclinism_search(
      entry("id_h3", F3), catalog::identity_xmod(catalog::abelian(F3, 3)));
  CHECK(neg.status == SearchStatus::None);
  CHECK(neg.detail.find("fingerprint") != std::string::npos);

  CHECK_THROWS_AS(isoclinism_search(entry("id_h3"), entry("id_h3")), std::invalid_argument);
  CHECK_THROWS_AS(isoclinism_search(entry("id_h3", F2), entry("id_h3", F3)),
                  std::invalid_argument);

  CrossedModule x = entry("id_h3+triv", F3);
  CrossedModule m = split_center_isoclinism(x, h3_summand(F3)).m;
  IsoclinismSearchResult split = isoclinism_search(x, m);
  CHECK(split.status == SearchStatus::Found);
  CHECK(isoclinism_verify(x, m, split.witness).verified);
}

TEST_CASE("search is deterministic across job counts") {
  CrossedModule x = entry("id_h3+triv", F3);
  CrossedModule y = entry("id_h3+a1", F3);
  SearchOptions one;
  IsoclinismSearchResult a = isoclinism_search(x, y, one);
  IsoclinismSearchResult b = isoclinism_search(x, y, one);
  REQUIRE(a.status == SearchStatus::Found);
  CHECK(a.nodes == b.nodes);
  CHECK(a.witness.eta.alpha == b.witness.eta.alpha);
  for (unsigned jobs : {2u, 4u}) {
    SearchOptions many;
    many.jobs = jobs;
    IsoclinismSearchResult c = isoclinism_search(x, y, many);
    CHECK(c.status == a.status);
    CHECK(c.nodes == a.nodes);
    CHECK(c.witness.eta.alpha == a.witness.eta.alpha);
    CHECK(c.witness.eta.beta == a.witness.eta.beta);
    CHECK(c.witness.xi.alpha == a.witness.xi.alpha);
    CHECK(c.witness.xi.beta == a.witness.xi.beta);
  }

  // A negative search explores everything; the count must not depend on jobs.
  SearchOptions raw;
  raw.use_fingerprint = false;
  CrossedModule n = entry("id_n2", F3);
  CrossedModule nat = entry("mod_natural_n2", F3);
  IsoclinismSearchResult s = isoclinism_search(n, nat, raw);
  raw.jobs = 3;
  IsoclinismSearchResult t = isoclinism_search(n, nat, raw);
  CHECK(s.status == t.status);
  CHECK(s.nodes == t.nodes);
}

TEST_CASE("search budget") {
  CrossedModule x = entry("id_h3+triv", F3);
  CrossedModule y = entry("id_h3+a1", F3);
  SearchOptions tiny;
  tiny.budget = 1;
  IsoclinismSearchResult r = isoclinism_search(x, y, tiny);
  CHECK(r.status == SearchStatus::BudgetExhausted);
  CHECK(r.nodes >= 1);
  tiny.jobs = 4;
  CHECK(isoclinism_search(x, y, tiny).status == SearchStatus::BudgetExhausted);
}

TEST_CASE("search agrees with exhaustive enumeration over F2") {
  struct Pair {
    CrossedModule x;
    CrossedModule y;
  };
  std::vector<Pair> pairs = {
      {entry("id_a1", F2), entry("abelian_a2_a1", F2)},
      {CrossedModule::zero(F2), entry("mod_trivial_a2_a1", F2)},
      {entry("id_n2", F2), entry("id_n2", F2)},
      {entry("mod_natural_n2", F2), entry("mod_natural_n2", F2)},
      {entry("inc_z_h3", F2), entry("inc_0_h3", F2)},
      {entry("id_n2", F2), entry("mod_natural_n2", F2)},
      {entry("mod_scale_a1_a1", F2), entry("id_a1", F2)},
      {inc_e1_n2(F2), entry("id_n2", F2)},
      {wrap_lie(catalog::n2(F2)), entry("id_n2", F2)},
      {wrap_lie(catalog::n2(F2)), entry("inc_0_h3", F2)},
      {inc_e1_n2(F2), inc_e1_n2(F2)},
      {entry("mod_scale_a1_a1", F2), entry("mod_natural_n2", F2)},
  };
  std::size_t positives = 0;
  for (const Pair& p : pairs) {
    REQUIRE(p.x.dim1() + p.x.dim0() <= 4);
    REQUIRE(p.y.dim1() + p.y.dim0() <= 4);
    bool oracle = brute_force_isoclinic(p.x, p.y);
    positives += oracle ? 1 : 0;
    for (bool fp : {true, false}) {
      SearchOptions o;
      o.use_fingerprint = fp;
      IsoclinismSearchResult r = isoclinism_search(p.x, p.y, o);
      CHECK(r.status != SearchStatus::BudgetExhausted);
      CHECK((r.status == SearchStatus::Found) == oracle);
      if (r.status == SearchStatus::Found) {
        CHECK(isoclinism_verify(p.x, p.y, r.witness).verified);
        CHECK(fingerprint(p.x) == fingerprint(p.y));
      }
    }
  }
  CHECK(positives >= 5);
  CHECK(positives < pairs.size());
}

TEST_CASE("isomorphism searches") {
  CrossedModule n = entry("id_n2", F3);
  IsomorphismSearchResult self = xmod_isomorphism_search(n, n);
  REQUIRE(self.status == SearchStatus::Found);
  CHECK(is_isomorphism(n, n, self.iso));
  CHECK(xmod_isomorphism_search(n, entry("mod_natural_n2", F3)).status == SearchStatus::None);
  IsomorphismSearchResult lie =
      lie_isomorphism_search(catalog::h3(F3), catalog::named_algebra("h3", F3));
  CHECK(lie.status == SearchStatus::Found);
  CHECK(lie_isomorphism_search(catalog::h3(F3), catalog::abelian(F3, 3)).status ==
        SearchStatus::None);
}

TEST_CASE("derivation dimensions transport along isoclinisms") {
  CrossedModule x = entry("id_h3+triv", F3);
  SplitCenterResult s = split_center_isoclinism(x, h3_summand(F3));
  DercTransportReport r = derc_dimension_transport_check(s.m, x, s.witness);
  CHECK(r.searched);
  CHECK(r.whitehead_x == r.whitehead_y);
  CHECK(r.xmod_x == r.xmod_y);
  CHECK(r.whitehead_iso == SearchStatus::Found);
  CHECK(r.xmod_iso == SearchStatus::Found);
  CHECK(r.actor_iso == SearchStatus::Found);
  CHECK(r.ok());

  CrossedModule q = entry("id_h3+triv");
  SplitCenterResult t = split_center_isoclinism(q, h3_summand(Q));
  DercTransportReport rq = derc_dimension_transport_check(t.m, q, t.witness);
  CHECK_FALSE(rq.searched);
  CHECK(rq.ok());
}

TEST_CASE("nilpotency transports along isoclinisms") {
  CrossedModule x = entry("id_h3+triv");
  SplitCenterResult s = split_center_isoclinism(x, h3_summand(Q));
  NilpotencyTransportReport r = nilpotency_transport_check(s.m, x, s.witness);
  CHECK(r.nontrivial);
  CHECK(r.nilpotent_x);
  CHECK(r.nilpotent_y);
  CHECK(r.class_x == r.class_y);
  CHECK(r.ok());

  CrossedModule sl = entry("id_sl2");
  NilpotencyTransportReport n = nilpotency_transport_check(sl, sl, identity_isoclinism(sl));
  CHECK_FALSE(n.nilpotent_x);
  CHECK_FALSE(n.solvable_x);
  CHECK(n.ok());
}
