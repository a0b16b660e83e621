#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xlie/catalog.hpp"
#include "xlie/serialize.hpp"

using namespace xlie;
using io::json;

namespace {

const Field Q = Field::rational();

std::string where_of(const std::string& text) {
  try {
    io::Reader r("doc");
    CrossedModule(r.xmod(io::parse_json(text, "doc"), ""));
  } catch (const io::DocumentError& e) {
    return e.where();
  }
  return "";
}

json h3_doc() { return io::to_json(catalog::build("id_h3", Q).xmod()); }

}  // namespace

TEST_CASE("crossed module documents round-trip") {
  for (Field f : {Q, Field::prime(2), Field::prime(3), Field::prime(5)}) {
    for (const catalog::Entry& e : catalog::crossed_modules(f)) {
      if (!e.is_xmod()) {
        continue;
      }
      json doc = io::to_json(e.xmod());
      json again = io::parse_json(doc.dump(2), e.name);
      XModData data = io::Reader(e.name).xmod(again, "");
      XModData orig = e.xmod().data();
      CHECK(data.l1.structure == orig.l1.structure);
      CHECK(data.l0.structure == orig.l0.structure);
      CHECK(data.boundary == orig.boundary);
      CHECK(data.action == orig.action);
      CHECK(io::to_json(CrossedModule(data)) == doc);
    }
  }
}

TEST_CASE("document shape") {
  json doc = h3_doc();
  CHECK(doc["field"] == "Q");
  CHECK(doc["L1"]["dim"] == 3);
  // Only i < j nonzero brackets are listed: [x, y] = z.
  CHECK(doc["L1"]["brackets"] == json::parse(R"([[0, 1, ["0/1", "0/1", "1/1"]]])"));
  CHECK(doc["d"][0] == json::parse(R"(["1/1", "0/1", "0/1"])"));
  // The adjoint action lists [x, y] = z and [y, x] = -z.
  CHECK(doc["action"].size() == 2);
  CHECK(doc["action"][1] == json::parse(R"([1, 0, ["0/1", "0/1", "-1/1"]])"));

  json rational = io::to_json(Scalar::parse(Q, "6/-4"));
  CHECK(rational == "-3/2");
  Matrix empty(Q, 0, 3);
  CHECK(io::to_json(empty) == json::array());
}

TEST_CASE("syntax errors carry line and column") {
  std::string text = "{\n  \"field\": \"Q\",\n  \"L1\": [1,,]\n}";
  try {
    io::parse_json(text, "x.json");
    FAIL("expected a parse error");
  } catch (const io::DocumentError& e) {
    CHECK(e.where() == "3:12");
    CHECK(std::string(e.what()).rfind("x.json: 3:12: ", 0) == 0);
  }
  try {
    io::parse_json("", "empty.json");
    FAIL("expected a parse error");
  } catch (const io::DocumentError& e) {
    CHECK(e.where() == "1:1");
  }
}

TEST_CASE("schema errors carry a JSON pointer") {
  json doc = h3_doc();
  json bad = doc;
  bad["L1"]["brackets"][0][2][1] = 7;
  CHECK(where_of(bad.dump()) == "/L1/brackets/0/2/1");

  bad = doc;
  bad["L1"]["brackets"][0][2][1] = "1/0";
  CHECK(where_of(bad.dump()) == "/L1/brackets/0/2/1");

  bad = doc;
  bad["L0"]["brackets"][0][0] = 2;
  CHECK(where_of(bad.dump()) == "/L0/brackets/0");

  bad = doc;
  bad["L0"]["brackets"].push_back(bad["L0"]["brackets"][0]);
  CHECK(where_of(bad.dump()) == "/L0/brackets/1");

  bad = doc;
  bad["d"].erase(2);
  CHECK(where_of(bad.dump()) == "/d");

  bad = doc;
  bad["d"][1].push_back("0");
  CHECK(where_of(bad.dump()) == "/d/1");

  bad = doc;
  bad["action"][0][0] = 3;
  CHECK(where_of(bad.dump()) == "/action/0");

  bad = doc;
  bad["L1"]["field"] = "F3";
  CHECK(where_of(bad.dump()) == "/L1/field");

  bad = doc;
  bad["field"] = "F4";
  CHECK(where_of(bad.dump()) == "/field");

  bad = doc;
  bad.erase("action");
  CHECK(where_of(bad.dump()) == "/");

  bad = doc;
  bad["L1"]["dim"] = 100000;
  CHECK(where_of(bad.dump()) == "/L1/dim");

  bad = doc;
  bad["L1"]["dim"] = -1;
  CHECK(where_of(bad.dump()) == "/L1/dim");
}

TEST_CASE("axiom failures are not document errors") {
  json doc = h3_doc();
  doc["action"][0][2] = json::parse(R"(["0", "0", "2"])");
  XModData data = io::Reader("doc").xmod(doc, "");
  CHECK_FALSE(validate_xmod(data).ok());
  CHECK_THROWS_AS(CrossedModule{data}, InvalidStructure);
}

TEST_CASE("witness documents round-trip") {
  CrossedModule x = catalog::build("id_h3", Q).xmod();
  CommutatorPairing p = commutator_pairing(x);
  IsoclinismWitness w = identity_isoclinism(x);
  json doc = io::to_json(w);
  CHECK(doc["verified"] == true);
  IsoclinismWitness back = io::Reader("w").witness(doc, Q, p, "");
  CHECK(back.eta.alpha == w.eta.alpha);
  CHECK(back.xi.beta == w.xi.beta);

  CrossedModule ab = catalog::build("abelian_a2_a1", Q).xmod();
  CommutatorPairing pa = commutator_pairing(ab);
  IsoclinismWitness empty = io::Reader("w").witness(io::to_json(identity_isoclinism(ab)), Q, pa, "");
  CHECK(isoclinism_verify(pa, pa, empty).verified);

  doc["xi1"] = "oops";
  CHECK_THROWS_AS(io::Reader("w").witness(doc, Q, p, ""), io::DocumentError);
}

TEST_CASE("derivation space documents") {
  CrossedModule x = catalog::build("id_n2", Q).xmod();
  DerivationSpace w = whitehead_derivations(x);
  json doc = io::to_json(w);
  CHECK(doc["kind"] == "whitehead");
  CHECK(doc["dim"] == w.dim());
  CHECK(doc["basis"].size() == w.dim());
  LieData s = io::Reader("d").lie(doc["structure"], "/structure");
  CHECK(s.structure == w.algebra.data().structure);

  DerivationSpace p = xmod_derivations(x);
  json pd = io::to_json(p);
  CHECK(pd["basis"][0].size() == 2);
  Matrix alpha = io::Reader("d").matrix(pd["basis"][0][0], Q, 2, 2, "/basis/0/0");
  CHECK(alpha == p.maps[0]);
}

TEST_CASE("input hashes") {
  CHECK(io::fnv1a64("") == "cbf29ce484222325");
  CHECK(io::fnv1a64("a") == "af63dc4c8601ec8c");
  CHECK(io::fnv1a64("foobar") == "85944171f73967e8");
}
