#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "xlie/catalog.hpp"
#include "xlie/serialize.hpp"

using namespace xlie;
using io::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("xlie_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string emit(const std::string& name, const std::string& field) {
  Run r = run({"catalog", "emit", name, "--field", field});
  REQUIRE(r.code == 0);
  return write(name + "_" + field + ".json", r.out);
}

std::set<std::string> listing() {
  std::set<std::string> out;
  for (const auto& e : fs::directory_iterator(scratch())) {
    out.insert(e.path().filename().string());
  }
  return out;
}

json without_time(json r) {
  r.erase("wall_time_ms");
  return r;
}

}  // namespace

TEST_CASE("validate a catalog emission") {
  std::string h3 = emit("id_h3", "Q");
  Run r = run({"validate", h3});
  CHECK(r.code == cli::kOk);
  json rep = r.report();
  CHECK(rep["schema_version"] == cli::kSchemaVersion);
  CHECK(rep["command"] == "validate");
  CHECK(rep["verdict"]["status"] == "valid");
  std::ifstream in(h3);
  std::string text(std::istreambuf_iterator<char>(in), {});
  CHECK(rep["inputs"][0]["fnv1a64"] == io::fnv1a64(text));
  CHECK(rep["result"]["predicates"]["simply_connected"] == true);
}

TEST_CASE("invalid structures exit 1") {
  json doc = io::to_json(catalog::build("id_h3", Field::rational()).xmod());
  doc["action"][0][2] = json::parse(R"(["0", "0", "2"])");
  std::string bad = write("bad.json", doc.dump());
  Run r = run({"validate", bad});
  CHECK(r.code == cli::kNegative);
  CHECK(r.report()["verdict"]["status"] == "invalid");
  CHECK(r.report()["result"]["violations"].size() >= 1);
  Run c = run({"center", bad});
  CHECK(c.code == cli::kNegative);
  CHECK(c.report()["verdict"]["status"] == "invalid");
}

TEST_CASE("malformed documents exit 2 with a position") {
  std::string broken = write("broken.json", "{\n  \"field\": \"Q\",\n  oops\n}");
  Run r = run({"validate", broken});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("broken.json: 3:3:") != std::string::npos);
  CHECK(r.out.empty());

  json doc = io::to_json(catalog::build("id_h3", Field::rational()).xmod());
  doc["d"][1][1] = 1;
  Run s = run({"validate", write("schema.json", doc.dump())});
  CHECK(s.code == cli::kUsage);
  CHECK(s.err.find("/d/1/1") != std::string::npos);

  CHECK(run({"validate", (scratch() / "missing.json").string()}).code == cli::kUsage);
}

TEST_CASE("usage errors exit 2") {
  std::string h3 = emit("id_h3", "Q");
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"series", h3, "--kind", "upper"}).code == cli::kUsage);
  CHECK(run({"der", h3}).code == cli::kUsage);
  CHECK(run({"actor", h3, "--class", "--inner"}).code == cli::kUsage);
  CHECK(run({"quotient", h3, "--by", "derived"}).code == cli::kUsage);
  CHECK(run({"catalog", "emit", "nope"}).code == cli::kUsage);
  CHECK(run({"catalog", "emit", "id_sl2", "--field", "F3"}).code == cli::kUsage);
  CHECK(run({"isoclinic", "search", h3, h3}).code == cli::kUsage);
  CHECK(run({"isoclinic", "search", h3, emit("id_h3", "F2")}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("dimension cap") {
  std::string big = emit("id_h3+a1", "Q");
  ::setenv("XLIE_MAX_DIM", "6", 1);
  Run r = run({"validate", big});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("XLIE_MAX_DIM") != std::string::npos);
  ::setenv("XLIE_MAX_DIM", "8", 1);
  CHECK(run({"validate", big}).code == cli::kOk);
  ::setenv("XLIE_MAX_DIM", "many", 1);
  CHECK(run({"validate", big}).code == cli::kUsage);
  ::unsetenv("XLIE_MAX_DIM");
  CHECK(run({"validate", big}).code == cli::kOk);
}

TEST_CASE("isoclinic verify with the identity witness") {
  CrossedModule x = catalog::build("id_h3", Field::rational()).xmod();
  std::string h3 = emit("id_h3", "Q");
  std::string w = write("id_w.json", io::to_json(identity_isoclinism(x)).dump());
  Run r = run({"isoclinic", "verify", h3, h3, w});
  CHECK(r.code == cli::kOk);
  CHECK(r.report()["verdict"]["status"] == "verified");
  CHECK(r.report()["inputs"].size() == 3);

  IsoclinismWitness bad = identity_isoclinism(x);
  bad.xi.alpha(0, 0) = Scalar(Field::rational(), 2);
  bad.xi.beta(0, 0) = Scalar(Field::rational(), 2);
  Run v = run({"isoclinic", "verify", h3, h3, write("bad_w.json", io::to_json(bad).dump())});
  CHECK(v.code == cli::kNegative);
  CHECK(v.report()["verdict"]["status"] == "violated");

  // Wrong shapes are a violation, not a crash.
  std::string a3 = emit("id_a3", "Q");
  Run s = run({"isoclinic", "verify", h3, a3, w});
  CHECK(s.code == cli::kNegative);
  CHECK(s.report()["verdict"]["status"] == "violated");
}

TEST_CASE("isoclinic search verdicts") {
  std::string h3 = emit("id_h3", "F2");
  std::string a3 = emit("id_a3", "F2");
  Run neg = run({"isoclinic", "search", h3, a3});
  CHECK(neg.code == cli::kNegative);
  CHECK(neg.report()["verdict"]["status"] == "not_isoclinic");
  CHECK(neg.report()["verdict"]["detail"].get<std::string>().find("fingerprint") !=
        std::string::npos);

  std::string x = emit("id_h3+triv", "F3");
  std::string y = emit("id_h3+a1", "F3");
  std::string report = (scratch() / "search.json").string();
  Run pos = run({"--out", report, "isoclinic", "search", x, y, "--jobs", "2"});
  CHECK(pos.code == cli::kOk);
  CHECK(pos.report()["verdict"]["status"] == "verified");
  CHECK(pos.report()["result"]["witness"]["verified"] == true);

  // The emitted report replays through verify.
  Run replay = run({"isoclinic", "verify", x, y, report});
  CHECK(replay.code == cli::kOk);

  Run one = run({"isoclinic", "search", x, y, "--jobs", "1"});
  CHECK(without_time(one.report())["result"]["witness"] ==
        without_time(pos.report())["result"]["witness"]);
  CHECK(one.report()["result"]["nodes"] == pos.report()["result"]["nodes"]);

  Run budget = run({"isoclinic", "search", x, y, "--budget", "1"});
  CHECK(budget.code == cli::kBudget);
  CHECK(budget.report()["verdict"]["status"] == "budget_exhausted");
}

TEST_CASE("analysis commands") {
  std::string h3 = emit("id_h3", "Q");
  Run c = run({"center", h3});
  CHECK(c.code == cli::kOk);
  CHECK(c.report()["result"]["center"]["L1"]["dim"] == 1);
  CHECK(c.report()["result"]["center"]["L0"]["dim"] == 1);

  Run k = run({"commutator", h3});
  CHECK(k.report()["result"]["commutator"]["L1"]["dim"] == 1);

  Run lc = run({"series", h3, "--kind", "lc"});
  CHECK(lc.report()["result"]["terminates"] == true);
  CHECK(lc.report()["result"]["nilpotency_class"] == 2);
  Run dr = run({"series", emit("id_sl2", "Q"), "--kind", "derived"});
  CHECK(dr.report()["result"]["terminates"] == false);

  for (const char* kind : {"whitehead", "xmod", "whitehead-class", "xmod-class"}) {
    Run d = run({"der", h3, "--kind", kind});
    CHECK(d.code == cli::kOk);
    CHECK(d.report()["result"]["derivations"]["dim"] ==
          d.report()["result"]["derivations"]["basis"].size());
  }
  CHECK(run({"der", h3, "--kind", "whitehead-class"}).report()["result"]["derivations"]["dim"] ==
        2);

  Run q = run({"quotient", h3, "--by", "center"});
  CHECK(q.report()["result"]["xmod"]["L1"]["dim"] == 2);

  Run f = run({"fingerprint", h3});
  CHECK(f.report()["result"]["fingerprint"]["displacement"] == 1);

  Run l = run({"catalog", "list"});
  CHECK(l.report()["result"]["entries"].size() == catalog::names().size());
}

TEST_CASE("emitted objects feed back into other commands") {
  std::string n2 = emit("id_n2", "Q");
  for (std::vector<std::string> extra :
       {std::vector<std::string>{}, {"--class"}, {"--inner"}}) {
    std::vector<std::string> args = {"actor", n2};
    args.insert(args.end(), extra.begin(), extra.end());
    Run a = run(args);
    CHECK(a.code == cli::kOk);
    std::string saved = write("actor.json", a.out);
    Run v = run({"validate", saved});
    CHECK(v.code == cli::kOk);
  }
  Run q = run({"quotient", emit("id_h3", "Q"), "--by", "center"});
  CHECK(run({"validate", write("quot.json", q.out)}).code == cli::kOk);
}

TEST_CASE("only --out writes files") {
  std::string h3 = emit("id_h3", "F2");
  std::set<std::string> before = listing();
  run({"validate", h3});
  run({"fingerprint", h3});
  run({"actor", h3});
  run({"isoclinic", "search", h3, h3});
  run({"catalog", "list"});
  run({"catalog", "emit", "h3"});
  CHECK(listing() == before);
  std::string out = (scratch() / "fp.json").string();
  Run r = run({"--out", out, "fingerprint", h3});
  CHECK(r.code == cli::kOk);
  std::ifstream in(out);
  json saved = json::parse(in);
  CHECK(without_time(saved) == without_time(r.report()));
}

TEST_CASE("reports are deterministic apart from timing") {
  std::string x = emit("id_h3+triv", "F2");
  std::string y = emit("id_h3+a1", "F2");
  json a = without_time(run({"isoclinic", "search", x, y}).report());
  json b = without_time(run({"isoclinic", "search", x, y, "--jobs", "3"}).report());
  a["result"].erase("options");
  b["result"].erase("options");
  CHECK(a == b);
}
