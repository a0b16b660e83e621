#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "xlie/catalog.hpp"
#include "xlie/serialize.hpp"

namespace xlie::cli {

namespace {

using io::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The document could be read but the structure fails its axioms.
class InvalidInput : public std::runtime_error {
 public:
  InvalidInput(const std::string& source, const ValidationReport& report)
      : std::runtime_error(source + ": " + report.to_string()), report(report) {}
  ValidationReport report;
};

std::size_t max_dim() {
  const char* env = std::getenv("XLIE_MAX_DIM");
  if (env == nullptr || *env == '\0') {
    return 12;
  }
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) {
    throw UsageError(std::string("XLIE_MAX_DIM must be a positive integer, got \"") + env + "\"");
  }
  return v;
}

struct Input {
  std::string path;
  std::string text;
  json doc;
};

Input read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw UsageError("cannot read " + path);
    }
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  json doc = io::parse_json(text, path);
  return Input{path, std::move(text), std::move(doc)};
}

// A crossed module document, or a report carrying one under result.xmod.
CrossedModule load_xmod(const Input& in, std::size_t cap) {
  io::Reader r(in.path, cap);
  const json* j = &in.doc;
  std::string path;
  if (j->is_object() && j->contains("schema_version")) {
    const json& result = r.member(*j, "", "result");
    j = &r.member(result, "/result", "xmod");
    path = "/result/xmod";
  }
  XModData data = r.xmod(*j, path);
  if (data.l1.dim + data.l0.dim > cap) {
    r.fail(path, "total dimension " + std::to_string(data.l1.dim + data.l0.dim) +
                     " exceeds XLIE_MAX_DIM = " + std::to_string(cap));
  }
  ValidationReport report = validate_xmod(data);
  if (!report.ok()) {
    throw InvalidInput(in.path, report);
  }
  return CrossedModule(std::move(data));
}

IsoclinismWitness load_witness(const Input& in, Field f, const CommutatorPairing& px) {
  io::Reader r(in.path);
  const json* j = &in.doc;
  std::string path;
  if (j->is_object() && j->contains("schema_version")) {
    const json& result = r.member(*j, "", "result");
    j = &r.member(result, "/result", "witness");
    path = "/result/witness";
  }
  return r.witness(*j, f, px, path);
}

json verdict(const std::string& status, const std::string& detail) {
  return json{{"status", status}, {"detail", detail}};
}

json subspace_series(const std::vector<SubXMod>& terms) {
  json out = json::array();
  for (const SubXMod& t : terms) {
    out.push_back(io::to_json(t));
  }
  return out;
}

json predicates_json(const CrossedModule& x) {
  Predicates p = predicates(x);
  return json{{"aspherical", p.aspherical},
              {"simply_connected", p.simply_connected},
              {"abelian", p.abelian}};
}

json search_options_json(const SearchOptions& o) {
  return json{{"budget", o.budget}, {"jobs", o.jobs}, {"use_fingerprint", o.use_fingerprint}};
}

struct Outcome {
  int code = kOk;
  json verdict;
  json result = json::object();
};

int exit_for(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return kOk;
    case SearchStatus::None:
      return kNegative;
    case SearchStatus::BudgetExhausted:
      return kBudget;
  }
  return kUsage;
}

std::string status_for(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "verified";
    case SearchStatus::None:
      return "not_isoclinic";
    case SearchStatus::BudgetExhausted:
      return "budget_exhausted";
  }
  return "error";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with crossed modules of Lie algebras", "xlie"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Also write the report to this file");

  std::string x_path;
  std::string y_path;
  std::string w_path;
  std::string kind;
  std::string by;
  std::string name;
  std::string field_name = "Q";
  bool class_flag = false;
  bool inner_flag = false;
  bool no_fingerprint = false;
  SearchOptions options;

  auto* validate = app.add_subcommand("validate", "Check the crossed module axioms");
  validate->add_option("x", x_path)->required();
  auto* center_cmd = app.add_subcommand("center", "Center, fixed points and stabilizer");
  center_cmd->add_option("x", x_path)->required();
  auto* commutator = app.add_subcommand("commutator", "Commutator subcrossed module");
  commutator->add_option("x", x_path)->required();
  auto* series = app.add_subcommand("series", "Lower central or derived series");
  series->add_option("x", x_path)->required();
  series->add_option("--kind", kind)->required()->check(CLI::IsMember({"lc", "derived"}));
  auto* der = app.add_subcommand("der", "Derivation algebras");
  der->add_option("x", x_path)->required();
  der->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"whitehead", "xmod", "whitehead-class", "xmod-class"}));
  auto* actor_cmd = app.add_subcommand("actor", "Actor crossed module");
  actor_cmd->add_option("x", x_path)->required();
  auto* class_opt = actor_cmd->add_flag("--class", class_flag, "Class-preserving actor");
  actor_cmd->add_flag("--inner", inner_flag, "Inner actor inside the actor")->excludes(class_opt);
  auto* quotient = app.add_subcommand("quotient", "Quotient crossed module");
  quotient->add_option("x", x_path)->required();
  quotient->add_option("--by", by)->required()->check(CLI::IsMember({"center"}));
  auto* fp = app.add_subcommand("fingerprint", "Isoclinism invariants");
  fp->add_option("x", x_path)->required();

  auto* iso = app.add_subcommand("isoclinic", "Isoclinism verification and search");
  iso->require_subcommand(1);
  auto* verify = iso->add_subcommand("verify", "Check a witness");
  verify->add_option("x", x_path)->required();
  verify->add_option("y", y_path)->required();
  verify->add_option("w", w_path)->required();
  auto* search = iso->add_subcommand("search", "Search for a witness over a prime field");
  search->add_option("x", x_path)->required();
  search->add_option("y", y_path)->required();
  search->add_option("--budget", options.budget, "Backtrack node budget")
      ->check(CLI::PositiveNumber);
  search->add_option("--jobs", options.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  search->add_flag("--no-fingerprint", no_fingerprint, "Skip the fingerprint shortcut");

  auto* cat = app.add_subcommand("catalog", "Built-in examples");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "List entry names");
  auto* emit = cat->add_subcommand("emit", "Print an entry as a document");
  emit->add_option("name", name)->required();
  emit->add_option("--field", field_name, "Q or F<p>");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "xlie: " << e.what() << "\n";
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<Input> inputs;
  Outcome o;
  std::string command;
  try {
    const std::size_t cap = max_dim();
    auto input = [&](const std::string& path) -> const Input& {
      inputs.push_back(read_input(path));
      return inputs.back();
    };
    auto xmod_input = [&](const std::string& path) { return load_xmod(input(path), cap); };

    if (*validate) {
      command = "validate";
      try {
        CrossedModule x = xmod_input(x_path);
        o.verdict = verdict("valid", "");
        o.result["predicates"] = predicates_json(x);
      } catch (const InvalidInput& e) {
        o.code = kNegative;
        o.verdict = verdict("invalid", e.report.to_string());
        json violations = json::array();
        for (const Violation& v : e.report.violations) {
          violations.push_back(json{{"axiom", v.axiom}, {"indices", v.indices}, {"detail", v.detail}});
        }
        o.result["violations"] = violations;
      }
    } else if (*center_cmd) {
      command = "center";
      CrossedModule x = xmod_input(x_path);
      o.verdict = verdict("ok", "");
      o.result["center"] = io::to_json(center_xmod(x));
      o.result["fixed_points"] = io::to_json(fixed_points(x));
      o.result["stabilizer"] = io::to_json(stabilizer(x));
      o.result["center_l0"] = io::to_json(center(x.l0()));
    } else if (*commutator) {
      command = "commutator";
      CrossedModule x = xmod_input(x_path);
      SubXMod c = commutator_xmod(x);
      o.verdict = verdict("ok", "");
      o.result["commutator"] = io::to_json(c);
      o.result["xmod"] = io::to_json(restrict_xmod(x, c));
    } else if (*series) {
      command = "series";
      CrossedModule x = xmod_input(x_path);
      XModSeries s =
          xmod_series(x, kind == "lc" ? SeriesKind::LowerCentral : SeriesKind::Derived);
      o.verdict = verdict("ok", "");
      o.result["kind"] = kind;
      o.result["terms"] = subspace_series(s.terms);
      o.result["terminates"] = s.terminates;
      if (s.terminates) {
        o.result[kind == "lc" ? "nilpotency_class" : "derived_length"] = s.index;
      }
    } else if (*der) {
      command = "der";
      CrossedModule x = xmod_input(x_path);
      DerivationSpace d = kind == "whitehead"         ? whitehead_derivations(x)
                          : kind == "xmod"            ? xmod_derivations(x)
                          : kind == "whitehead-class" ? class_preserving_whitehead(x)
                                                      : class_preserving_xmod(x);
      o.verdict = verdict("ok", "");
      o.result["derivations"] = io::to_json(d);
    } else if (*actor_cmd) {
      command = "actor";
      CrossedModule x = xmod_input(x_path);
      o.verdict = verdict("ok", "");
      if (inner_flag) {
        CrossedModule full = actor(x);
        SubXMod inner = inner_actor(x);
        o.result["variant"] = "inner";
        o.result["inside_actor"] = io::to_json(inner);
        o.result["xmod"] = io::to_json(restrict_xmod(full, inner));
      } else {
        o.result["variant"] = class_flag ? "class" : "full";
        o.result["xmod"] = io::to_json(class_flag ? class_actor(x) : actor(x));
      }
    } else if (*quotient) {
      command = "quotient";
      CrossedModule x = xmod_input(x_path);
      SubXMod z = center_xmod(x);
      QuotientXMod q = quotient_xmod(x, z);
      o.verdict = verdict("ok", "");
      o.result["by"] = by;
      o.result["kernel"] = io::to_json(z);
      o.result["projection"] =
          json{{"L1", io::to_json(q.projection.alpha)}, {"L0", io::to_json(q.projection.beta)}};
      o.result["xmod"] = io::to_json(q.quotient);
    } else if (*fp) {
      command = "fingerprint";
      CrossedModule x = xmod_input(x_path);
      o.verdict = verdict("ok", "");
      o.result["fingerprint"] = io::to_json(fingerprint(x));
    } else if (*verify) {
      command = "isoclinic verify";
      CrossedModule x = xmod_input(x_path);
      CrossedModule y = xmod_input(y_path);
      if (!(x.field() == y.field())) {
        throw UsageError("the two crossed modules are over different fields");
      }
      CommutatorPairing px = commutator_pairing(x);
      CommutatorPairing py = commutator_pairing(y);
      IsoclinismWitness w = load_witness(input(w_path), x.field(), px);
      IsoclinismVerdict v;
      try {
        v = isoclinism_verify(px, py, w);
      } catch (const std::invalid_argument& e) {
        v.violation = e.what();
      }
      o.code = v.verified ? kOk : kNegative;
      o.verdict = verdict(v.verified ? "verified" : "violated", v.violation);
    } else if (*search) {
      command = "isoclinic search";
      CrossedModule x = xmod_input(x_path);
      CrossedModule y = xmod_input(y_path);
      if (!(x.field() == y.field()) || !x.field().is_finite()) {
        throw UsageError("search needs two crossed modules over the same prime field");
      }
      options.use_fingerprint = !no_fingerprint;
      IsoclinismSearchResult r = isoclinism_search(x, y, options);
      o.code = exit_for(r.status);
      o.verdict = verdict(status_for(r.status), r.detail);
      o.result["options"] = search_options_json(options);
      o.result["nodes"] = r.nodes;
      if (r.status == SearchStatus::Found) {
        o.result["witness"] = io::to_json(r.witness);
      }
    } else if (*list) {
      command = "catalog list";
      json entries = json::array();
      for (const std::string& n : catalog::names()) {
        catalog::Entry e = catalog::build(n, Field::rational());
        entries.push_back(
            json{{"name", n}, {"kind", e.is_xmod() ? "xmod" : "lie"}, {"note", e.note}});
      }
      o.verdict = verdict("ok", "");
      o.result["entries"] = entries;
    } else if (*emit) {
      command = "catalog emit";
      Field f = Field::parse(field_name);
      catalog::Entry e = catalog::build(name, f);
      // The bare document, ready to feed to the other commands.
      json doc = e.is_xmod() ? io::to_json(e.xmod()) : io::to_json(e.algebra());
      if (!out_path.empty()) {
        std::ofstream file(out_path);
        file << doc.dump(2) << "\n";
      }
      out << doc.dump(2) << "\n";
      return kOk;
    }
  } catch (const io::DocumentError& e) {
    err << "xlie: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "xlie: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidInput& e) {
    command = command.empty() ? "unknown" : command;
    o.code = kNegative;
    o.verdict = verdict("invalid", e.what());
  } catch (const std::invalid_argument& e) {
    // Unknown catalog names, sl2 in small characteristic, bad field names.
    err << "xlie: " << e.what() << "\n";
    return kUsage;
  }

  const auto stop = std::chrono::steady_clock::now();
  json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = command;
  json in = json::array();
  for (const Input& i : inputs) {
    in.push_back(json{{"path", i.path}, {"fnv1a64", io::fnv1a64(i.text)}});
  }
  report["inputs"] = in;
  report["verdict"] = o.verdict;
  report["result"] = o.result;
  report["wall_time_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();

  const std::string text = report.dump(2);
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      err << "xlie: cannot write " << out_path << "\n";
      return kUsage;
    }
    file << text << "\n";
  }
  out << text << "\n";
  return o.code;
}

}  // namespace xlie::cli
