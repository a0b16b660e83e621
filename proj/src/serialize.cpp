#include "xlie/serialize.hpp"

#include <cstdint>
#include <cstdio>
#include <set>
#include <utility>

namespace xlie::io {

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }
std::string key(const std::string& path, const char* name) { return path + "/" + name; }

json nonzero_entries(std::size_t rows, std::size_t cols, const std::vector<Vector>& tensor,
                     bool upper_only) {
  json out = json::array();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = upper_only ? i + 1 : 0; j < cols; ++j) {
      const Vector& v = tensor[i * cols + j];
      if (is_zero(v)) {
        continue;
      }
      json coeffs = json::array();
      for (const Scalar& s : v) {
        coeffs.push_back(s.to_string());
      }
      out.push_back(json::array({i, j, coeffs}));
    }
  }
  return out;
}

}  // namespace

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    // nlohmann prefixes its own position; keep only the reason.
    std::size_t cut = msg.find(": ", msg.find("parse error"));
    throw DocumentError(source, line_col(text, e.byte == 0 ? 0 : e.byte - 1),
                        cut == std::string::npos ? msg : msg.substr(cut + 2));
  }
}

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c).to_string());
    }
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const Subspace& s) {
  return json{{"ambient", s.ambient_dim()}, {"dim", s.dim()}, {"basis", to_json(s.basis())}};
}

json to_json(const LieAlgebra& g) {
  return json{{"dim", g.dim()},
              {"field", g.field().name()},
              {"brackets", nonzero_entries(g.dim(), g.dim(), g.data().structure, true)}};
}

json to_json(const CrossedModule& x) {
  return json{{"field", x.field().name()},
              {"L1", to_json(x.l1())},
              {"L0", to_json(x.l0())},
              {"d", to_json(x.boundary())},
              {"action", nonzero_entries(x.dim0(), x.dim1(), x.data().action, false)}};
}

json to_json(const SubXMod& m) {
  return json{{"L1", to_json(m.s1)}, {"L0", to_json(m.s0)}};
}

json to_json(const DerivationSpace& d) {
  json basis = json::array();
  for (std::size_t k = 0; k < d.dim(); ++k) {
    if (d.is_pair()) {
      basis.push_back(json::array({to_json(d.maps[k]), to_json(d.partners[k])}));
    } else {
      basis.push_back(to_json(d.maps[k]));
    }
  }
  return json{{"kind", to_string(d.kind)},
              {"field", d.algebra.field().name()},
              {"n1", d.n1},
              {"n0", d.n0},
              {"dim", d.dim()},
              {"basis", std::move(basis)},
              {"structure", to_json(d.algebra)}};
}

json to_json(const IsoclinismWitness& w) {
  return json{{"eta1", to_json(w.eta.alpha)},
              {"eta0", to_json(w.eta.beta)},
              {"xi1", to_json(w.xi.alpha)},
              {"xi0", to_json(w.xi.beta)},
              {"verified", w.verified}};
}

json to_json(const LieIsoclinismWitness& w) {
  return json{{"eta", to_json(w.eta)}, {"xi", to_json(w.xi)}};
}

json to_json(const Fingerprint& f) {
  json out = json::object();
  for (std::size_t i = 0; i < f.labels.size(); ++i) {
    out[f.labels[i]] = f.values[i];
  }
  return out;
}

void Reader::fail(const std::string& path, const std::string& message) const {
  throw DocumentError(source_, path.empty() ? "/" : path, message);
}

const json& Reader::member(const json& j, const std::string& path, const char* key) const {
  if (!j.is_object()) {
    fail(path, "expected an object");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    fail(path, std::string("missing key \"") + key + "\"");
  }
  return *it;
}

std::size_t Reader::index(const json& j, const std::string& path) const {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    fail(path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

Field Reader::field(const json& j, const std::string& path) const {
  if (!j.is_string()) {
    fail(path, "expected a field name string");
  }
  try {
    return Field::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

Scalar Reader::scalar(const json& j, Field f, const std::string& path) const {
  if (!j.is_string()) {
    fail(path, "expected an exact scalar string");
  }
  try {
    return Scalar::parse(f, j.get<std::string>());
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

Vector Reader::vector(const json& j, Field f, std::size_t n, const std::string& path) const {
  if (!j.is_array() || j.size() != n) {
    fail(path, "expected an array of " + std::to_string(n) + " scalars");
  }
  Vector v;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(scalar(j[i], f, at(path, i)));
  }
  return v;
}

Matrix Reader::matrix(const json& j, Field f, std::size_t rows, std::size_t cols,
                      const std::string& path) const {
  if (!j.is_array() || j.size() != rows) {
    fail(path, "expected a matrix with " + std::to_string(rows) + " rows");
  }
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vector row = vector(j[r], f, cols, at(path, r));
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = row[c];
    }
  }
  return m;
}

Matrix Reader::matrix(const json& j, Field f, std::size_t cols_if_empty,
                      const std::string& path) const {
  if (!j.is_array()) {
    fail(path, "expected a matrix (array of rows)");
  }
  if (j.empty()) {
    return Matrix(f, 0, cols_if_empty);
  }
  if (!j[0].is_array()) {
    fail(at(path, 0), "expected a row array");
  }
  return matrix(j, f, j.size(), j[0].size(), path);
}

LieData Reader::lie(const json& j, const std::string& path) const {
  Field f = field(member(j, path, "field"), key(path, "field"));
  std::size_t n = index(member(j, path, "dim"), key(path, "dim"));
  if (n > max_dim_) {
    fail(key(path, "dim"), "dimension " + std::to_string(n) + " exceeds the limit " +
                               std::to_string(max_dim_));
  }
  LieData data = LieData::zero(f, n);
  const json& br = member(j, path, "brackets");
  const std::string bpath = key(path, "brackets");
  if (!br.is_array()) {
    fail(bpath, "expected an array of [i, j, coefficients]");
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < br.size(); ++k) {
    const std::string p = at(bpath, k);
    const json& e = br[k];
    if (!e.is_array() || e.size() != 3) {
      fail(p, "expected [i, j, coefficients]");
    }
    std::size_t a = index(e[0], at(p, 0));
    std::size_t b = index(e[1], at(p, 1));
    if (a >= b || b >= n) {
      fail(p, "bracket indices must satisfy i < j < dim");
    }
    if (!seen.insert({a, b}).second) {
      fail(p, "bracket listed twice");
    }
    data.set_bracket(a, b, vector(e[2], f, n, at(p, 2)));
  }
  return data;
}

XModData Reader::xmod(const json& j, const std::string& path) const {
  Field f = field(member(j, path, "field"), key(path, "field"));
  XModData data;
  data.l1 = lie(member(j, path, "L1"), key(path, "L1"));
  data.l0 = lie(member(j, path, "L0"), key(path, "L0"));
  if (!(data.l1.field == f)) {
    fail(key(key(path, "L1"), "field"), "field differs from the crossed module's");
  }
  if (!(data.l0.field == f)) {
    fail(key(key(path, "L0"), "field"), "field differs from the crossed module's");
  }
  const std::size_t n1 = data.l1.dim;
  const std::size_t n0 = data.l0.dim;
  data.boundary = matrix(member(j, path, "d"), f, n0, n1, key(path, "d"));
  data.action.assign(n0 * n1, Vector(n1, Scalar::zero(f)));
  const json& act = member(j, path, "action");
  const std::string apath = key(path, "action");
  if (!act.is_array()) {
    fail(apath, "expected an array of [i, j, coefficients]");
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < act.size(); ++k) {
    const std::string p = at(apath, k);
    const json& e = act[k];
    if (!e.is_array() || e.size() != 3) {
      fail(p, "expected [i, j, coefficients]");
    }
    std::size_t a = index(e[0], at(p, 0));
    std::size_t b = index(e[1], at(p, 1));
    if (a >= n0 || b >= n1) {
      fail(p, "action indices out of range");
    }
    if (!seen.insert({a, b}).second) {
      fail(p, "action pair listed twice");
    }
    data.action[a * n1 + b] = vector(e[2], f, n1, at(p, 2));
  }
  return data;
}

IsoclinismWitness Reader::witness(const json& j, Field f, const CommutatorPairing& px,
                                  const std::string& path) const {
  IsoclinismWitness w;
  w.eta.alpha = matrix(member(j, path, "eta1"), f, px.k1, key(path, "eta1"));
  w.eta.beta = matrix(member(j, path, "eta0"), f, px.k0, key(path, "eta0"));
  w.xi.alpha = matrix(member(j, path, "xi1"), f, px.m1(), key(path, "xi1"));
  w.xi.beta = matrix(member(j, path, "xi0"), f, px.m0(), key(path, "xi0"));
  return w;
}

}  // namespace xlie::io
