#include "xlie/catalog.hpp"

#include <charconv>
#include <stdexcept>

namespace xlie::catalog {

namespace {

Vector vec(Field f, std::initializer_list<long> values) {
  Vector v;
  for (long x : values) {
    v.emplace_back(f, x);
  }
  return v;
}

LieAlgebra single_named(const std::string& name, Field field) {
  if (name == "n2") {
    return n2(field);
  }
  if (name == "h3") {
    return h3(field);
  }
  if (name == "sl2") {
    return sl2(field);
  }
  if (name.size() >= 2 && name[0] == 'a') {
    std::size_t n = 0;
    auto [end, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec == std::errc() && end == name.data() + name.size()) {
      return abelian(field, n);
    }
  }
  throw std::invalid_argument("unknown algebra '" + name + "'");
}

CrossedModule trivial_module(Field f, std::size_t dim_v, std::size_t dim_g) {
  return module_xmod(abelian(f, dim_v), abelian(f, dim_g),
                     std::vector<Vector>(dim_v * dim_g, zero_vector(f, dim_v)));
}

// Natural representation of n2 on K^2: e0 -> E11, e1 -> E12.
CrossedModule natural_n2_module(Field f) {
  std::vector<Vector> action = {
      vec(f, {1, 0}), vec(f, {0, 0}),  // e0 . v0 = v0, e0 . v1 = 0
      vec(f, {0, 0}), vec(f, {1, 0}),  // e1 . v0 = 0,  e1 . v1 = v0
  };
  return module_xmod(abelian(f, 2), n2(f), std::move(action));
}

struct Recipe {
  const char* name;
  const char* note;
  bool needs_sl2;
};

constexpr Recipe kRecipes[] = {
    {"a1", "abelian, dim 1", false},
    {"a3", "abelian, dim 3", false},
    {"n2", "[e0,e1]=e1", false},
    {"h3", "Heisenberg [x,y]=z", false},
    {"sl2", "[h,e]=2e, [h,f]=-2f, [e,f]=h", true},
    {"h3+a1", "Heisenberg plus a central line", false},
    {"id_a1", "identity crossed module on a1", false},
    {"id_a3", "identity crossed module on a3", false},
    {"id_n2", "identity crossed module on n2", false},
    {"id_h3", "identity crossed module on h3", false},
    {"id_sl2", "identity crossed module on sl2", true},
    {"id_h3+a1", "identity crossed module on h3+a1", false},
    {"inc_0_h3", "0 included in h3", false},
    {"inc_z_h3", "center span{z} included in h3", false},
    {"inc_yz_h3", "ideal span{y,z} included in h3", false},
    {"inc_h3_h3+a1", "h3 included in h3+a1 (I + Z(g) = g)", false},
    {"mod_trivial_a2_a1", "a2 -0-> a1, zero action", false},
    {"mod_scale_a1_a1", "a1 -0-> a1, scaling action", false},
    {"mod_natural_n2", "K^2 -0-> n2, natural representation", false},
    {"abelian_a2_a1", "a2 -> a1 projecting onto the first coordinate, zero action", false},
    {"adj_a1", "a1 -ad-> Der(a1)", false},
    {"adj_n2", "n2 -ad-> Der(n2)", false},
    {"adj_h3", "h3 -ad-> Der(h3)", false},
    {"adj_sl2", "sl2 -ad-> Der(sl2)", true},
    {"id_h3+triv", "id(h3) plus the trivial module a1 -0-> a1", false},
};

}  // namespace

LieAlgebra abelian(Field field, std::size_t n) {
  return LieAlgebra::abelian(field, n);
}

LieAlgebra n2(Field field) {
  LieData d = LieData::zero(field, 2);
  d.set_bracket(0, 1, vec(field, {0, 1}));
  return LieAlgebra(std::move(d));
}

LieAlgebra h3(Field field) {
  LieData d = LieData::zero(field, 3);
  d.set_bracket(0, 1, vec(field, {0, 0, 1}));
  return LieAlgebra(std::move(d));
}

LieAlgebra sl2(Field field) {
  if (field.characteristic() == 2 || field.characteristic() == 3) {
    throw std::invalid_argument("sl2 is refused in characteristic 2 and 3");
  }
  LieData d = LieData::zero(field, 3);
  d.set_bracket(0, 1, vec(field, {0, 2, 0}));
  d.set_bracket(0, 2, vec(field, {0, 0, -2}));
  d.set_bracket(1, 2, vec(field, {1, 0, 0}));
  return LieAlgebra(std::move(d));
}

LieAlgebra named_algebra(const std::string& name, Field field) {
  std::size_t start = 0;
  LieAlgebra result = abelian(field, 0);
  bool first = true;
  while (start <= name.size()) {
    std::size_t plus = name.find('+', start);
    std::string part = name.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    LieAlgebra g = single_named(part, field);
    result = first ? g : direct_sum(result, g);
    first = false;
    if (plus == std::string::npos) {
      break;
    }
    start = plus + 1;
  }
  return result;
}

CrossedModule identity_xmod(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Vector> action;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      action.push_back(g.structure(i, j));
    }
  }
  return CrossedModule(
      XModData{g.data(), g.data(), Matrix::identity(g.field(), n), std::move(action)});
}

CrossedModule inclusion_xmod(const LieAlgebra& g, const Subspace& h) {
  if (!is_ideal(g, h)) {
    throw std::invalid_argument("inclusion_xmod: subspace is not an ideal");
  }
  LieAlgebra sub = subalgebra(g, h);
  std::vector<Vector> basis = h.basis_vectors();
  std::vector<Vector> action;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < h.dim(); ++j) {
      action.push_back(h.coordinates(g.bracket(unit_vector(g.field(), g.dim(), i), basis[j])));
    }
  }
  return CrossedModule(XModData{sub.data(), g.data(), h.inclusion(), std::move(action)});
}

CrossedModule module_xmod(const LieAlgebra& v, const LieAlgebra& g, std::vector<Vector> action) {
  if (!v.is_abelian()) {
    ValidationReport report;
    report.violations.push_back({"module", {}, "module must be an abelian Lie algebra"});
    throw InvalidStructure("not a module", std::move(report));
  }
  return CrossedModule(
      XModData{v.data(), g.data(), Matrix(g.field(), g.dim(), v.dim()), std::move(action)});
}

CrossedModule adjoint_actor_xmod(const LieAlgebra& g) {
  DerivationAlgebra der = derivation_algebra(g);
  const std::size_t n = g.dim();
  const std::size_t m = der.basis.size();
  Matrix boundary(g.field(), m, n);
  for (std::size_t j = 0; j < n; ++j) {
    boundary.set_column(j, der.coordinates(g.ad(j)));
  }
  std::vector<Vector> action;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      action.push_back(der.basis[k].column(j));
    }
  }
  return CrossedModule(
      XModData{g.data(), der.algebra.data(), std::move(boundary), std::move(action)});
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const Recipe& r : kRecipes) {
    out.emplace_back(r.name);
  }
  return out;
}

Entry build(const std::string& name, Field f) {
  const Recipe* recipe = nullptr;
  for (const Recipe& r : kRecipes) {
    if (name == r.name) {
      recipe = &r;
    }
  }
  if (recipe == nullptr) {
    throw std::invalid_argument("unknown catalog entry '" + name + "'");
  }
  auto entry = [&](auto value) { return Entry{recipe->name, recipe->note, std::move(value)}; };

  if (name.rfind("id_", 0) == 0 && name != "id_h3+triv") {
    return entry(identity_xmod(named_algebra(name.substr(3), f)));
  }
  if (name.rfind("adj_", 0) == 0) {
    return entry(adjoint_actor_xmod(named_algebra(name.substr(4), f)));
  }
  if (name == "inc_0_h3") {
    return entry(inclusion_xmod(h3(f), Subspace::zero(f, 3)));
  }
  if (name == "inc_z_h3") {
    return entry(inclusion_xmod(h3(f), Subspace::span(f, 3, {vec(f, {0, 0, 1})})));
  }
  if (name == "inc_yz_h3") {
    return entry(
        inclusion_xmod(h3(f), Subspace::span(f, 3, {vec(f, {0, 1, 0}), vec(f, {0, 0, 1})})));
  }
  if (name == "inc_h3_h3+a1") {
    LieAlgebra g = named_algebra("h3+a1", f);
    return entry(inclusion_xmod(
        g, Subspace::span(f, 4, {vec(f, {1, 0, 0, 0}), vec(f, {0, 1, 0, 0}), vec(f, {0, 0, 1, 0})})));
  }
  if (name == "mod_trivial_a2_a1") {
    return entry(trivial_module(f, 2, 1));
  }
  if (name == "mod_scale_a1_a1") {
    return entry(module_xmod(abelian(f, 1), abelian(f, 1), {vec(f, {1})}));
  }
  if (name == "mod_natural_n2") {
    return entry(natural_n2_module(f));
  }
  if (name == "abelian_a2_a1") {
    Matrix d(f, 1, 2);
    d(0, 0) = Scalar::one(f);
    return entry(CrossedModule(XModData{LieData::zero(f, 2), LieData::zero(f, 1), std::move(d),
                                        std::vector<Vector>(2, zero_vector(f, 2))}));
  }
  if (name == "id_h3+triv") {
    return entry(direct_sum_xmod(identity_xmod(h3(f)), trivial_module(f, 1, 1)));
  }
  return entry(named_algebra(name, f));
}

std::vector<Entry> crossed_modules(Field field) {
  std::vector<Entry> out;
  const bool sl2_ok = field.characteristic() != 2 && field.characteristic() != 3;
  for (const Recipe& r : kRecipes) {
    if (r.needs_sl2 && !sl2_ok) {
      continue;
    }
    Entry e = build(r.name, field);
    if (e.is_xmod()) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace xlie::catalog
