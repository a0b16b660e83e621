#ifndef XLIE_CATALOG_HPP_
#define XLIE_CATALOG_HPP_

#include <string>
#include <variant>
#include <vector>

#include "xlie/crossed_module.hpp"

namespace xlie::catalog {

// Standard small algebras.
LieAlgebra abelian(Field field, std::size_t n);
// [e0, e1] = e1.
LieAlgebra n2(Field field);
// Heisenberg: basis x, y, z with [x, y] = z.
LieAlgebra h3(Field field);
// Basis h, e, f with [h, e] = 2e, [h, f] = -2f, [e, f] = h.
// Throws std::invalid_argument in characteristic 2 or 3.
LieAlgebra sl2(Field field);
// "a<n>", "n2", "h3", "sl2", or '+'-joined direct sums such as "h3+a1".
LieAlgebra named_algebra(const std::string& name, Field field);

// g --id--> g with the adjoint action.
CrossedModule identity_xmod(const LieAlgebra& g);
// h --inc--> g for an ideal h of g, adjoint action. Throws if h is not an ideal.
CrossedModule inclusion_xmod(const LieAlgebra& g, const Subspace& h);
// v --0--> g for a g-module v (abelian); action[i * dim v + j] = e_i . v_j.
// Throws InvalidStructure if the module law fails or v is not abelian.
CrossedModule module_xmod(const LieAlgebra& v, const LieAlgebra& g, std::vector<Vector> action);
// g --ad--> Der(g), Der(g) acting by evaluation.
CrossedModule adjoint_actor_xmod(const LieAlgebra& g);

struct Entry {
  std::string name;
  std::string note;
  std::variant<CrossedModule, LieAlgebra> value;

  bool is_xmod() const { return std::holds_alternative<CrossedModule>(value); }
  const CrossedModule& xmod() const { return std::get<CrossedModule>(value); }
  const LieAlgebra& algebra() const { return std::get<LieAlgebra>(value); }
};

// Names in a fixed order.
std::vector<std::string> names();
// Throws std::invalid_argument for unknown names or sl2 in characteristic 2, 3.
Entry build(const std::string& name, Field field);
// Every crossed-module entry that exists over the field, in names() order.
std::vector<Entry> crossed_modules(Field field);

}  // namespace xlie::catalog

#endif  // XLIE_CATALOG_HPP_
