#ifndef XLIE_DERIVATIONS_HPP_
#define XLIE_DERIVATIONS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xlie/crossed_module.hpp"

namespace xlie {

enum class DerivationKind { Whitehead, XMod, WhiteheadClass, XModClass };

std::string to_string(DerivationKind kind);
std::optional<DerivationKind> parse_derivation_kind(const std::string& text);

// A Lie algebra of derivations of a crossed module, realized by matrices.
// Whitehead kinds hold maps L0 -> L1 (n1 x n0). Crossed-module kinds hold
// pairs (alpha, beta) with alpha n1 x n1 and beta n0 x n0, flattened as the
// row-major entries of alpha followed by those of beta.
struct DerivationSpace {
  DerivationKind kind = DerivationKind::Whitehead;
  std::size_t n1 = 0;
  std::size_t n0 = 0;
  std::vector<Matrix> maps;      // the derivation or alpha
  std::vector<Matrix> partners;  // beta; empty for Whitehead kinds
  Subspace flat;                 // basis element k is flat's k-th basis row
  LieAlgebra algebra;            // structure constants in that basis
  // Coordinates of this basis inside the unrestricted space of the same
  // family. The full subspace for the unrestricted kinds.
  Subspace in_full;

  std::size_t dim() const { return maps.size(); }
  bool is_pair() const { return kind == DerivationKind::XMod || kind == DerivationKind::XModClass; }
  bool contains(const Matrix& map) const;
  bool contains(const Matrix& alpha, const Matrix& beta) const;
  // Throw std::invalid_argument for non-members.
  Vector coordinates(const Matrix& map) const;
  Vector coordinates(const Matrix& alpha, const Matrix& beta) const;
};

Vector flatten_pair(const Matrix& alpha, const Matrix& beta);

// Der(L0, L1) with bracket [a, b] = a d b - b d a.
DerivationSpace whitehead_derivations(const CrossedModule& x);
// Der(L) with the componentwise commutator bracket.
DerivationSpace xmod_derivations(const CrossedModule& x);

// The derivation l0 |-> [l0, l1] induced by l1 in L1.
Matrix class_derivation(const CrossedModule& x, const Vector& l1);
// The pair (l1 |-> [l0, l1], ad l0) induced by l0 in L0.
std::pair<Matrix, Matrix> class_pair(const CrossedModule& x, const Vector& l0);

// Spans of the induced derivations above. Throw std::logic_error when a
// generator fails the derivation law or the span is not bracket closed.
DerivationSpace class_preserving_whitehead(const CrossedModule& x);
DerivationSpace class_preserving_xmod(const CrossedModule& x);

// The crossed module w -> p with boundary a |-> (a d, d a) and action
// (alpha, beta) . a = alpha a - a beta, in the bases of the two spaces.
// Throws std::logic_error when an image falls outside the target space.
CrossedModule actor_from(const CrossedModule& x, const DerivationSpace& w,
                         const DerivationSpace& p);
CrossedModule actor(const CrossedModule& x);
CrossedModule class_actor(const CrossedModule& x);

// The subcrossed module of actor(x) generated by the induced derivations.
// Checks that it is an ideal of actor(x) contained in the class-preserving
// subcrossed module, throwing std::logic_error otherwise.
SubXMod inner_actor(const CrossedModule& x);

}  // namespace xlie

#endif  // XLIE_DERIVATIONS_HPP_
