#ifndef XLIE_CROSSED_MODULE_HPP_
#define XLIE_CROSSED_MODULE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "xlie/lie_algebra.hpp"

namespace xlie {

// Unvalidated crossed-module data. action[i * n1 + j] = [e_i, f_j] for e_i in
// the basis of L0 and f_j in the basis of L1; boundary is n0 x n1.
struct XModData {
  LieData l1;
  LieData l0;
  Matrix boundary;
  std::vector<Vector> action;
};

// Checks shapes, the homomorphism property of d, both Lie action laws,
// equivariance d([l0, l1]) = [l0, d(l1)] and the Peiffer identity
// [d(l1), l1'] = [l1, l1'], listing every failure.
ValidationReport validate_xmod(const XModData& data);

// A Lie crossed module d: L1 -> L0 with an action of L0 on L1. Immutable.
class CrossedModule {
 public:
  CrossedModule() : CrossedModule(zero(Field::rational())) {}
  // Throws InvalidStructure when validate_xmod(data) is not ok.
  explicit CrossedModule(XModData data);

  static CrossedModule zero(Field field);

  const Field& field() const { return l1_.field(); }
  const LieAlgebra& l1() const { return l1_; }
  const LieAlgebra& l0() const { return l0_; }
  std::size_t dim1() const { return l1_.dim(); }
  std::size_t dim0() const { return l0_.dim(); }
  const Matrix& boundary() const { return boundary_; }
  const Vector& action(std::size_t i, std::size_t j) const { return action_[i * dim1() + j]; }
  // Matrix of f |-> [e_i, f] on L1.
  const Matrix& action_matrix(std::size_t i) const { return action_matrices_[i]; }
  Matrix action_matrix_of(const Vector& x0) const;
  Vector act(const Vector& x0, const Vector& x1) const;
  XModData data() const;

 private:
  LieAlgebra l1_;
  LieAlgebra l0_;
  Matrix boundary_;
  std::vector<Vector> action_;
  std::vector<Matrix> action_matrices_;
};

// A pair of subspaces (s1 of L1, s0 of L0) of a fixed parent crossed module.
struct SubXMod {
  Subspace s1;
  Subspace s0;
  bool ideal = false;

  friend bool operator==(const SubXMod& a, const SubXMod& b) {
    return a.s1 == b.s1 && a.s0 == b.s0;
  }
};

// Empty string when (s1, s0) is a subcrossed module (resp. an ideal) of x.
std::string check_subxmod(const CrossedModule& x, const Subspace& s1, const Subspace& s0);
std::string check_ideal(const CrossedModule& x, const Subspace& s1, const Subspace& s0);
// Throw std::invalid_argument when the checks above fail.
SubXMod make_subxmod(const CrossedModule& x, Subspace s1, Subspace s0);
SubXMod make_ideal(const CrossedModule& x, Subspace s1, Subspace s0);
SubXMod whole(const CrossedModule& x);
SubXMod zero_sub(const CrossedModule& x);
bool contains(const SubXMod& outer, const SubXMod& inner);

// The subcrossed module m as a crossed module in the canonical bases of m.s1, m.s0.
CrossedModule restrict_xmod(const CrossedModule& x, const SubXMod& m);

// A pair (alpha: L1 -> L1', beta: L0 -> L0').
struct XModMorphism {
  Matrix alpha;
  Matrix beta;
};

// Empty string when m is a morphism of crossed modules.
std::string check_morphism(const CrossedModule& source, const CrossedModule& target,
                           const XModMorphism& m);
bool is_isomorphism(const CrossedModule& source, const CrossedModule& target,
                    const XModMorphism& m);
XModMorphism identity_morphism(const CrossedModule& x);
XModMorphism compose(const XModMorphism& second, const XModMorphism& first);

// L1^{L0}: elements of L1 fixed by the whole action.
Subspace fixed_points(const CrossedModule& x);
// St_{L0}(L1): elements of L0 acting trivially on L1.
Subspace stabilizer(const CrossedModule& x);
// St_{L0}(L1) intersected with Z(L0).
Subspace central_stabilizer(const CrossedModule& x);
// Z(L) = (L1^{L0} -> St_{L0}(L1) n Z(L0)).
SubXMod center_xmod(const CrossedModule& x);
// D_{L0}(L1): the span of all [l0, l1].
Subspace displacement(const CrossedModule& x);
// [L, L] = (D_{L0}(L1) -> [L0, L0]).
SubXMod commutator_xmod(const CrossedModule& x);
// [M, N] = (span{[m0, n1], [n0, m1]} -> [M0, N0]) for ideals M, N.
SubXMod commutator_ideals(const CrossedModule& x, const SubXMod& m, const SubXMod& n);

struct QuotientXMod {
  CrossedModule quotient;
  QuotientCoords q1;
  QuotientCoords q0;
  XModMorphism projection;
};

QuotientXMod quotient_xmod(const CrossedModule& x, const SubXMod& n);

// M / (M n N) -> (M + N) / N induced by inclusion, with both quotients.
struct SecondIsomorphism {
  SubXMod intersection;
  SubXMod sum;
  CrossedModule m;          // restrict_xmod(x, M)
  CrossedModule m_sum;      // restrict_xmod(x, M + N)
  QuotientXMod left;        // M / (M n N)
  QuotientXMod right;       // (M + N) / N
  XModMorphism iso;         // left.quotient -> right.quotient
};

SecondIsomorphism second_isomorphism(const CrossedModule& x, const SubXMod& m, const SubXMod& n);

struct Predicates {
  bool aspherical = false;
  bool simply_connected = false;
  bool abelian = false;
  bool finite_dimensional = true;
};

Predicates predicates(const CrossedModule& x);

struct XModSeries {
  // Lower central: terms[0] = L, terms[k] = [L, terms[k-1]].
  // Derived: terms[0] = L, terms[k] = [terms[k-1], terms[k-1]].
  std::vector<SubXMod> terms;
  bool terminates = false;
  std::size_t index = 0;  // nilpotency class / derived length when terminates
};

XModSeries xmod_series(const CrossedModule& x, SeriesKind kind);

CrossedModule direct_sum_xmod(const CrossedModule& x, const CrossedModule& y);

// Subspace identities forced by the boundary being onto or injective.
struct BoundaryCenterReport {
  bool simply_connected = false;
  bool aspherical = false;
  bool fixed_points_equal_center = true;          // checked when simply connected
  bool displacement_equals_derived = true;        // checked when simply connected
  bool center_inside_stabilizer = true;           // checked when aspherical
  bool ok() const {
    return fixed_points_equal_center && displacement_equals_derived && center_inside_stabilizer;
  }
};

BoundaryCenterReport boundary_center_identities(const CrossedModule& x);

}  // namespace xlie

#endif  // XLIE_CROSSED_MODULE_HPP_
