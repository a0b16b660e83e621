#ifndef XLIE_ISOCLINISM_HPP_
#define XLIE_ISOCLINISM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xlie/crossed_module.hpp"

namespace xlie {

// The commutator maps of a crossed module on its central quotient:
//   c1(l1 + L1^{L0}, l0 + St n Z) = [l0, l1] in D_{L0}(L1),
//   c0(l0 + St n Z, l0' + St n Z) = [l0, l0'] in [L0, L0].
// Quotients use the coordinates of central.q1 / central.q0, commutators the
// canonical bases of commutator.s1 / commutator.s0.
struct CommutatorPairing {
  QuotientXMod central;
  SubXMod commutator;
  CrossedModule commutator_module;  // restrict_xmod(x, commutator)
  std::size_t k1 = 0;
  std::size_t k0 = 0;
  std::vector<Vector> c1;  // c1[a * k0 + b]
  std::vector<Vector> c0;  // c0[a * k0 + b]

  std::size_t m1() const { return commutator.s1.dim(); }
  std::size_t m0() const { return commutator.s0.dim(); }
  Vector c1_of(const Vector& u1, const Vector& u0) const;
  Vector c0_of(const Vector& u0, const Vector& v0) const;
};

QuotientXMod central_quotient(const CrossedModule& x);
CommutatorPairing commutator_pairing(const CrossedModule& x);
// Re-evaluates every pairing value with each lift shifted by each central
// basis vector. Empty string when all values are unchanged.
std::string check_pairing_well_defined(const CrossedModule& x, const CommutatorPairing& c);

// eta: central quotients, xi: commutator crossed modules, in the coordinates
// of CommutatorPairing.
struct IsoclinismWitness {
  XModMorphism eta;
  XModMorphism xi;
  bool verified = false;
};

struct IsoclinismVerdict {
  bool verified = false;
  std::string violation;
};

// Throws std::invalid_argument when a matrix has the wrong shape.
IsoclinismVerdict isoclinism_verify(const CrossedModule& x, const CrossedModule& y,
                                    const IsoclinismWitness& w);
IsoclinismVerdict isoclinism_verify(const CommutatorPairing& px, const CommutatorPairing& py,
                                    const IsoclinismWitness& w);

// The c1 and c0 squares alone, on all quotient basis pairs. Empty when both
// commute.
std::string check_pairing_diagrams(const CommutatorPairing& px, const CommutatorPairing& py,
                                   const IsoclinismWitness& w);

// The bracket of L1 x| L0 read on central quotients:
//   ((u1, u0), (v1, v0)) |-> (c1(v1, u0 + d u1) - c1(u1, v0), c0(u0, v0)),
// using [l1, l1'] = [d l1, l1'].
std::pair<Vector, Vector> combined_pairing(const CommutatorPairing& p, const Vector& u1,
                                           const Vector& u0, const Vector& v1, const Vector& v0);
// The single square L/Z x L/Z -> [L, L] on all pairs of basis vectors of
// L/Z (both degrees). When eta commutes with the boundaries it commutes
// exactly when the c1 and c0 squares do.
std::string check_combined_diagram(const CommutatorPairing& px, const CommutatorPairing& py,
                                   const IsoclinismWitness& w);

// The xi forced by eta through the two diagrams, if one exists.
std::optional<XModMorphism> xi_from_eta(const CommutatorPairing& px, const CommutatorPairing& py,
                                        const XModMorphism& eta);

IsoclinismWitness identity_isoclinism(const CrossedModule& x);
// Both re-verify the result and throw std::invalid_argument when an input
// witness does not verify.
IsoclinismWitness isoclinism_invert(const CrossedModule& x, const CrossedModule& y,
                                    const IsoclinismWitness& w);
IsoclinismWitness isoclinism_compose(const CrossedModule& x, const CrossedModule& y,
                                     const CrossedModule& z, const IsoclinismWitness& xy,
                                     const IsoclinismWitness& yz);

// For m with m.s1 + L1^{L0} = L1 and m.s0 + (St n Z) = L0, the isoclinism
// from M to x induced by inclusion.
struct SplitCenterResult {
  CrossedModule m;  // restrict_xmod(x, m)
  IsoclinismWitness witness;
  bool fixed_points_identity = false;  // M1^{M0} = M1 n L1^{L0}
  bool stabilizer_identity = false;    // St_{M0}(M1) n Z(M0) = M0 n (St n Z)
};

// Throws std::invalid_argument when m is not a subcrossed module or the sums
// fall short.
SplitCenterResult split_center_isoclinism(const CrossedModule& x, const SubXMod& m);

enum class ComponentCase { Aspherical, SimplyConnected, FiniteDimensional };

struct ComponentIsoclinisms {
  std::optional<LieIsoclinismWitness> l1;
  std::optional<LieIsoclinismWitness> l0;
};

// Lie isoclinisms of the components. Throws std::invalid_argument when the
// case's predicate fails or w does not verify, std::logic_error when an
// extracted witness fails lie_isoclinism_verify.
ComponentIsoclinisms component_isoclinisms(const CrossedModule& x, const CrossedModule& y,
                                           const IsoclinismWitness& w, ComponentCase c);

// id(g) ~ id(h) from a Lie isoclinism g ~ h.
IsoclinismWitness isoclinism_from_lie(const LieAlgebra& g, const LieAlgebra& h,
                                      const LieIsoclinismWitness& w);

struct Fingerprint {
  std::vector<std::string> labels;
  std::vector<std::size_t> values;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.labels == b.labels && a.values == b.values;
  }
  // First label whose values differ, or empty.
  std::string first_difference(const Fingerprint& other) const;
};

Fingerprint fingerprint(const CrossedModule& x);

enum class SearchStatus { Found, None, BudgetExhausted };

struct SearchOptions {
  std::uint64_t budget = 1000000;  // backtrack nodes
  unsigned jobs = 1;
  bool use_fingerprint = true;
};

struct IsoclinismSearchResult {
  SearchStatus status = SearchStatus::None;
  std::string detail;
  IsoclinismWitness witness;
  std::uint64_t nodes = 0;
};

struct IsomorphismSearchResult {
  SearchStatus status = SearchStatus::None;
  std::string detail;
  XModMorphism iso;
  std::uint64_t nodes = 0;
};

// Backtracking over eta columns (eta0 first, then eta1, each image in
// lexicographic order); xi is then forced. The result does not depend on
// options.jobs. Throws std::invalid_argument over Q or across fields.
IsoclinismSearchResult isoclinism_search(const CrossedModule& x, const CrossedModule& y,
                                         const SearchOptions& options = {});
IsomorphismSearchResult xmod_isomorphism_search(const CrossedModule& x, const CrossedModule& y,
                                                const SearchOptions& options = {});
// The isomorphism, if any, is in iso.beta.
IsomorphismSearchResult lie_isomorphism_search(const LieAlgebra& g, const LieAlgebra& h,
                                               const SearchOptions& options = {});

struct DercTransportReport {
  std::size_t whitehead_x = 0;
  std::size_t whitehead_y = 0;
  std::size_t xmod_x = 0;
  std::size_t xmod_y = 0;
  bool searched = false;  // finite field only
  std::optional<SearchStatus> whitehead_iso;
  std::optional<SearchStatus> xmod_iso;
  std::optional<SearchStatus> actor_iso;
  bool ok() const;
};

DercTransportReport derc_dimension_transport_check(const CrossedModule& x, const CrossedModule& y,
                                                   const IsoclinismWitness& w,
                                                   const SearchOptions& options = {});

struct NilpotencyTransportReport {
  bool nilpotent_x = false;
  bool nilpotent_y = false;
  bool solvable_x = false;
  bool solvable_y = false;
  std::size_t class_x = 0;
  std::size_t class_y = 0;
  std::size_t length_x = 0;
  std::size_t length_y = 0;
  bool nontrivial = false;  // neither side is the zero crossed module
  bool ok() const;
};

NilpotencyTransportReport nilpotency_transport_check(const CrossedModule& x, const CrossedModule& y,
                                                     const IsoclinismWitness& w);

std::string to_string(SearchStatus s);

}  // namespace xlie

#endif  // XLIE_ISOCLINISM_HPP_
