#ifndef TARSKI_DUALITY_HPP
#define TARSKI_DUALITY_HPP

// Non-commutative Stone duality for finite Boolean inverse meet-monoids.
//
// In the finite case every ultrafilter is the up-set of an atom, so the
// groupoid of ultrafilters is built directly on atoms: its arrows are the
// atoms of S, its identities the atoms of E(S). Finite Stone spaces are
// discrete, so interiors, closures and density reduce to the set-level
// notions and no topology layer exists.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "tarski/finite_monoid.hpp"
#include "tarski/groupoid.hpp"
#include "tarski/partial_bijection.hpp"

namespace tarski {

/// G(S). Arrow i is S.atoms()[i], object j is S.idempotent_atoms()[j];
/// ids are zero-padded element indices so that index order is id order.
/// Throws Error(not_boolean) when E(S) is not a Boolean algebra or a
/// composable product of atoms is not an atom.
FiniteGroupoid atom_groupoid(FiniteMonoid const& s);

struct MonoidRoundTrip {
  /// image[s] is the element of B(G(S)) made of the atoms below s
  std::vector<FiniteMonoid::element_type> image;
  nlohmann::json certificate;
};

struct GroupoidRoundTrip {
  /// functor[g] is the arrow of G(B(G)) given by the singleton {g}
  std::vector<std::size_t> functor;
  nlohmann::json certificate;
};

/// S -> B(G(S)), s |-> {atoms <= s}, checked to be a bijection preserving
/// products, inverses, meets, compatible joins, zero and one. Throws
/// Error(round_trip_failure) naming a violating element.
MonoidRoundTrip duality_roundtrip_monoid(FiniteMonoid const& s);

/// G -> G(B(G)), g |-> {g}, checked to be a bijective functor.
GroupoidRoundTrip duality_roundtrip_groupoid(FiniteGroupoid const& g);

/// theta_s as a partial bijection on idempotent atom positions (1-based):
/// f <= d(s) goes to the atom s f s^-1.
PartialBijection theta(FiniteMonoid const& s, FiniteMonoid::element_type a);

/// d(a) = d(b) and a e a^-1 = b e b^-1 for every idempotent e.
bool mu_related(FiniteMonoid const& s, FiniteMonoid::element_type a, FiniteMonoid::element_type b);

struct FundamentalReport {
  bool centralizer = true;   ///< Z(E(S)) = E(S)
  bool mu_trivial = true;    ///< mu is equality
  bool theta_injective = true;
  /// A non-idempotent centralizing every idempotent, when one exists.
  std::optional<FiniteMonoid::element_type> witness;
  bool consistent() const { return centralizer == mu_trivial && mu_trivial == theta_injective; }
};

FundamentalReport fundamental_report(FiniteMonoid const& s);
/// Decided by the centralizer criterion; Error(round_trip_failure) if the
/// three criteria of fundamental_report disagree.
bool is_fundamental(FiniteMonoid const& s);

/// Every local group trivial (discrete case: interior of the isotropy is
/// the isotropy itself).
bool is_essentially_principal(FiniteGroupoid const& g);
std::size_t orbit_count(FiniteGroupoid const& g);

/// For every atom a, the units above a form a coset: X = X X^-1 X.
bool units_above_atoms_are_cosets(FiniteMonoid const& s);

/// V_a V_b = V_ab on atom sets, for every pair of elements.
bool atom_sets_multiply(FiniteMonoid const& s);

} // namespace tarski

#endif
