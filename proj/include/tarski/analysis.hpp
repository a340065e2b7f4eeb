#ifndef TARSKI_ANALYSIS_HPP
#define TARSKI_ANALYSIS_HPP

// Structural classifiers. Finite instances are decided exactly by
// enumeration; for C_n the globally quantified flags are checked on a
// seeded sample of clopens with a constructive witness for each one.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "tarski/finite_monoid.hpp"
#include "tarski/prefix_map.hpp"

namespace tarski {

using element_t = FiniteMonoid::element_type;

struct Pencil {
  element_t source;
  element_t target;
  std::vector<element_t> elements;
};

/// Pencil from e to f: one x per idempotent atom g <= e with d(x) = g and
/// r(x) <= f. Throws Error(no_pencil).
Pencil find_pencil(FiniteMonoid const& s, element_t e, element_t f);
bool is_pencil(FiniteMonoid const& s, Pencil const& p);

struct SimplifyingReport {
  bool by_pencils = true;
  bool by_ideals = true;  ///< only computed for carriers up to 1600 elements
  bool by_orbits = true;
  bool ideals_checked = false;
  /// nonzero idempotents e, f with no pencil from e to f
  std::optional<std::pair<element_t, element_t>> counterexample;
  bool consistent() const;
};

SimplifyingReport zero_simplifying_report(FiniteMonoid const& s);
/// Pencil criterion; Error(round_trip_failure) if the cross-checks disagree.
bool is_zero_simplifying(FiniteMonoid const& s);

/// The join-closed ideal generated by e (as a sorted element list).
std::vector<element_t> join_ideal(FiniteMonoid const& s, element_t e);

/// For all nonzero idempotents e, f some x has d(x) = e, r(x) <= f.
std::optional<std::pair<element_t, element_t>> zero_simple_counterexample(FiniteMonoid const& s);
bool is_zero_simple(FiniteMonoid const& s);

std::optional<std::pair<element_t, element_t>> zero_disjunctive_counterexample(FiniteMonoid const& s);
bool is_zero_disjunctive(FiniteMonoid const& s);
bool is_congruence_free(FiniteMonoid const& s);

/// A nonzero idempotent that is not properly infinite, if any.
std::optional<element_t> not_properly_infinite(FiniteMonoid const& s);
bool is_purely_infinite(FiniteMonoid const& s);

struct FiniteDecomposition {
  element_t idempotent;
  std::vector<element_t> infinitesimals;
};

/// s = phi(s) join the non-idempotent atoms below s, when every such atom
/// is an infinitesimal; std::nullopt otherwise (non-trivial isotropy).
std::optional<FiniteDecomposition> principality_decompose(FiniteMonoid const& s, element_t a);

/// Every element lies below a unit.
bool is_factorizable(FiniteMonoid const& s);

struct Units {
  std::vector<element_t> elements;
  std::vector<element_t> generators;
  std::size_t order() const { return elements.size(); }
};

Units group_of_units(FiniteMonoid const& s);

struct Classification {
  std::optional<std::size_t> n;
  /// iso[s] is the image of s in I_n
  std::vector<element_t> iso;
  std::string failed_flag; ///< "fundamental" or "zero_simplifying" when n is empty
};

/// I_n with n the number of idempotent atoms, s |-> theta_s, verified to be
/// an isomorphism preserving meets and compatible joins. Throws
/// Error(not_classifiable) if the theta map fails verification.
Classification classify(FiniteMonoid const& s);

struct RealizationResult {
  bool units_isomorphic;
  bool monoids_isomorphic;
  std::size_t units_order_s;
  std::size_t units_order_t;
  bool agrees() const { return units_isomorphic == monoids_isomorphic; }
};

/// Error(out_of_class) unless both instances are fundamental and 0-simplifying.
RealizationResult finite_spatial_realization_check(FiniteMonoid const& s, FiniteMonoid const& t);

/// Every true flag carries a witness, every false flag a counterexample.
nlohmann::json analyze(FiniteMonoid const& s);

/// Sampled report for C_n: for each sampled clopen a transfer witness, a
/// properly infinite pair and a fundamentality probe, all checked.
nlohmann::json analyze_cuntz(int n, std::uint64_t seed, std::size_t samples);

/// a commutes with every cylinder idempotent [w] with |w| <= depth.
bool commutes_with_cylinders(PrefixMap const& a, std::size_t depth);

} // namespace tarski

#endif
