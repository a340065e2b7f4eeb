#ifndef TARSKI_CUNTZ_HPP
#define TARSKI_CUNTZ_HPP

// Constructive witnesses in the Cuntz inverse monoids C_n.
//
// Points of Cantor space are sampled as eventually periodic words, on
// which membership, images and fixedness are decidable. Every
// construction here has a postcondition checker in the same header.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tarski/prefix_map.hpp"
#include "tarski/random.hpp"

namespace tarski::cuntz {

bool contains(PrefixMap const& e, EPPoint const& p);
bool in_domain(PrefixMap const& s, EPPoint const& p);
/// Image of p under s; Error(point_outside_domain) when p is not in d(s).
EPPoint apply_point(PrefixMap const& s, EPPoint const& p);

/// Infinitesimal a with d(a) join r(a) <= e and p in d(a). Takes the
/// cylinder of e containing p (refined by one letter when it is the whole
/// space), extends it by the next letter of p and changes that letter.
PrefixMap infinitesimal_at(PrefixMap const& e, EPPoint const& p);

/// Non-trivial involution t with sigma(t) <= e and p in sigma(t).
PrefixMap f1_witness(PrefixMap const& e, EPPoint const& p);

struct F2Witness {
  PrefixMap unit;
  PrefixMap region;        ///< f <= e with f orthogonal to t f t
  PrefixMap infinitesimal; ///< a with d(a) join r(a) <= f
  EPPoint moved_point;
};

/// Unit g with sigma(g) <= e join t e t that acts like t on sigma(g).
F2Witness f2_witness(PrefixMap const& t, PrefixMap const& e);

struct F3Witness {
  PrefixMap unit;    ///< g h, of order three
  PrefixMap first;   ///< involution from a
  PrefixMap second;  ///< involution from b
  PrefixMap a;       ///< infinitesimals with a b restricted and infinitesimal
  PrefixMap b;
  /// Blocks 1 = d(a) = r(b), 2 = r(a), 3 = d(b), 4 = the rest.
  std::vector<PrefixMap> blocks;
  /// Image block of each block under the unit (index i -> block_map[i]).
  std::vector<int> block_map;
  std::string cycle_notation() const;
};

/// Unit g != 1 with g^2 != 1, g^3 = 1 and sigma(g) <= e.
F3Witness f3_witness(PrefixMap const& e);

/// x, y with d(x) = d(y) = e, r(x) orthogonal to r(y), r(x) join r(y) <= e.
std::pair<PrefixMap, PrefixMap> properly_infinite_witness(PrefixMap const& e);

/// x with d(x) = e and r(x) <= f.
PrefixMap transfer_witness(PrefixMap const& e, PrefixMap const& f);

/// Unit g with g e g^-1 <= f (e != 1, f != 0).
PrefixMap conjugator_unit(PrefixMap const& e, PrefixMap const& f);

/// x with d(x) = e and r(x) = f; exists iff the cylinder counts agree
/// modulo n - 1, otherwise Error(no_iso) quoting both counts.
PrefixMap clopen_iso(PrefixMap const& e, PrefixMap const& f);

struct FactorPart {
  PrefixMap unit;
  PrefixMap idempotent;
};

/// s = join of unit_i * idempotent_i, an orthogonal join with
/// idempotent_i <= d(s).
std::vector<FactorPart> piecewise_factorize(PrefixMap const& s);

struct PrincipalDecomposition {
  PrefixMap idempotent;
  std::vector<PrefixMap> infinitesimals;
};

struct NonPrincipalWitness {
  PrefixMap::Pair pair; ///< d != r with one a prefix of the other
  EPPoint fixed_point;
};

/// Either s = e join s_1 join ... join s_m (idempotent plus orthogonal
/// infinitesimals), or a pair whose comparable words pin a fixed point.
std::variant<PrincipalDecomposition, NonPrincipalWitness>
principality_decompose(PrefixMap const& s);

/// A point q in e with g q != q; requires 0 != e <= sigma(g).
EPPoint find_moved_point(PrefixMap const& g, PrefixMap const& e);

/// A cylinder c containing p with c orthogonal to g c g^-1 (and c <= within
/// when given); requires g p != p.
PrefixMap separating_idempotent(PrefixMap const& g, EPPoint const& p,
                                std::optional<PrefixMap> const& within = std::nullopt);

/// Involutions whose supports join to exactly e: for every cylinder [w] of
/// e and letters i < j, the swap of [w i] and [w j].
std::vector<PrefixMap> support_cover(PrefixMap const& e);

/// A unit agreeing with s on a neighbourhood of p (p in d(s)).
PrefixMap unit_in_ultrafilter(PrefixMap const& s, EPPoint const& p);

/// One infinitesimal, or two whose product lies in the ultrafilter of s at p
/// (the ultrafilter must be non-idempotent, i.e. p not in phi(s)).
std::vector<PrefixMap> hengist_witness(PrefixMap const& s, EPPoint const& p);

// --- postcondition checkers -------------------------------------------

struct Check {
  std::string name;
  bool passed;
};

struct CheckReport {
  std::vector<Check> checks;
  bool passed() const;
  void add(std::string name, bool ok) { checks.push_back({std::move(name), ok}); }
};

CheckReport check_f1(PrefixMap const& e, EPPoint const& p, PrefixMap const& t);
CheckReport check_f2(PrefixMap const& t, PrefixMap const& e, PrefixMap const& g,
                     std::uint64_t seed, std::size_t samples = 50);
CheckReport check_f3(PrefixMap const& e, PrefixMap const& g);

// --- sampling ---------------------------------------------------------

struct SampleShape {
  std::size_t max_splits = 4;
  std::size_t max_depth = 5;
};

/// Random complete prefix code obtained by splitting leaves.
std::vector<Word> random_prefix_code(int n, Rng& rng, std::size_t splits, std::size_t max_depth);
PrefixMap random_element(int n, Rng& rng, SampleShape shape = {});
PrefixMap random_unit(int n, Rng& rng, SampleShape shape = {});
PrefixMap random_involution(int n, Rng& rng, SampleShape shape = {});
/// Non-zero clopen.
PrefixMap random_clopen(int n, Rng& rng, SampleShape shape = {});
/// Random point in the non-zero clopen e.
EPPoint random_point_in(PrefixMap const& e, Rng& rng);

} // namespace tarski::cuntz

#endif
