#include "doctest.h"

#include "oracles.hpp"
#include "tarski/duality.hpp"
#include "tarski/error.hpp"
#include "tarski/finite_monoid.hpp"
#include "tarski/groupoid.hpp"

using namespace tarski;

TEST_CASE("atom groupoids")
{
  auto const g2 = atom_groupoid(symmetric_inverse_monoid(2));
  CHECK(g2.object_count() == 2);
  CHECK(g2.arrow_count() == 4);
  CHECK(oracle::orbit_count(g2) == 1);

  auto const g1 = atom_groupoid(symmetric_inverse_monoid(1));
  CHECK(g1.object_count() == 1);
  CHECK(g1.arrow_count() == 1);

  auto const i2 = symmetric_inverse_monoid(2);
  auto const gp = atom_groupoid(product(i2, i2));
  CHECK(gp.object_count() == 4);
  CHECK(gp.arrow_count() == 8);
  CHECK(oracle::orbit_count(gp) == 2);
  CHECK(orbit_count(gp) == 2);
}

TEST_CASE("monoid round trips")
{
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const s = symmetric_inverse_monoid(n);
    auto const r = duality_roundtrip_monoid(s);
    CHECK(r.image.size() == s.size());
    CHECK(r.certificate["checks"]["bijective"] == true);
  }
  auto const i2 = symmetric_inverse_monoid(2);
  CHECK(duality_roundtrip_monoid(product(i2, i2)).image.size() == 49);
}

TEST_CASE("groupoid round trips")
{
  auto const check = [](FiniteGroupoid const& g) {
    auto const r = duality_roundtrip_groupoid(g);
    auto const back = atom_groupoid(local_bisection_monoid(g));
    CHECK(r.functor.size() == g.arrow_count());
    CHECK(back.arrow_count() == g.arrow_count());
    CHECK(back.object_count() == g.object_count());
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
      for (std::size_t b = 0; b < g.arrow_count(); ++b) {
        auto const c = g.compose(a, b);
        auto const d = back.compose(r.functor[a], r.functor[b]);
        REQUIRE(c.has_value() == d.has_value());
        if (c)
          CHECK(r.functor[*c] == *d);
      }
  };
  check(groupoids::pair(2));
  check(groupoids::cyclic_group(2));
  check(groupoids::discrete(3));
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    check(groupoids::random(seed, 8));
}

TEST_CASE("theta")
{
  auto const i2 = symmetric_inverse_monoid(2);
  auto const th = theta(i2, i2.parse("{1->2}"));
  auto const atoms = i2.idempotent_atoms();
  REQUIRE(atoms.size() == 2);
  CHECK(i2.label(atoms[0]) == "{1->1}");
  CHECK(i2.label(atoms[1]) == "{2->2}");
  CHECK(th.to_string() == "{1->2}");
  CHECK(theta(i2, i2.one()).to_string() == "{1->1,2->2}");
}

TEST_CASE("fundamentality")
{
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(is_fundamental(symmetric_inverse_monoid(n)));
  auto const z2 = local_bisection_monoid(groupoids::cyclic_group(2));
  CHECK_FALSE(is_fundamental(z2));
  auto const rep = fundamental_report(z2);
  CHECK(rep.consistent());
  REQUIRE(rep.witness);
  CHECK_FALSE(z2.is_idempotent(*rep.witness));

  auto const prod = product(symmetric_inverse_monoid(2), symmetric_inverse_monoid(3));
  CHECK(is_fundamental(prod));

  CHECK(is_essentially_principal(atom_groupoid(symmetric_inverse_monoid(3))));
  CHECK(orbit_count(atom_groupoid(symmetric_inverse_monoid(3))) == 1);
  CHECK_FALSE(is_essentially_principal(groupoids::cyclic_group(2)));
}

TEST_CASE("mu relation")
{
  auto const z2 = local_bisection_monoid(groupoids::cyclic_group(2));
  auto const units = z2.elements();
  std::size_t related_pairs = 0;
  for (auto a : units)
    for (auto b : units)
      related_pairs += mu_related(z2, a, b);
  // the group element is mu-related to the identity
  CHECK(related_pairs == 5);

  auto const i3 = symmetric_inverse_monoid(3);
  for (auto a : i3.elements())
    for (auto b : i3.elements())
      CHECK(mu_related(i3, a, b) == (a == b));
}

TEST_CASE("ultrafilters of units are cosets")
{
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const s = symmetric_inverse_monoid(n);
    CHECK(units_above_atoms_are_cosets(s));
    CHECK(atom_sets_multiply(s));
  }
}
