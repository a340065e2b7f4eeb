#include "doctest.h"

#include "oracles.hpp"
#include "tarski/analysis.hpp"
#include "tarski/core.hpp"
#include "tarski/duality.hpp"
#include "tarski/error.hpp"
#include "tarski/finite_monoid.hpp"
#include "tarski/groupoid.hpp"

using namespace tarski;

namespace {

FiniteMonoid i2_squared()
{
  auto const i2 = symmetric_inverse_monoid(2);
  return product(i2, i2);
}

} // namespace

TEST_CASE("pencils")
{
  auto const i2 = symmetric_inverse_monoid(2);
  auto const p = find_pencil(i2, i2.one(), i2.parse("{1->1}"));
  CHECK(is_pencil(i2, p));
  std::set<std::string> labels;
  for (auto x : p.elements)
    labels.insert(i2.label(x));
  CHECK(labels == std::set<std::string>{"{1->1}", "{2->1}"});

  auto const sq = i2_squared();
  try {
    find_pencil(sq, sq.one(), sq.parse("({1->1},{})"));
    FAIL("pencil found");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::no_pencil);
  }
}

TEST_CASE("0-simplifying cross-checks")
{
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const r = zero_simplifying_report(symmetric_inverse_monoid(n));
    CHECK(r.by_pencils);
    CHECK(r.consistent());
  }
  auto const r = zero_simplifying_report(i2_squared());
  CHECK_FALSE(r.by_pencils);
  CHECK(r.ideals_checked);
  CHECK(r.consistent());
  CHECK(r.counterexample.has_value());

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto const g = groupoids::random(seed, 8);
    auto const s = local_bisection_monoid(g);
    auto const rep = zero_simplifying_report(s);
    CHECK(rep.consistent());
    CHECK(rep.by_pencils == (oracle::orbit_count(g) == 1));
  }
}

TEST_CASE("join ideals")
{
  auto const i2 = symmetric_inverse_monoid(2);
  CHECK(join_ideal(i2, i2.zero()).size() == 1);
  CHECK(join_ideal(i2, i2.parse("{1->1}")).size() == i2.size());
}

TEST_CASE("simplicity flags")
{
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const s = symmetric_inverse_monoid(n);
    CHECK(is_zero_simplifying(s));
    CHECK_FALSE(is_purely_infinite(s));
    CHECK_FALSE(is_zero_simple(s));
    CHECK(is_zero_disjunctive(s));
  }
  auto const i1 = symmetric_inverse_monoid(1);
  CHECK(is_zero_simple(i1));
  CHECK_FALSE(is_congruence_free(symmetric_inverse_monoid(3)));
  CHECK(is_zero_disjunctive(i2_squared()));
  CHECK(is_zero_disjunctive(local_bisection_monoid(groupoids::cyclic_group(2))));
}

TEST_CASE("finite principality and factorizability")
{
  auto const i3 = symmetric_inverse_monoid(3);
  for (auto a : i3.elements()) {
    auto const d = principality_decompose(i3, a);
    REQUIRE(d);
    auto acc = d->idempotent;
    for (auto x : d->infinitesimals) {
      CHECK(is_infinitesimal(i3, x));
      acc = join(i3, acc, x);
    }
    CHECK(acc == a);
  }
  CHECK(is_factorizable(i3));
  auto const z2 = local_bisection_monoid(groupoids::cyclic_group(2));
  CHECK_FALSE(principality_decompose(z2, z2.parse("{g1}")).has_value());
}

TEST_CASE("classification")
{
  for (std::size_t n = 2; n <= 3; ++n) {
    auto const s = symmetric_inverse_monoid(n);
    auto const c = classify(s);
    REQUIRE(c.n);
    CHECK(*c.n == n);
    CHECK(c.iso.size() == s.size());
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    auto const b = local_bisection_monoid(groupoids::pair(k));
    auto const c = classify(b);
    REQUIRE(c.n);
    CHECK(*c.n == k);
    // the isomorphism lands in I_k and is a bijection
    auto const ik = symmetric_inverse_monoid(k);
    std::set<element_t> image(c.iso.begin(), c.iso.end());
    CHECK(image.size() == ik.size());
    for (auto x : b.elements())
      for (auto y : b.elements())
        CHECK(c.iso[b.multiply(x, y)] == ik.multiply(c.iso[x], c.iso[y]));
  }
  auto const none = classify(i2_squared());
  CHECK_FALSE(none.n);
  CHECK(none.failed_flag == "zero_simplifying");
  auto const z2 = classify(local_bisection_monoid(groupoids::cyclic_group(2)));
  CHECK_FALSE(z2.n);
  CHECK(z2.failed_flag == "fundamental");
}

TEST_CASE("finite spatial realization")
{
  auto const i2 = symmetric_inverse_monoid(2);
  auto const i3 = symmetric_inverse_monoid(3);
  auto const b3 = local_bisection_monoid(groupoids::pair(3));
  auto const same = finite_spatial_realization_check(i3, b3);
  CHECK(same.units_isomorphic);
  CHECK(same.monoids_isomorphic);
  auto const diff = finite_spatial_realization_check(i2, i3);
  CHECK(diff.units_order_s == 2);
  CHECK(diff.units_order_t == 6);
  CHECK_FALSE(diff.units_isomorphic);
  CHECK_FALSE(diff.monoids_isomorphic);
  try {
    finite_spatial_realization_check(i2_squared(), i2);
    FAIL("accepted an instance outside the class");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::out_of_class);
  }
}

TEST_CASE("analysis reports")
{
  auto const r = analyze(symmetric_inverse_monoid(3));
  CHECK(r["flags"]["is_fundamental"] == true);
  CHECK(r["flags"]["is_zero_simplifying"] == true);
  CHECK(r["classification"]["n"] == 3);
  CHECK(r["units"]["order"] == 6);

  auto const c = analyze_cuntz(2, 42, 30);
  CHECK(c["flags"]["is_zero_simple"] == true);
  CHECK(c["flags"]["is_zero_simplifying"] == true);
  CHECK(c["flags"]["is_purely_infinite"] == true);
  CHECK(c.dump() == analyze_cuntz(2, 42, 30).dump());
}
