#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "tarski/analysis.hpp"
#include "tarski/core.hpp"
#include "tarski/error.hpp"
#include "tarski/finite_monoid.hpp"
#include "tarski/groupoid.hpp"
#include "tarski/partial_bijection.hpp"

using namespace tarski;

TEST_CASE("partial bijections")
{
  auto const s = PartialBijection::parse(3, "{1->2,2->1}");
  CHECK(s.to_string() == "{1->2,2->1}");
  CHECK(PartialBijection::parse(3, "{2->1,1->2}") == s);
  auto const t = PartialBijection::parse(3, "{1->3}");
  // t acts first
  CHECK((s * t).to_string() == "{}");
  CHECK((t * s).to_string() == "{2->3}");
  CHECK(s.inverse() == s);
  CHECK(PartialBijection::parse(3, "{}").rank() == 0);
  CHECK_THROWS_AS(PartialBijection::parse(3, "{1->1,1->2}"), Error);
  CHECK_THROWS_AS(PartialBijection::parse(3, "{1->1,2->1}"), Error);
  CHECK_THROWS_AS(PartialBijection::parse(3, "{4->1}"), Error);
}

TEST_CASE("symmetric inverse monoid sizes")
{
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(enumerate_partial_bijections(n).size() == oracle::partial_bijection_count(n));
    CHECK(symmetric_inverse_monoid(n).size() == oracle::partial_bijection_count(n));
  }
  CHECK(symmetric_inverse_monoid(2).size() == 7);
  CHECK(symmetric_inverse_monoid(3).size() == 34);
  auto const i1 = symmetric_inverse_monoid(1);
  CHECK(i1.size() == 2);
  CHECK(i1.idempotents().size() == 2);
  CHECK_THROWS_AS(symmetric_inverse_monoid(7), Error);
}

TEST_CASE("products")
{
  auto const i1 = symmetric_inverse_monoid(1);
  auto const i2 = symmetric_inverse_monoid(2);
  CHECK(product(i1, i1).size() == 4);
  CHECK(product(i2, i2).size() == 49);
  auto const p = product(i2, i2);
  auto const x = p.parse("({1->2},{2->2})");
  CHECK(p.label(p.inverse(x)) == "({2->1},{2->2})");
  CHECK(p.domain(x) == p.parse("({1->1},{2->2})"));
  CHECK(p.atoms().size() == 8);
}

TEST_CASE("local bisection monoids")
{
  auto const pair2 = local_bisection_monoid(groupoids::pair(2));
  CHECK(pair2.size() == 7);
  auto const discrete = local_bisection_monoid(groupoids::discrete(2));
  CHECK(discrete.size() == 4);
  CHECK(discrete.idempotents().size() == 4);
  auto const z2 = local_bisection_monoid(groupoids::cyclic_group(2));
  CHECK(z2.size() == 3);
  CHECK(z2.idempotents().size() == 2);

  for (std::size_t k = 1; k <= 4; ++k) {
    auto const g = groupoids::pair(k);
    CHECK(local_bisection_monoid(g).size() == oracle::bisection_count(g));
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto const g = groupoids::random(seed, 8);
    CHECK(local_bisection_monoid(g).size() == oracle::bisection_count(g));
  }
}

TEST_CASE("atoms")
{
  auto const i2 = symmetric_inverse_monoid(2);
  std::set<std::string> labels;
  for (auto a : i2.atoms())
    labels.insert(i2.label(a));
  CHECK(labels == std::set<std::string>{"{1->1}", "{1->2}", "{2->1}", "{2->2}"});
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(symmetric_inverse_monoid(n).atoms().size() == n * n);

  auto const g = groupoids::pair(3);
  auto const b = local_bisection_monoid(g);
  for (auto a : b.atoms())
    CHECK(bisection_arrows(b, a).size() == 1);
}

TEST_CASE("instance specs")
{
  CHECK(finite_instance_from_spec("I3").size() == 34);
  CHECK(finite_instance_from_spec("prod:I2xI2").size() == 49);
  CHECK(finite_instance_from_spec("groupoid:pair:3").size() == 34);
  CHECK(finite_instance_from_spec("groupoid:cyclic:2").size() == 3);
  CHECK_THROWS_AS(finite_instance_from_spec("J3"), Error);
  CHECK_THROWS_AS(finite_instance_from_spec("I9"), Error);
}

TEST_CASE("element parsing")
{
  auto const i3 = symmetric_inverse_monoid(3);
  CHECK(i3.parse("{1->2,2->1}") == i3.parse("{2->1,1->2}"));
  CHECK(i3.label(i3.parse("{ 3->1 }")) == "{3->1}");
  CHECK_THROWS_AS(i3.parse("{1->1,1->2}"), Error);
  try {
    i3.parse("{1->}");
    FAIL("accepted");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::parse_error);
  }
}

TEST_CASE("groups of units")
{
  CHECK(group_of_units(symmetric_inverse_monoid(3)).order() == 6);
  CHECK(group_of_units(symmetric_inverse_monoid(1)).order() == 1);
  CHECK(group_of_units(local_bisection_monoid(groupoids::cyclic_group(2))).order() == 2);
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(group_of_units(symmetric_inverse_monoid(n)).order() == oracle::factorial(n));
}

TEST_CASE("groupoid validation")
{
  FiniteGroupoid::Spec spec;
  spec.objects = {"x"};
  spec.arrows = {{"i", "x", "x"}, {"g", "x", "x"}};
  spec.compose = {{"i", "i", "i"}, {"i", "g", "g"}, {"g", "i", "g"}, {"g", "g", "i"}};
  spec.inverse = {{"i", "i"}, {"g", "g"}};
  FiniteGroupoid const ok(spec);
  CHECK(ok.arrow_count() == 2);
  CHECK(ok.is_identity(*ok.find_arrow("i")));

  auto broken = spec;
  broken.compose.pop_back();
  CHECK_THROWS_AS(FiniteGroupoid{broken}, Error);

  auto non_assoc = spec;
  non_assoc.compose = {{"i", "i", "i"}, {"i", "g", "g"}, {"g", "i", "g"}, {"g", "g", "g"}};
  CHECK_THROWS_AS(FiniteGroupoid{non_assoc}, Error);

  auto json_round = FiniteGroupoid::from_json(ok.to_json());
  CHECK(json_round.to_json() == ok.to_json());
  CHECK(oracle::orbit_count(groupoids::disjoint_union({groupoids::pair(2), groupoids::cyclic_pair(1, 2, "b")})) == 2);
}
