#include "doctest.h"

#include "tarski/core.hpp"
#include "tarski/error.hpp"
#include "tarski/finite_monoid.hpp"
#include "tarski/prefix_map.hpp"

using namespace tarski;

namespace {

FiniteMonoid const& i2()
{
  static auto const m = symmetric_inverse_monoid(2);
  return m;
}

FiniteMonoid const& i3()
{
  static auto const m = symmetric_inverse_monoid(3);
  return m;
}

CuntzMonoid const c2(2);

auto e2(char const* s) { return i2().parse(s); }
auto e3(char const* s) { return i3().parse(s); }
auto p2(char const* s) { return c2.parse(s); }

} // namespace

TEST_CASE("domain and range")
{
  CHECK(domain(i2(), e2("{1->2}")) == e2("{1->1}"));
  CHECK(range(i2(), e2("{1->2}")) == e2("{2->2}"));
  CHECK(domain(c2, p2("{11->2}")) == p2("{11->11}"));
  CHECK(range(c2, p2("{11->2}")) == p2("{2->2}"));
  for (auto e : i3().idempotents()) {
    CHECK(domain(i3(), e) == e);
    CHECK(range(i3(), e) == e);
  }
}

TEST_CASE("natural partial order")
{
  CHECK(leq(i2(), e2("{1->2}"), e2("{1->2,2->1}")));
  CHECK_FALSE(leq(i2(), e2("{1->2,2->1}"), e2("{1->2}")));
  CHECK(leq(c2, p2("{11->21}"), p2("{1->2}")));
  CHECK_FALSE(leq(c2, p2("{11->22}"), p2("{1->2}")));
  for (auto s : i3().elements())
    CHECK(leq(i3(), i3().zero(), s));
}

TEST_CASE("compatibility and orthogonality")
{
  CHECK(compatible(i2(), e2("{1->1}"), e2("{2->2}")));
  CHECK(orthogonal(i2(), e2("{1->1}"), e2("{2->2}")));
  CHECK_FALSE(compatible(i2(), e2("{1->2}"), e2("{1->1}")));
  CHECK_FALSE(compatible(c2, p2("{1->1}"), p2("{1->2}")));
  CHECK(compatible(c2, p2("{1->2}"), p2("{2->1}")));
}

TEST_CASE("meets")
{
  CHECK(meet(i2(), e2("{1->2,2->1}"), e2("{1->2}")) == e2("{1->2}"));
  CHECK(meet(i2(), e2("{1->2}"), e2("{1->1}")) == i2().zero());
  CHECK(meet(c2, p2("{e->e}"), p2("{1->1}")) == p2("{1->1}"));
  CHECK(meet(c2, p2("{1->2,2->1}"), p2("{1->2,2->11}")) == p2("{1->2}"));
}

TEST_CASE("joins")
{
  CHECK(join(i2(), e2("{1->2}"), e2("{2->1}")) == e2("{1->2,2->1}"));
  CHECK(join(c2, p2("{11->11}"), p2("{12->12}")) == p2("{1->1}"));
  CHECK_THROWS_AS(join(i2(), e2("{1->2}"), e2("{1->1}")), Error);
  try {
    join(c2, p2("{1->1}"), p2("{1->2}"));
    FAIL("incompatible join accepted");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::incompatible);
  }
}

TEST_CASE("fixed points and support")
{
  CHECK(phi(i3(), e3("{1->1,2->3}")) == e3("{1->1}"));
  CHECK(sigma(i3(), e3("{1->1,2->3}")) == e3("{2->2}"));
  CHECK(phi(c2, p2("{11->11,12->2,2->12}")) == p2("{11->11}"));
  CHECK(sigma(c2, p2("{11->11,12->2,2->12}")) == p2("{12->12,2->2}"));
  CHECK(phi(c2, c2.one()) == c2.one());
  for (auto e : i3().idempotents())
    CHECK(sigma(i3(), e) == i3().zero());

  auto const [f1, m1] = cooper_decompose(i3(), e3("{1->1,2->3}"));
  CHECK(f1 == e3("{1->1}"));
  CHECK(m1 == e3("{2->3}"));
  auto const [f2, m2] = cooper_decompose(c2, p2("{11->11,12->2,2->12}"));
  CHECK(f2 == p2("{11->11}"));
  CHECK(m2 == p2("{12->2,2->12}"));
  auto const [f3, m3] = cooper_decompose(c2, p2("[1,21]"));
  CHECK(f3 == p2("[1,21]"));
  CHECK(m3.empty());
}

TEST_CASE("element predicates")
{
  CHECK(is_involution(c2, p2("{1->2,2->1}")));
  CHECK(is_unit(c2, p2("{1->2,2->1}")));
  CHECK(is_infinitesimal(c2, p2("{1->2}")));
  CHECK_FALSE(is_infinitesimal(c2, p2("{1->11}")));
  CHECK_FALSE(is_unit(c2, p2("{1->2}")));
  auto const g = p2("{1->11,21->12,22->2}");
  CHECK(commutator(c2, g, g) == c2.one());
  for (auto s : i3().elements())
    if (is_unit(i3(), s))
      CHECK(commutator(i3(), s, s) == i3().one());
  CHECK_THROWS_AS(commutator(i3(), e3("{1->2}"), i3().one()), Error);
}

TEST_CASE("completions to units and involutions")
{
  CHECK(unit_from_balanced(c2, p2("{1->1}")) == c2.one());
  CHECK(unit_from_balanced(i3(), e3("{1->2,2->1}")) == e3("{1->2,2->1,3->3}"));
  CHECK(unit_from_balanced(c2, p2("{11->12,12->11}")) == p2("{11->12,12->11,2->2}"));
  CHECK_THROWS_AS(unit_from_balanced(c2, p2("{1->11}")), Error);

  CHECK(involution_from_infinitesimal(c2, p2("{1->2}")) == p2("{1->2,2->1}"));
  CHECK(involution_from_infinitesimal(i2(), e2("{1->2}")) == e2("{1->2,2->1}"));
  CHECK(involution_from_infinitesimal(c2, p2("{11->12}")) == p2("{11->12,12->11,2->2}"));
  CHECK_THROWS_AS(involution_from_infinitesimal(c2, p2("{1->11}")), Error);
}

TEST_CASE("involutions above the non-idempotent atoms of I_n are the transpositions")
{
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const m = symmetric_inverse_monoid(n);
    std::size_t transpositions = 0;
    for (auto a : m.atoms()) {
      if (m.is_idempotent(a))
        continue;
      auto const u = involution_from_infinitesimal(m, a);
      CHECK(is_involution(m, u));
      CHECK(leq(m, a, u));
      // a transposition moves exactly two points
      auto const moved = m.atoms_below(sigma(m, u)).size();
      CHECK(moved == 2);
      ++transpositions;
    }
    CHECK(transpositions == n * (n - 1));
  }
}
