#include "doctest.h"

#include <variant>

#include "oracles.hpp"
#include "tarski/core.hpp"
#include "tarski/cuntz.hpp"
#include "tarski/error.hpp"
#include "tarski/prefix_map.hpp"
#include "tarski/random.hpp"

using namespace tarski;
using namespace tarski::cuntz;

namespace {

CuntzMonoid const c2(2);
CuntzMonoid const c3(3);

PrefixMap p2(char const* text)
{
  return PrefixMap::parse(2, text);
}

EPPoint pt(char const* text)
{
  return EPPoint::parse(2, text);
}

ErrorKind kind_of(auto&& f)
{
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::invalid_argument;
}

} // namespace

TEST_CASE("infinitesimal at a point")
{
  CHECK(infinitesimal_at(p2("[1]"), pt("1|1")) == p2("{11->12}"));
  CHECK(infinitesimal_at(p2("[e]"), pt("e|2")) == p2("{22->21}"));
  CHECK(infinitesimal_at(p2("[1,21]"), pt("21|1")) == p2("{211->212}"));
  CHECK(kind_of([] { infinitesimal_at(p2("[1]"), pt("e|2")); }) == ErrorKind::point_outside_domain);
}

TEST_CASE("first witness")
{
  auto const t = f1_witness(p2("[1]"), pt("1|1"));
  CHECK(t == p2("{11->12,12->11,2->2}"));
  CHECK(sigma(c2, t) == p2("[1]"));
  CHECK(f1_witness(p2("[e]"), pt("1|1")) == p2("{11->12,12->11,2->2}"));
  CHECK(check_f1(p2("[1]"), pt("1|1"), t).passed());
  CHECK_FALSE(check_f1(p2("[1]"), pt("1|1"), c2.one()).passed());
}

TEST_CASE("second witness")
{
  auto const t = p2("{1->2,2->1}");
  auto const r = f2_witness(t, p2("[1]"));
  CHECK(is_unit(c2, r.unit));
  CHECK(r.unit * r.unit == c2.one());
  CHECK(check_f2(t, p2("[1]"), r.unit, 42).passed());
  CHECK(kind_of([] { f2_witness(p2("{1->2}"), p2("[1]")); }) == ErrorKind::not_involution);
}

TEST_CASE("third witness reproduces the 3-cycle")
{
  auto const r = f3_witness(p2("[e]"));
  CHECK(r.b == p2("{11->12}"));
  CHECK(r.a == p2("{12->2}"));
  CHECK(r.unit == p2("{11->2,12->11,2->12}"));
  CHECK(r.unit * r.unit * r.unit == c2.one());
  CHECK(r.cycle_notation() == "(132)");
  CHECK(check_f3(p2("[e]"), r.unit).passed());

  auto const deeper = f3_witness(p2("[1]"));
  CHECK(deeper.unit == p2("{111->12,112->111,12->112,2->2}"));
  CHECK(check_f3(p2("[1]"), deeper.unit).passed());
  CHECK(kind_of([] { f3_witness(p2("[]")); }) == ErrorKind::zero_idempotent);
}

TEST_CASE("properly infinite pairs")
{
  auto [x, y] = properly_infinite_witness(p2("[1]"));
  CHECK(x == p2("{1->11}"));
  CHECK(y == p2("{1->12}"));
  std::tie(x, y) = properly_infinite_witness(p2("[e]"));
  CHECK(x == p2("{e->1}"));
  CHECK(y == p2("{e->2}"));
  auto const e = p2("[11,2]");
  std::tie(x, y) = properly_infinite_witness(e);
  CHECK(domain(c2, x) == e);
  CHECK(domain(c2, y) == e);
  CHECK(orthogonal(c2, range(c2, x), range(c2, y)));
  CHECK(leq(c2, join(c2, range(c2, x), range(c2, y)), e));
}

TEST_CASE("conjugators and transfers")
{
  CHECK(conjugator_unit(p2("[1]"), p2("[21]")) == p2("{1->21,21->1,22->22}"));
  auto const g = conjugator_unit(p2("[1]"), p2("[1]"));
  CHECK(is_unit(c2, g));
  CHECK(leq(c2, g * p2("[1]") * g.inverse(), p2("[1]")));
  CHECK(kind_of([] { conjugator_unit(p2("[e]"), p2("[1]")); }) == ErrorKind::identity_idempotent);

  CHECK(transfer_witness(p2("[e]"), p2("[12]")) == p2("{e->12}"));
  auto const x = transfer_witness(p2("[1,2]"), p2("[11]"));
  CHECK(x == p2("{1->111,2->112}"));
  CHECK(domain(c2, x) == p2("[e]"));
}

TEST_CASE("clopen isomorphisms follow the count criterion")
{
  CHECK(clopen_iso(p2("[1]"), p2("[11,2]")).pairs().size() >= 1);
  auto const e = PrefixMap::parse(3, "[1]");
  CHECK(kind_of([&] { clopen_iso(e, PrefixMap::parse(3, "[1,2]")); }) == ErrorKind::no_iso);
  CHECK_FALSE(oracle::iso_exists_up_to(3, e.pairs(), PrefixMap::parse(3, "[1,2]").pairs(), 4));
  auto const x = clopen_iso(e, PrefixMap::parse(3, "[1,2,3]"));
  CHECK(x == PrefixMap::parse(3, "{1->e}"));
  CHECK(x == PrefixMap::parse(3, "{11->1,12->2,13->3}"));

  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    auto const a = random_clopen(3, rng, {3, 3});
    auto const b = random_clopen(3, rng, {3, 3});
    bool const parity = a.cylinder_count() % 2 == b.cylinder_count() % 2;
    CHECK(oracle::iso_exists_up_to(3, a.pairs(), b.pairs(), 4) == parity);
    if (parity) {
      auto const y = clopen_iso(a, b);
      CHECK(domain(c3, y) == a);
      CHECK(range(c3, y) == b);
    } else {
      CHECK(kind_of([&] { clopen_iso(a, b); }) == ErrorKind::no_iso);
    }
  }
}

TEST_CASE("piecewise factorization")
{
  auto const parts = piecewise_factorize(p2("{1->11}"));
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].unit == p2("{1->11,21->12,22->2}"));
  CHECK(parts[0].idempotent == p2("[1]"));

  auto const g = p2("{1->11,21->12,22->2}");
  auto const single = piecewise_factorize(g);
  REQUIRE(single.size() == 1);
  CHECK(single[0].unit == g);
  CHECK(single[0].idempotent == c2.one());

  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    auto const s = random_element(2, rng);
    PrefixMap acc = c2.zero();
    for (auto const& part : piecewise_factorize(s)) {
      CHECK(is_unit(c2, part.unit));
      acc = join(c2, acc, part.unit * part.idempotent);
    }
    CHECK(acc == s);
  }
}

TEST_CASE("principality")
{
  auto const r = principality_decompose(p2("{11->11,12->2,2->12}"));
  auto const* d = std::get_if<PrincipalDecomposition>(&r);
  REQUIRE(d);
  CHECK(d->idempotent == p2("[11]"));
  REQUIRE(d->infinitesimals.size() == 2);
  CHECK(d->infinitesimals[0] == p2("{12->2}"));
  CHECK(d->infinitesimals[1] == p2("{2->12}"));

  auto const w = principality_decompose(p2("{1->11}"));
  auto const* nw = std::get_if<NonPrincipalWitness>(&w);
  REQUIRE(nw);
  CHECK(nw->pair == PrefixMap::Pair{"1", "11"});
  CHECK(nw->fixed_point == pt("e|1"));

  auto const idem = principality_decompose(p2("[1,22]"));
  REQUIRE(std::holds_alternative<PrincipalDecomposition>(idem));
  CHECK(std::get<PrincipalDecomposition>(idem).infinitesimals.empty());
}

TEST_CASE("moved points and separation")
{
  auto const q = find_moved_point(p2("{1->2,2->1}"), p2("[1]"));
  CHECK(q.in_cylinder("1"));
  CHECK(apply_point(p2("{1->2,2->1}"), q) != q);

  auto const g = p2("{1->11,21->12,22->2}");
  auto const p = pt("21|1");
  CHECK(apply_point(g, p) == pt("12|1"));
  CHECK(separating_idempotent(g, p) == p2("[21]"));
  CHECK(kind_of([&] { separating_idempotent(g, pt("e|2")); }) == ErrorKind::not_moved);
}

TEST_CASE("support covers")
{
  auto const cover = support_cover(p2("[1]"));
  REQUIRE(cover.size() == 1);
  CHECK(cover[0] == p2("{11->12,12->11,2->2}"));
  CHECK(sigma(c2, cover[0]) == p2("[1]"));

  auto const three = support_cover(PrefixMap::parse(3, "[1]"));
  CHECK(three.size() == 3);
  PrefixMap acc = c3.zero();
  for (auto const& t : three)
    acc = join(c3, acc, sigma(c3, t));
  CHECK(acc == PrefixMap::parse(3, "[1]"));

  auto const whole = support_cover(p2("[e]"));
  REQUIRE(whole.size() == 1);
  CHECK(whole[0] == p2("{1->2,2->1}"));
}

TEST_CASE("units in ultrafilters")
{
  CHECK(unit_in_ultrafilter(p2("{1->11}"), pt("1|2")) == p2("{1->11,21->12,22->2}"));
  auto const g = p2("{1->11,21->12,22->2}");
  CHECK(unit_in_ultrafilter(g, pt("e|2")) == g);
  CHECK(unit_in_ultrafilter(p2("{1->2}"), pt("1|1")) == p2("{1->2,2->1}"));
}

TEST_CASE("hengist witnesses")
{
  Rng rng(8);
  int built = 0;
  for (int i = 0; i < 100; ++i) {
    auto const s = random_element(2, rng);
    auto const moving = sigma(c2, s);
    if (moving.empty())
      continue;
    auto const p = random_point_in(moving, rng);
    auto const parts = hengist_witness(s, p);
    PrefixMap prod = c2.one();
    for (auto const& a : parts) {
      CHECK(is_infinitesimal(c2, a));
      prod = prod * a;
    }
    CHECK(leq(c2, prod, s));
    CHECK(in_domain(prod, p));
    ++built;
  }
  CHECK(built > 50);
}
