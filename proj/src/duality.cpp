#include "tarski/duality.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>

#include "tarski/core.hpp"
#include "tarski/error.hpp"

namespace tarski {

namespace {

using element = FiniteMonoid::element_type;

std::string padded(char tag, std::size_t v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%c%05zu", tag, v);
  return buf;
}

std::size_t position(std::vector<element> const& sorted, element x)
{
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x)
    return sorted.size();
  return static_cast<std::size_t>(it - sorted.begin());
}

void check_boolean(FiniteMonoid const& s)
{
  auto fail = [&](std::string const& why) {
    throw Error(ErrorKind::not_boolean, s.name() + ": " + why);
  };
  try {
    for (auto e : s.idempotents()) {
      auto const c = s.complement(e);
      if (!s.is_idempotent(c) || s.multiply(e, c) != s.zero() || s.raw_join(e, c) != s.one())
        fail("complement of " + s.label(e) + " is not a Boolean complement");
      element acc = s.zero();
      for (auto f : s.idempotent_atoms())
        if (s.multiply(f, e) == f)
          acc = s.raw_join(acc, f);
      if (acc != e)
        fail(s.label(e) + " is not the join of the atoms below it");
    }
  } catch (Error const& err) {
    if (err.kind() == ErrorKind::not_boolean)
      throw;
    fail(err.what());
  }
}

[[noreturn]] void round_trip_failure(std::string const& what)
{
  throw Error(ErrorKind::round_trip_failure, what);
}

} // namespace

FiniteGroupoid atom_groupoid(FiniteMonoid const& s)
{
  check_boolean(s);
  auto const& atoms = s.atoms();
  auto const& objects = s.idempotent_atoms();
  FiniteGroupoid::Spec spec;
  for (auto e : objects)
    spec.objects.push_back(padded('o', e));
  for (auto a : atoms)
    spec.arrows.push_back({padded('a', a), padded('o', s.domain(a)), padded('o', s.range(a))});
  for (auto a : atoms) {
    for (auto b : atoms) {
      if (s.domain(a) != s.range(b))
        continue;
      auto const c = s.multiply(a, b);
      if (position(atoms, c) == atoms.size())
        throw Error(ErrorKind::not_boolean,
                    s.name() + ": product " + s.label(a) + " * " + s.label(b) + " is not an atom");
      spec.compose.push_back({padded('a', a), padded('a', b), padded('a', c)});
    }
    spec.inverse.emplace_back(padded('a', a), padded('a', s.inverse(a)));
  }
  for (auto e : objects)
    spec.identities.emplace_back(padded('o', e), padded('a', e));
  try {
    return FiniteGroupoid(std::move(spec));
  } catch (Error const& err) {
    throw Error(ErrorKind::not_boolean, s.name() + ": atoms do not form a groupoid (" + err.what() + ")");
  }
}

MonoidRoundTrip duality_roundtrip_monoid(FiniteMonoid const& s)
{
  auto const g = atom_groupoid(s);
  auto const b = local_bisection_monoid(g, "B(G(" + s.name() + "))");
  auto const& atoms = s.atoms();

  std::map<std::vector<std::size_t>, element> by_arrows;
  for (auto x : b.elements())
    by_arrows.emplace(bisection_arrows(b, x), x);

  MonoidRoundTrip out;
  out.image.resize(s.size());
  nlohmann::json pairing = nlohmann::json::array();
  std::vector<bool> hit(b.size(), false);
  for (auto x : s.elements()) {
    std::vector<std::size_t> arrows;
    nlohmann::json labels = nlohmann::json::array();
    for (auto a : s.atoms_below(x)) {
      arrows.push_back(position(atoms, a));
      labels.push_back(s.label(a));
    }
    auto it = by_arrows.find(arrows);
    if (it == by_arrows.end())
      round_trip_failure("atoms below " + s.label(x) + " do not form a local bisection");
    if (hit[it->second])
      round_trip_failure(s.label(x) + " has the same atoms as another element");
    hit[it->second] = true;
    out.image[x] = it->second;
    pairing.push_back({{"element", s.label(x)}, {"atoms", labels}, {"bisection", b.label(it->second)}});
  }
  if (s.size() != b.size())
    round_trip_failure("carrier sizes differ: " + std::to_string(s.size()) + " vs " + std::to_string(b.size()));

  auto const& img = out.image;
  if (img[s.zero()] != b.zero())
    round_trip_failure("zero is not sent to the empty bisection");
  if (img[s.one()] != b.one())
    round_trip_failure("one is not sent to the identity bisection");
  for (auto x : s.elements()) {
    if (img[s.inverse(x)] != b.inverse(img[x]))
      round_trip_failure("inverse of " + s.label(x));
    for (auto y : s.elements()) {
      if (img[s.multiply(x, y)] != b.multiply(img[x], img[y]))
        round_trip_failure("product " + s.label(x) + " * " + s.label(y));
      if (img[s.raw_meet(x, y)] != b.raw_meet(img[x], img[y]))
        round_trip_failure("meet of " + s.label(x) + " and " + s.label(y));
      if (compatible(s, x, y) && img[s.raw_join(x, y)] != b.raw_join(img[x], img[y]))
        round_trip_failure("join of " + s.label(x) + " and " + s.label(y));
    }
  }

  out.certificate = {
    {"instance", s.name()},
    {"size", s.size()},
    {"groupoid", g.to_json()},
    {"pairing", std::move(pairing)},
    {"checks", {{"bijective", true}, {"products", true}, {"inverses", true}, {"meets", true},
                {"compatible_joins", true}, {"zero", true}, {"one", true}}},
  };
  return out;
}

GroupoidRoundTrip duality_roundtrip_groupoid(FiniteGroupoid const& g)
{
  auto const b = local_bisection_monoid(g);
  auto const h = atom_groupoid(b);
  auto const& atoms = b.atoms();

  std::vector<std::size_t> singleton(g.arrow_count(), atoms.size());
  for (auto x : b.elements()) {
    auto const arrows = bisection_arrows(b, x);
    if (arrows.size() == 1)
      singleton[arrows.front()] = position(atoms, x);
  }

  GroupoidRoundTrip out;
  out.functor = singleton;
  if (h.arrow_count() != g.arrow_count())
    round_trip_failure("arrow counts differ: " + std::to_string(g.arrow_count()) + " vs "
                       + std::to_string(h.arrow_count()));
  if (h.object_count() != g.object_count())
    round_trip_failure("object counts differ");
  std::vector<bool> hit(h.arrow_count(), false);
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    auto const fa = singleton[a];
    if (fa >= atoms.size() || hit[fa])
      round_trip_failure("arrow '" + g.arrow_id(a) + "' has no distinct singleton atom");
    hit[fa] = true;
  }
  auto const& f = out.functor;
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    if (h.identity(h.src(f[a])) != f[g.identity(g.src(a))])
      round_trip_failure("source of '" + g.arrow_id(a) + "' not preserved");
    if (h.identity(h.dst(f[a])) != f[g.identity(g.dst(a))])
      round_trip_failure("target of '" + g.arrow_id(a) + "' not preserved");
    if (f[g.inverse(a)] != h.inverse(f[a]))
      round_trip_failure("inverse of '" + g.arrow_id(a) + "' not preserved");
    for (std::size_t c = 0; c < g.arrow_count(); ++c) {
      auto const ac = g.compose(a, c);
      if (!ac)
        continue;
      auto const hc = h.compose(f[a], f[c]);
      if (!hc || *hc != f[*ac])
        round_trip_failure("composite '" + g.arrow_id(a) + "' o '" + g.arrow_id(c) + "' not preserved");
    }
    table.push_back({{"arrow", g.arrow_id(a)}, {"image", h.arrow_id(f[a])},
                     {"bisection", b.label(atoms[f[a]])}});
  }
  out.certificate = {
    {"groupoid", g.to_json()},
    {"functor", std::move(table)},
    {"checks", {{"bijective", true}, {"endpoints", true}, {"composition", true}, {"inverses", true}}},
  };
  return out;
}

PartialBijection theta(FiniteMonoid const& s, element a)
{
  auto const& objects = s.idempotent_atoms();
  if (objects.size() > PartialBijection::max_degree)
    throw Error(ErrorKind::too_large, "too many idempotent atoms for a theta map");
  std::vector<std::pair<PartialBijection::point, PartialBijection::point>> pairs;
  auto const d = s.domain(a);
  for (std::size_t j = 0; j < objects.size(); ++j) {
    auto const f = objects[j];
    if (s.multiply(f, d) != f)
      continue;
    auto const k = position(objects, s.multiply(s.multiply(a, f), s.inverse(a)));
    pairs.emplace_back(static_cast<PartialBijection::point>(j + 1), static_cast<PartialBijection::point>(k + 1));
  }
  return PartialBijection(objects.size(), pairs);
}

bool mu_related(FiniteMonoid const& s, element a, element b)
{
  if (s.domain(a) != s.domain(b))
    return false;
  return std::all_of(s.idempotents().begin(), s.idempotents().end(), [&](element e) {
    return s.multiply(s.multiply(a, e), s.inverse(a)) == s.multiply(s.multiply(b, e), s.inverse(b));
  });
}

FundamentalReport fundamental_report(FiniteMonoid const& s)
{
  FundamentalReport r;
  auto const& es = s.idempotents();
  for (auto x : s.elements()) {
    if (s.is_idempotent(x))
      continue;
    bool central = std::all_of(es.begin(), es.end(),
                               [&](element e) { return s.multiply(x, e) == s.multiply(e, x); });
    if (central) {
      r.centralizer = false;
      r.witness = x;
      break;
    }
  }
  std::set<std::vector<element>> signatures;
  std::set<PartialBijection> thetas;
  for (auto x : s.elements()) {
    std::vector<element> sig{s.domain(x)};
    for (auto e : es)
      sig.push_back(s.multiply(s.multiply(x, e), s.inverse(x)));
    if (!signatures.insert(std::move(sig)).second)
      r.mu_trivial = false;
    if (!thetas.insert(theta(s, x)).second)
      r.theta_injective = false;
  }
  return r;
}

bool is_fundamental(FiniteMonoid const& s)
{
  auto const r = fundamental_report(s);
  if (!r.consistent())
    throw Error(ErrorKind::round_trip_failure, s.name() + ": fundamentality criteria disagree");
  return r.centralizer;
}

bool is_essentially_principal(FiniteGroupoid const& g)
{
  for (std::size_t a = 0; a < g.arrow_count(); ++a)
    if (g.src(a) == g.dst(a) && !g.is_identity(a))
      return false;
  return true;
}

std::size_t orbit_count(FiniteGroupoid const& g)
{
  std::vector<std::size_t> parent(g.object_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = g.object_count();
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    auto const x = find(g.src(a));
    auto const y = find(g.dst(a));
    if (x != y) {
      parent[x] = y;
      --count;
    }
  }
  return count;
}

bool units_above_atoms_are_cosets(FiniteMonoid const& s)
{
  std::vector<element> units;
  for (auto x : s.elements())
    if (is_unit(s, x))
      units.push_back(x);
  for (auto a : s.atoms()) {
    std::vector<element> xs;
    for (auto u : units)
      if (leq(s, a, u))
        xs.push_back(u);
    std::set<element> const members(xs.begin(), xs.end());
    for (auto x : xs)
      for (auto y : xs)
        for (auto z : xs)
          if (!members.count(s.multiply(s.multiply(x, s.inverse(y)), z)))
            return false;
  }
  return true;
}

bool atom_sets_multiply(FiniteMonoid const& s)
{
  for (auto a : s.elements()) {
    auto const va = s.atoms_below(a);
    for (auto b : s.elements()) {
      std::set<element> prod;
      for (auto x : va)
        for (auto y : s.atoms_below(b)) {
          auto const xy = s.multiply(x, y);
          if (xy != s.zero())
            prod.insert(xy);
        }
      auto const vab = s.atoms_below(s.multiply(a, b));
      if (prod != std::set<element>(vab.begin(), vab.end()))
        return false;
    }
  }
  return true;
}

} // namespace tarski
