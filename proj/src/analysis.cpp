#include "tarski/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tarski/core.hpp"
#include "tarski/cuntz.hpp"
#include "tarski/duality.hpp"
#include "tarski/error.hpp"
#include "tarski/random.hpp"

namespace tarski {

namespace {

constexpr std::size_t ideal_limit = 400;

bool below(FiniteMonoid const& s, element_t e, element_t f)
{
  return s.multiply(e, f) == e;
}

std::vector<element_t> nonzero_idempotents(FiniteMonoid const& s)
{
  std::vector<element_t> out;
  for (auto e : s.idempotents())
    if (e != s.zero())
      out.push_back(e);
  return out;
}

std::vector<element_t> atoms_under(FiniteMonoid const& s, element_t e)
{
  std::vector<element_t> out;
  for (auto g : s.idempotent_atoms())
    if (below(s, g, e))
      out.push_back(g);
  return out;
}

// reach[g] = idempotent atoms h with some x, d(x) = g, r(x) = h
std::map<element_t, std::set<element_t>> atom_reach(FiniteMonoid const& s)
{
  std::map<element_t, std::set<element_t>> reach;
  for (auto x : s.atoms())
    reach[s.domain(x)].insert(s.range(x));
  return reach;
}

std::optional<std::string> verify_iso(FiniteMonoid const& s, FiniteMonoid const& t,
                                      std::vector<element_t> const& f)
{
  if (s.size() != t.size())
    return "carrier sizes differ";
  std::vector<bool> hit(t.size(), false);
  for (auto x : s.elements()) {
    if (hit[f[x]])
      return "not injective at " + s.label(x);
    hit[f[x]] = true;
  }
  if (f[s.zero()] != t.zero() || f[s.one()] != t.one())
    return "zero or one not preserved";
  for (auto x : s.elements()) {
    if (f[s.inverse(x)] != t.inverse(f[x]))
      return "inverse of " + s.label(x);
    for (auto y : s.elements()) {
      if (f[s.multiply(x, y)] != t.multiply(f[x], f[y]))
        return "product " + s.label(x) + " * " + s.label(y);
      if (f[s.raw_meet(x, y)] != t.raw_meet(f[x], f[y]))
        return "meet of " + s.label(x) + " and " + s.label(y);
      if (compatible(s, x, y) && f[s.raw_join(x, y)] != t.raw_join(f[x], f[y]))
        return "join of " + s.label(x) + " and " + s.label(y);
    }
  }
  return std::nullopt;
}

nlohmann::json labels(FiniteMonoid const& s, std::vector<element_t> const& xs)
{
  nlohmann::json out = nlohmann::json::array();
  for (auto x : xs)
    out.push_back(s.label(x));
  return out;
}

} // namespace

Pencil find_pencil(FiniteMonoid const& s, element_t e, element_t f)
{
  if (!s.is_idempotent(e) || !s.is_idempotent(f) || e == s.zero() || f == s.zero())
    throw Error(ErrorKind::invalid_argument, "pencils join nonzero idempotents");
  Pencil p{e, f, {}};
  for (auto g : atoms_under(s, e)) {
    std::optional<element_t> found;
    for (auto x : s.atoms())
      if (s.domain(x) == g && below(s, s.range(x), f)) {
        found = x;
        break;
      }
    if (!found)
      throw Error(ErrorKind::no_pencil, "no pencil from " + s.label(e) + " to " + s.label(f) + ": "
                                            + s.label(g) + " cannot be moved below " + s.label(f));
    p.elements.push_back(*found);
  }
  return p;
}

bool is_pencil(FiniteMonoid const& s, Pencil const& p)
{
  element_t acc = s.zero();
  for (auto x : p.elements) {
    if (!below(s, s.range(x), p.target))
      return false;
    acc = s.raw_join(acc, s.domain(x));
  }
  return acc == p.source;
}

bool SimplifyingReport::consistent() const
{
  return by_pencils == by_orbits && (!ideals_checked || by_pencils == by_ideals);
}

std::vector<element_t> join_ideal(FiniteMonoid const& s, element_t e)
{
  std::set<element_t> members;
  for (auto a : s.elements()) {
    auto const ae = s.multiply(a, e);
    for (auto b : s.elements())
      members.insert(s.multiply(ae, b));
  }
  bool changed = true;
  while (changed && !members.count(s.one())) {
    changed = false;
    std::vector<element_t> const current(members.begin(), members.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j)
        if (compatible(s, current[i], current[j]) && members.insert(s.raw_join(current[i], current[j])).second)
          changed = true;
  }
  if (members.count(s.one()))
    return s.elements();
  return {members.begin(), members.end()};
}

SimplifyingReport zero_simplifying_report(FiniteMonoid const& s)
{
  SimplifyingReport r;
  auto const reach = atom_reach(s);
  auto const idem = nonzero_idempotents(s);
  for (auto e : idem) {
    for (auto f : idem) {
      auto const targets = atoms_under(s, f);
      bool ok = true;
      for (auto g : atoms_under(s, e)) {
        auto it = reach.find(g);
        bool hit = it != reach.end() && std::any_of(targets.begin(), targets.end(),
                                                    [&](element_t h) { return it->second.count(h) > 0; });
        if (!hit) {
          ok = false;
          break;
        }
      }
      if (!ok && !r.counterexample) {
        r.by_pencils = false;
        r.counterexample = std::pair{e, f};
      }
    }
  }
  if (s.size() <= ideal_limit) {
    r.ideals_checked = true;
    for (auto e : idem)
      if (join_ideal(s, e).size() != s.size()) {
        r.by_ideals = false;
        break;
      }
  }
  r.by_orbits = orbit_count(atom_groupoid(s)) == 1;
  return r;
}

bool is_zero_simplifying(FiniteMonoid const& s)
{
  auto const r = zero_simplifying_report(s);
  if (!r.consistent())
    throw Error(ErrorKind::round_trip_failure, s.name() + ": 0-simplifying criteria disagree");
  return r.by_pencils;
}

std::optional<std::pair<element_t, element_t>> zero_simple_counterexample(FiniteMonoid const& s)
{
  std::map<element_t, std::vector<element_t>> ranges;
  for (auto x : s.elements())
    ranges[s.domain(x)].push_back(s.range(x));
  auto const idem = nonzero_idempotents(s);
  for (auto e : idem)
    for (auto f : idem) {
      auto const& rs = ranges[e];
      if (!std::any_of(rs.begin(), rs.end(), [&](element_t r) { return below(s, r, f); }))
        return std::pair{e, f};
    }
  return std::nullopt;
}

bool is_zero_simple(FiniteMonoid const& s)
{
  return !zero_simple_counterexample(s);
}

std::optional<std::pair<element_t, element_t>> zero_disjunctive_counterexample(FiniteMonoid const& s)
{
  auto const idem = nonzero_idempotents(s);
  for (auto e : idem)
    for (auto f : idem) {
      if (f == e || !below(s, f, e))
        continue;
      bool found = std::any_of(idem.begin(), idem.end(), [&](element_t g) {
        return below(s, g, e) && s.multiply(f, g) == s.zero();
      });
      if (!found)
        return std::pair{e, f};
    }
  return std::nullopt;
}

bool is_zero_disjunctive(FiniteMonoid const& s)
{
  return !zero_disjunctive_counterexample(s);
}

bool is_congruence_free(FiniteMonoid const& s)
{
  return is_fundamental(s) && is_zero_simple(s) && is_zero_disjunctive(s);
}

std::optional<element_t> not_properly_infinite(FiniteMonoid const& s)
{
  std::map<element_t, std::vector<element_t>> from;
  for (auto x : s.elements())
    from[s.domain(x)].push_back(x);
  for (auto e : nonzero_idempotents(s)) {
    auto const& xs = from[e];
    bool found = false;
    for (std::size_t i = 0; i < xs.size() && !found; ++i)
      for (std::size_t j = 0; j < xs.size() && !found; ++j) {
        auto const rx = s.range(xs[i]);
        auto const ry = s.range(xs[j]);
        found = s.multiply(rx, ry) == s.zero() && below(s, s.raw_join(rx, ry), e);
      }
    if (!found)
      return e;
  }
  return std::nullopt;
}

bool is_purely_infinite(FiniteMonoid const& s)
{
  return !not_properly_infinite(s);
}

std::optional<FiniteDecomposition> principality_decompose(FiniteMonoid const& s, element_t a)
{
  FiniteDecomposition out{phi(s, a), {}};
  for (auto x : s.atoms_below(a)) {
    if (s.is_idempotent(x))
      continue;
    if (!is_infinitesimal(s, x))
      return std::nullopt;
    out.infinitesimals.push_back(x);
  }
  return out;
}

bool is_factorizable(FiniteMonoid const& s)
{
  auto const units = group_of_units(s).elements;
  auto const all = s.elements();
  return std::all_of(all.begin(), all.end(), [&](element_t x) {
    return std::any_of(units.begin(), units.end(), [&](element_t g) { return leq(s, x, g); });
  });
}

Units group_of_units(FiniteMonoid const& s)
{
  Units u;
  for (auto x : s.elements())
    if (is_unit(s, x))
      u.elements.push_back(x);
  std::set<element_t> generated{s.one()};
  for (auto g : u.elements) {
    if (generated.count(g))
      continue;
    u.generators.push_back(g);
    std::vector<element_t> frontier(generated.begin(), generated.end());
    while (!frontier.empty()) {
      std::vector<element_t> next;
      for (auto x : frontier)
        for (auto h : u.generators) {
          auto const y = s.multiply(h, x);
          if (generated.insert(y).second)
            next.push_back(y);
        }
      frontier = std::move(next);
    }
  }
  return u;
}

Classification classify(FiniteMonoid const& s)
{
  Classification c;
  if (!is_fundamental(s)) {
    c.failed_flag = "fundamental";
    return c;
  }
  if (!is_zero_simplifying(s)) {
    c.failed_flag = "zero_simplifying";
    return c;
  }
  auto const n = s.idempotent_atoms().size();
  auto const target = symmetric_inverse_monoid(n);
  std::map<std::string, element_t> by_label;
  for (auto x : target.elements())
    by_label.emplace(target.label(x), x);
  c.iso.resize(s.size());
  for (auto x : s.elements()) {
    auto it = by_label.find(theta(s, x).to_string());
    if (it == by_label.end())
      throw Error(ErrorKind::not_classifiable, "theta of " + s.label(x) + " is not in " + target.name());
    c.iso[x] = it->second;
  }
  if (auto why = verify_iso(s, target, c.iso))
    throw Error(ErrorKind::not_classifiable, s.name() + " -> " + target.name() + " fails: " + *why);
  c.n = n;
  return c;
}

RealizationResult finite_spatial_realization_check(FiniteMonoid const& s, FiniteMonoid const& t)
{
  auto const cs = classify(s);
  auto const ct = classify(t);
  if (!cs.n || !ct.n)
    throw Error(ErrorKind::out_of_class, (cs.n ? t.name() : s.name()) + " is not "
                                             + (cs.n ? ct.failed_flag : cs.failed_flag));
  auto const us = group_of_units(s).order();
  auto const ut = group_of_units(t).order();
  return {us == ut, *cs.n == *ct.n, us, ut};
}

nlohmann::json analyze(FiniteMonoid const& s)
{
  nlohmann::json flags;
  nlohmann::json witnesses;

  bool boolean = true;
  std::string boolean_note;
  try {
    atom_groupoid(s);
  } catch (Error const& e) {
    boolean = false;
    boolean_note = e.what();
  }
  flags["is_boolean_inverse_meet_monoid"] = boolean;
  witnesses["is_boolean_inverse_meet_monoid"] =
    boolean ? nlohmann::json{{"idempotent_atoms", labels(s, s.idempotent_atoms())},
                             {"idempotents", s.idempotents().size()}}
            : nlohmann::json(boolean_note);
  if (!boolean)
    return {{"instance", s.name()}, {"size", s.size()}, {"flags", flags}, {"witnesses", witnesses}};

  auto const fund = fundamental_report(s);
  flags["is_fundamental"] = fund.centralizer;
  if (fund.witness)
    witnesses["is_fundamental"] = {{"centralizes_all_idempotents", s.label(*fund.witness)}};
  else
    witnesses["is_fundamental"] = {{"theta_injective_on", s.size()}};

  auto const simp = zero_simplifying_report(s);
  flags["is_zero_simplifying"] = simp.by_pencils;
  if (simp.counterexample) {
    witnesses["is_zero_simplifying"] = {{"no_pencil_from", s.label(simp.counterexample->first)},
                                        {"to", s.label(simp.counterexample->second)}};
  } else {
    auto const smallest = s.idempotent_atoms().front();
    auto const p = find_pencil(s, s.one(), smallest);
    witnesses["is_zero_simplifying"] = {{"pencil_from", s.label(s.one())},
                                        {"to", s.label(smallest)},
                                        {"elements", labels(s, p.elements)}};
  }

  auto const simple = zero_simple_counterexample(s);
  flags["is_zero_simple"] = !simple;
  if (simple)
    witnesses["is_zero_simple"] = {{"no_x_with_domain", s.label(simple->first)},
                                   {"and_range_below", s.label(simple->second)}};
  else
    witnesses["is_zero_simple"] = {{"checked_pairs", nonzero_idempotents(s).size() * nonzero_idempotents(s).size()}};

  auto const disj = zero_disjunctive_counterexample(s);
  flags["is_zero_disjunctive"] = !disj;
  witnesses["is_zero_disjunctive"] =
    disj ? nlohmann::json{{"e", s.label(disj->first)}, {"f", s.label(disj->second)}}
         : nlohmann::json("Boolean algebra of idempotents");

  bool const cf = fund.centralizer && !simple && !disj;
  flags["is_congruence_free"] = cf;
  witnesses["is_congruence_free"] = "fundamental and 0-simple and 0-disjunctive";

  auto const npi = not_properly_infinite(s);
  flags["is_purely_infinite"] = !npi;
  if (npi)
    witnesses["is_purely_infinite"] = {{"not_properly_infinite", s.label(*npi)}};
  else
    witnesses["is_purely_infinite"] = "every nonzero idempotent has two orthogonal copies below it";

  nlohmann::json classification;
  if (fund.centralizer && simp.by_pencils) {
    auto const c = classify(s);
    auto const target = symmetric_inverse_monoid(*c.n);
    nlohmann::json iso = nlohmann::json::array();
    for (auto x : s.elements())
      iso.push_back({s.label(x), target.label(c.iso[x])});
    classification = {{"n", *c.n}, {"target", target.name()}, {"verified", true}, {"isomorphism", iso}};
  } else {
    classification = {{"n", nullptr},
                      {"reason", fund.centralizer ? "not zero_simplifying" : "not fundamental"}};
  }

  auto const units = group_of_units(s);
  auto const g = atom_groupoid(s);
  return {
    {"instance", s.name()},
    {"size", s.size()},
    {"flags", flags},
    {"witnesses", witnesses},
    {"cross_checks",
     {{"fundamental", {{"centralizer", fund.centralizer}, {"mu", fund.mu_trivial}, {"theta", fund.theta_injective}}},
      {"zero_simplifying",
       {{"pencils", simp.by_pencils},
        {"join_ideals", simp.ideals_checked ? nlohmann::json(simp.by_ideals) : nlohmann::json(nullptr)},
        {"orbit_count", orbit_count(g)}}},
      {"essentially_principal", is_essentially_principal(g)}}},
    {"classification", classification},
    {"units", {{"order", units.order()}, {"generators", labels(s, units.generators)}}},
  };
}

bool commutes_with_cylinders(PrefixMap const& a, std::size_t depth)
{
  int const n = a.alphabet();
  std::vector<Word> level{Word{}};
  for (std::size_t len = 0; len <= depth; ++len) {
    for (auto const& w : level) {
      auto const c = PrefixMap::cylinder(n, w);
      if (a * c != c * a)
        return false;
    }
    std::vector<Word> next;
    for (auto const& w : level)
      for (char x = '1'; x <= '0' + n; ++x)
        next.push_back(w + x);
    level = std::move(next);
  }
  return true;
}

nlohmann::json analyze_cuntz(int n, std::uint64_t seed, std::size_t samples)
{
  Rng rng(seed);
  CuntzMonoid const m(n);
  std::size_t transfer_ok = 0, infinite_ok = 0, disjunctive_ok = 0, atomless_ok = 0, probes_ok = 0;
  nlohmann::json example;
  for (std::size_t i = 0; i < samples; ++i) {
    auto const e = cuntz::random_clopen(n, rng);
    auto const f = cuntz::random_clopen(n, rng);

    auto const x = cuntz::transfer_witness(e, f);
    if (domain(m, x) == e && leq(m, range(m, x), f))
      ++transfer_ok;

    auto const [px, py] = cuntz::properly_infinite_witness(e);
    auto const rx = range(m, px);
    auto const ry = range(m, py);
    if (domain(m, px) == e && domain(m, py) == e && (rx * ry).empty() && leq(m, rx.join(ry), e))
      ++infinite_ok;

    // a child cylinder sits strictly below e and its complement in e is nonzero
    auto const child = PrefixMap::cylinder(n, e.pairs().front().first + "1");
    auto const rest = e * child.complement();
    if (child != e && leq(m, child, e) && !child.empty())
      ++atomless_ok;
    if (!rest.empty() && (rest * child).empty())
      ++disjunctive_ok;

    auto const a = cuntz::random_element(n, rng);
    if (!commutes_with_cylinders(a, a.max_word_length() + 2) || a.is_idempotent())
      ++probes_ok;

    if (i == 0)
      example = {{"e", e.to_clopen_string()},
                 {"f", f.to_clopen_string()},
                 {"transfer", x.to_string()},
                 {"properly_infinite", {px.to_string(), py.to_string()}},
                 {"child_cylinder", child.to_clopen_string()}};
  }
  bool const simple = transfer_ok == samples;
  bool const infinite = infinite_ok == samples;
  bool const disjunctive = disjunctive_ok == samples;
  bool const fundamental = probes_ok == samples;
  return {
    {"instance", "C" + std::to_string(n)},
    {"sampled", true},
    {"seed", seed},
    {"samples", samples},
    {"flags",
     {{"is_boolean_inverse_meet_monoid", true},
      {"is_fundamental", fundamental},
      {"is_zero_simple", simple},
      {"is_zero_simplifying", simple},
      {"is_zero_disjunctive", disjunctive},
      {"is_congruence_free", fundamental && simple && disjunctive},
      {"is_purely_infinite", infinite}}},
    {"checks",
     {{"transfer_witnesses", transfer_ok},
      {"properly_infinite_witnesses", infinite_ok},
      {"disjunctive_witnesses", disjunctive_ok},
      {"atomless_witnesses", atomless_ok},
      {"commutation_probes", probes_ok}}},
    {"example", example},
    {"schema",
     {{"zero_simple", "transfer_witness maps the cylinders of e into a comb inside f"},
      {"zero_simplifying", "the single transfer element is a pencil"},
      {"purely_infinite", "two disjoint combs inside the first cylinder of e"},
      {"fundamental", "elements commuting with all cylinders to depth + 2 are idempotent"}}},
  };
}

} // namespace tarski
