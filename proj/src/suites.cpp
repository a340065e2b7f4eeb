#include "tarski/suites.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>
#include <sstream>
#include <variant>

#include "tarski/analysis.hpp"
#include "tarski/core.hpp"
#include "tarski/cuntz.hpp"
#include "tarski/duality.hpp"
#include "tarski/error.hpp"
#include "tarski/finite_monoid.hpp"
#include "tarski/prefix_map.hpp"
#include "tarski/random.hpp"

namespace tarski::suites {

void Invariant::record(bool ok, std::string const& detail)
{
  ++cases;
  if (!ok) {
    if (failures == 0)
      counterexample = detail;
    ++failures;
  }
}

Invariant& Report::get(std::string const& name)
{
  for (auto& inv : invariants)
    if (inv.name == name)
      return inv;
  invariants.push_back({name, 0, 0, {}});
  return invariants.back();
}

Invariant const& Report::at(std::string const& name) const
{
  for (auto const& inv : invariants)
    if (inv.name == name)
      return inv;
  throw Error(ErrorKind::invalid_argument, "no invariant '" + name + "' in suite " + suite);
}

bool Report::passed() const
{
  return std::all_of(invariants.begin(), invariants.end(), [](Invariant const& i) { return i.failures == 0; });
}

nlohmann::json Report::to_json() const
{
  nlohmann::json inv = nlohmann::json::array();
  for (auto const& i : invariants) {
    nlohmann::json j = {{"name", i.name}, {"cases", i.cases}, {"failures", i.failures},
                        {"passed", i.failures == 0}};
    if (i.failures != 0)
      j["counterexample"] = i.counterexample;
    inv.push_back(std::move(j));
  }
  return {{"suite", suite}, {"instance", instance}, {"seed", seed}, {"samples", samples},
          {"passed", passed()}, {"invariants", std::move(inv)}};
}

std::string Report::to_text() const
{
  std::size_t width = 0;
  for (auto const& i : invariants)
    width = std::max(width, i.name.size());
  std::ostringstream out;
  out << "suite " << suite << " on " << instance << " (seed " << seed << ", samples " << samples << ")\n";
  for (auto const& i : invariants) {
    out << "  " << (i.failures == 0 ? "PASS" : "FAIL") << "  " << i.name
        << std::string(width - i.name.size() + 2, ' ') << i.cases << " cases";
    if (i.failures != 0)
      out << ", " << i.failures << " failures; first: " << i.counterexample;
    out << "\n";
  }
  out << (passed() ? "all invariants hold\n" : "violations found\n");
  return out.str();
}

std::vector<std::string> const& names()
{
  static std::vector<std::string> const all{"axioms", "order", "support", "duality", "witnesses", "classification"};
  return all;
}

namespace {

using Instance = std::variant<FiniteMonoid, CuntzMonoid>;

Instance load(std::string const& spec)
{
  if (spec.rfind("cn:", 0) == 0) {
    int n = 0;
    auto const body = std::string_view(spec).substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), n);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw Error(ErrorKind::parse_error, "bad alphabet size in '" + spec + "'");
    return CuntzMonoid(n);
  }
  return finite_instance_from_spec(spec);
}

std::string show(FiniteMonoid const& m, element_t x)
{
  return m.label(x);
}

std::string show(CuntzMonoid const&, PrefixMap const& x)
{
  return x.to_string();
}

template<typename M>
std::string show(M const& m, std::initializer_list<element_of<M>> xs)
{
  std::string out;
  for (auto const& x : xs)
    out += (out.empty() ? "" : " ") + show(m, x);
  return out;
}

// --- laws on a triple --------------------------------------------------

template<typename M>
void axiom_laws(Report& r, M const& m, element_of<M> const& s, element_of<M> const& t, element_of<M> const& u)
{
  auto const ctx = show(m, {s, t, u});
  auto const inv = [&](auto const& x) { return m.inverse(x); };
  auto const mul = [&](auto const& x, auto const& y) { return m.multiply(x, y); };

  r.get("associativity").record(mul(mul(s, t), u) == mul(s, mul(t, u)), ctx);
  r.get("inverse laws").record(mul(mul(s, inv(s)), s) == s && mul(mul(inv(s), s), inv(s)) == inv(s)
                                   && inv(inv(s)) == s && inv(mul(s, t)) == mul(inv(t), inv(s)),
                               ctx);
  r.get("zero and one").record(mul(m.zero(), s) == m.zero() && mul(s, m.zero()) == m.zero()
                                   && mul(m.one(), s) == s && mul(s, m.one()) == s,
                               ctx);

  auto const e = domain(m, s);
  auto const f = domain(m, t);
  auto const g = range(m, u);
  r.get("idempotents commute").record(mul(e, f) == mul(f, e) && m.is_idempotent(mul(e, f)), ctx);
  auto const ce = m.complement(e);
  auto const cf = m.complement(f);
  bool boolean = mul(e, ce) == m.zero() && m.raw_join(e, ce) == m.one() && m.complement(ce) == e
              && m.complement(mul(e, f)) == m.raw_join(ce, cf)
              && mul(e, m.raw_join(f, g)) == m.raw_join(mul(e, f), mul(e, g));
  r.get("boolean algebra of idempotents").record(boolean, ctx);

  auto const st = m.raw_meet(s, t);
  bool meet_ok = leq(m, st, s) && leq(m, st, t) && st == m.raw_meet(t, s) && m.raw_meet(s, s) == s;
  if (leq(m, u, s) && leq(m, u, t))
    meet_ok = meet_ok && leq(m, u, st);
  r.get("meet is the greatest lower bound").record(meet_ok, ctx);

  if (compatible(m, s, t)) {
    r.get("compatible meet formula")
      .record(st == mul(s, domain(m, t)) && domain(m, st) == mul(domain(m, s), domain(m, t))
                  && range(m, st) == mul(range(m, s), range(m, t)),
              ctx);
    auto const j = m.raw_join(s, t);
    bool join_ok = leq(m, s, j) && leq(m, t, j)
                && domain(m, j) == m.raw_join(domain(m, s), domain(m, t))
                && range(m, j) == m.raw_join(range(m, s), range(m, t));
    if (leq(m, s, u) && leq(m, t, u))
      join_ok = join_ok && leq(m, j, u);
    r.get("join domain and range").record(join_ok, ctx);
    r.get("meet distributes over join")
      .record(m.raw_meet(u, j) == m.raw_join(m.raw_meet(u, s), m.raw_meet(u, t))
                  && mul(u, j) == m.raw_join(mul(u, s), mul(u, t)),
              ctx);
  } else {
    bool threw = false;
    try {
      join(m, s, t);
    } catch (Error const& err) {
      threw = err.kind() == ErrorKind::incompatible;
    }
    r.get("incompatible joins are refused").record(threw, ctx);
  }
}

template<typename M>
void order_laws(Report& r, M const& m, element_of<M> const& s, element_of<M> const& t, element_of<M> const& u)
{
  auto const ctx = show(m, {s, t, u});
  bool const st = leq(m, s, t);
  bool po = leq(m, s, s);
  if (st && leq(m, t, s))
    po = po && s == t;
  if (st && leq(m, t, u))
    po = po && leq(m, s, u);
  r.get("partial order").record(po, ctx);
  bool const by_range = s == m.multiply(range(m, s), t);
  bool const by_meet = m.raw_meet(s, t) == s;
  r.get("order characterisations").record(st == by_range && st == by_meet, ctx);
  if (leq(m, s, u) && leq(m, t, u))
    r.get("bounded pairs are compatible").record(compatible(m, s, t), ctx);
  auto const p = phi(m, s);
  r.get("fixed points below s").record(m.is_idempotent(p) && leq(m, p, s), ctx);
}

// --- instance drivers ----------------------------------------------------

struct CuntzSampler {
  int n;
  Rng rng;

  PrefixMap element() { return cuntz::random_element(n, rng); }

  // (s, t) compatible about half of the time: both restrictions of one unit
  std::array<PrefixMap, 3> triple()
  {
    if (rng.coin()) {
      auto const g = cuntz::random_unit(n, rng);
      auto restrict = [&] {
        std::vector<PrefixMap::Pair> kept;
        for (auto const& p : g.pairs())
          if (rng.coin())
            kept.push_back(p);
        return PrefixMap(n, kept);
      };
      auto const s = restrict();
      auto const t = restrict();
      return {s, t, rng.coin() ? g : element()};
    }
    return {element(), element(), element()};
  }
};

template<typename F>
void finite_triples(FiniteMonoid const& m, Options const& o, F&& f)
{
  auto const size = m.size();
  if (size <= 40) {
    for (auto s : m.elements())
      for (auto t : m.elements())
        for (auto u : m.elements())
          f(s, t, u);
    return;
  }
  Rng rng(o.seed);
  for (std::size_t i = 0; i < std::max<std::size_t>(o.samples, 1000); ++i) {
    auto const s = static_cast<element_t>(rng.below(size));
    auto const t = rng.coin() ? static_cast<element_t>(rng.below(size)) : m.multiply(s, m.domain(s));
    f(s, t, static_cast<element_t>(rng.below(size)));
  }
}

void fpo_oracle_finite(Report& r, FiniteMonoid const& m)
{
  for (auto s : m.elements()) {
    auto const p = phi(m, s);
    bool ok = true;
    for (auto e : m.idempotents())
      if (leq(m, e, s) && !leq(m, e, p))
        ok = false;
    r.get("fixed points are the largest idempotent below").record(ok, m.label(s));
  }
}

// every cylinder [w] below s with |w| <= depth lies below phi(s)
bool fpo_oracle_cuntz(PrefixMap const& s)
{
  int const n = s.alphabet();
  auto const p = s.meet(PrefixMap::identity(n));
  auto const depth = s.max_word_length() + 2;
  std::vector<Word> level{Word{}};
  for (std::size_t len = 0; len <= depth; ++len) {
    for (auto const& w : level) {
      auto const c = PrefixMap::cylinder(n, w);
      bool const under_s = s * c == c;
      bool const under_p = p * c == c;
      if (under_s != under_p)
        return false;
    }
    std::vector<Word> next;
    for (auto const& w : level)
      for (char a = '1'; a <= '0' + n; ++a)
        next.push_back(w + a);
    level = std::move(next);
  }
  return true;
}

template<typename M>
void balanced_laws(Report& r, M const& m, element_of<M> const& s)
{
  if (is_infinitesimal(m, s)) {
    auto const u = involution_from_infinitesimal(m, s);
    r.get("involution above an infinitesimal")
      .record(is_involution(m, u) && !is_one(m, u) && leq(m, s, u), show(m, s));
    auto const b = m.raw_join(s, m.inverse(s));
    auto const g = unit_from_balanced(m, b);
    r.get("unit above a balanced element").record(is_unit(m, g) && leq(m, b, g), show(m, b));
  }
  if (domain(m, s) == range(m, s)) {
    auto const g = unit_from_balanced(m, s);
    r.get("unit above a balanced element").record(is_unit(m, g) && leq(m, s, g), show(m, s));
  }
}

template<typename M>
void cooper_laws(Report& r, M const& m, element_of<M> const& s)
{
  auto const [p, q] = cooper_decompose(m, s);
  r.get("fixed and moving parts rejoin orthogonally")
    .record(orthogonal(m, p, q) && m.raw_join(p, q) == s && is_zero(m, phi(m, q)) && leq(m, sigma(m, s), domain(m, s)),
            show(m, s));
}

template<typename M>
void unit_pair_laws(Report& r, M const& m, element_of<M> const& g, element_of<M> const& h)
{
  auto const ctx = show(m, {g, h});
  auto const sg = sigma(m, g);
  auto const sh = sigma(m, h);
  r.get("support of the inverse").record(sigma(m, m.inverse(g)) == sg, ctx);
  r.get("support of a product").record(leq(m, sigma(m, m.multiply(g, h)), m.raw_join(sg, sh)), ctx);
  r.get("trivial support means identity").record(is_zero(m, sg) == is_one(m, g), ctx);
  if (is_zero(m, m.multiply(sg, sh)))
    r.get("disjoint supports commute").record(is_one(m, commutator(m, g, h)), ctx);
  r.get("support of a conjugate")
    .record(sigma(m, multiply(m, g, h, m.inverse(g))) == multiply(m, g, sh, m.inverse(g)), ctx);
}

// --- suites ------------------------------------------------------------

void suite_axioms(Report& r, Instance const& inst, Options const& o)
{
  if (auto const* fm = std::get_if<FiniteMonoid>(&inst)) {
    finite_triples(*fm, o, [&](element_t s, element_t t, element_t u) { axiom_laws(r, *fm, s, t, u); });
    return;
  }
  auto const& cm = std::get<CuntzMonoid>(inst);
  CuntzSampler smp{cm.alphabet(), Rng(o.seed)};
  for (std::size_t i = 0; i < o.samples; ++i) {
    auto const [s, t, u] = smp.triple();
    axiom_laws(r, cm, s, t, u);
  }
}

void suite_order(Report& r, Instance const& inst, Options const& o)
{
  if (auto const* fm = std::get_if<FiniteMonoid>(&inst)) {
    finite_triples(*fm, o, [&](element_t s, element_t t, element_t u) { order_laws(r, *fm, s, t, u); });
    fpo_oracle_finite(r, *fm);
    for (auto s : fm->elements())
      balanced_laws(r, *fm, s);
    return;
  }
  auto const& cm = std::get<CuntzMonoid>(inst);
  CuntzSampler smp{cm.alphabet(), Rng(o.seed)};
  for (std::size_t i = 0; i < o.samples; ++i) {
    auto const [s, t, u] = smp.triple();
    order_laws(r, cm, s, t, u);
    r.get("fixed points are the largest idempotent below").record(fpo_oracle_cuntz(s), s.to_string());
    for (auto const& pair : s.pairs())
      if (incomparable(pair.first, pair.second))
        balanced_laws(r, cm, PrefixMap(cm.alphabet(), {pair}));
    balanced_laws(r, cm, domain(cm, s));
  }
}

void suite_support(Report& r, Instance const& inst, Options const& o)
{
  if (auto const* fm = std::get_if<FiniteMonoid>(&inst)) {
    for (auto s : fm->elements())
      cooper_laws(r, *fm, s);
    auto const units = group_of_units(*fm).elements;
    for (auto g : units)
      for (auto h : units)
        unit_pair_laws(r, *fm, g, h);
    return;
  }
  auto const& cm = std::get<CuntzMonoid>(inst);
  int const n = cm.alphabet();
  Rng rng(o.seed);
  for (std::size_t i = 0; i < o.samples; ++i)
    cooper_laws(r, cm, cuntz::random_element(n, rng));
  for (std::size_t i = 0; i < o.samples; ++i) {
    auto const g = cuntz::random_unit(n, rng);
    PrefixMap h = cuntz::random_unit(n, rng);
    auto const sg = sigma(cm, g);
    // every other pair gets disjoint supports
    if (i % 2 == 1 && !sg.empty() && sg != PrefixMap::identity(n)) {
      auto const rest = sg.complement();
      h = cuntz::f1_witness(rest, cuntz::random_point_in(rest, rng));
    }
    unit_pair_laws(r, cm, g, h);

    if (sg.empty())
      continue;
    // moved points lie in the support; every support cylinder has one
    bool inside = true;
    for (int k = 0; k < 5; ++k) {
      auto const q = cuntz::random_point_in(PrefixMap::identity(n), rng);
      if (cuntz::apply_point(g, q) != q && !cuntz::contains(sg, q))
        inside = false;
    }
    auto const q = cuntz::find_moved_point(g, sg);
    inside = inside && cuntz::contains(sg, q);
    r.get("moved points lie in the support").record(inside, g.to_string());
    bool covered = true;
    for (auto const& w : sg.cylinders()) {
      try {
        auto const p = cuntz::find_moved_point(g, PrefixMap::cylinder(n, w));
        covered = covered && p.in_cylinder(w) && cuntz::apply_point(g, p) != p;
      } catch (Error const&) {
        covered = false;
      }
    }
    r.get("every support cylinder holds a moved point").record(covered, g.to_string());
  }
  for (std::size_t i = 0; i < o.samples; ++i) {
    auto const a = cuntz::random_element(n, rng);
    if (commutes_with_cylinders(a, a.max_word_length() + 2))
      r.get("commuting with all cylinders forces an idempotent").record(a.is_idempotent(), a.to_string());
    auto const e = domain(cm, a);
    r.get("commuting with all cylinders forces an idempotent")
      .record(commutes_with_cylinders(e, e.max_word_length() + 2), e.to_string());
  }
}

void suite_duality(Report& r, Instance const& inst, Options const& o)
{
  auto const* fm = std::get_if<FiniteMonoid>(&inst);
  if (fm == nullptr)
    throw Error(ErrorKind::invalid_argument, "the duality suite needs a finite instance");
  auto guarded = [&](std::string const& name, auto&& check) {
    try {
      check();
      r.get(name).record(true);
    } catch (Error const& e) {
      r.get(name).record(false, e.what());
    }
  };
  guarded("monoid round trip", [&] { duality_roundtrip_monoid(*fm); });
  auto const g = atom_groupoid(*fm);
  guarded("groupoid round trip", [&] { duality_roundtrip_groupoid(g); });
  auto const fr = fundamental_report(*fm);
  r.get("fundamental criteria agree").record(fr.consistent(), fm->name());
  r.get("fundamental iff essentially principal").record(fr.centralizer == is_essentially_principal(g), fm->name());
  auto const sr = zero_simplifying_report(*fm);
  r.get("0-simplifying criteria agree").record(sr.consistent(), fm->name());
  if (fm->size() <= 250) {
    for (auto s : fm->elements())
      for (auto t : fm->elements())
        r.get("equal theta maps iff mu related")
          .record((theta(*fm, s) == theta(*fm, t)) == mu_related(*fm, s, t), fm->label(s) + " " + fm->label(t));
    r.get("atom sets multiply").record(atom_sets_multiply(*fm), fm->name());
  }
  r.get("units above an atom form a coset").record(units_above_atoms_are_cosets(*fm), fm->name());
  for (std::size_t i = 0; i < std::min<std::size_t>(o.samples, 20); ++i) {
    auto const rg = groupoids::random(o.seed + i, 8);
    guarded("random groupoid round trips", [&] {
      duality_roundtrip_groupoid(rg);
      duality_roundtrip_monoid(local_bisection_monoid(rg));
    });
  }
}

PrefixMap sub_clopen(PrefixMap const& e, Rng& rng)
{
  auto const w = rng.pick(e.cylinders());
  Word ext;
  for (std::size_t k = rng.below(3); k > 0; --k)
    ext.push_back(static_cast<char>('1' + rng.below(static_cast<std::size_t>(e.alphabet()))));
  return PrefixMap::cylinder(e.alphabet(), w + ext);
}

void suite_witnesses(Report& r, Instance const& inst, Options const& o)
{
  auto const* cm = std::get_if<CuntzMonoid>(&inst);
  if (cm == nullptr)
    throw Error(ErrorKind::invalid_argument, "the witnesses suite needs a Cuntz instance");
  int const n = cm->alphabet();
  auto const& m = *cm;
  Rng rng(o.seed);
  auto guarded = [&](std::string const& name, std::string const& ctx, auto&& check) {
    try {
      r.get(name).record(check(), ctx);
    } catch (Error const& e) {
      r.get(name).record(false, ctx + ": " + e.what());
    }
  };
  auto canonical = cuntz::f3_witness(PrefixMap::identity(n));
  r.get("order-three unit cycles its blocks as (132)").record(canonical.cycle_notation() == "(132)",
                                                              canonical.cycle_notation());
  for (std::size_t i = 0; i < o.samples; ++i) {
    auto const e = cuntz::random_clopen(n, rng);
    auto const f = cuntz::random_clopen(n, rng);
    auto const p = cuntz::random_point_in(e, rng);
    auto const ctx = e.to_clopen_string() + " " + p.to_string();

    guarded("infinitesimal inside e at p", ctx, [&] {
      auto const a = cuntz::infinitesimal_at(e, p);
      return is_infinitesimal(m, a) && leq(m, domain(m, a).join(range(m, a)), e) && cuntz::in_domain(a, p);
    });
    guarded("enough involutions", ctx, [&] { return cuntz::check_f1(e, p, cuntz::f1_witness(e, p)).passed(); });

    auto const t = cuntz::random_involution(n, rng);
    auto const st = sigma(m, t);
    if (!st.empty()) {
      auto const sub = sub_clopen(st, rng);
      guarded("shrinking", t.to_string() + " " + sub.to_clopen_string(), [&] {
        auto const w = cuntz::f2_witness(t, sub);
        return cuntz::check_f2(t, sub, w.unit, o.seed + i).passed();
      });
    }
    guarded("enough non-involutions", ctx, [&] { return cuntz::check_f3(e, cuntz::f3_witness(e).unit).passed(); });

    guarded("transfer into f", ctx + " " + f.to_clopen_string(), [&] {
      auto const x = cuntz::transfer_witness(e, f);
      return domain(m, x) == e && leq(m, range(m, x), f);
    });
    guarded("properly infinite pair", ctx, [&] {
      auto const [x, y] = cuntz::properly_infinite_witness(e);
      return domain(m, x) == e && domain(m, y) == e && orthogonal(m, range(m, x), range(m, y))
          && leq(m, range(m, x).join(range(m, y)), e);
    });
    if (e != PrefixMap::identity(n))
      guarded("conjugating unit", ctx + " " + f.to_clopen_string(), [&] {
        auto const g = cuntz::conjugator_unit(e, f);
        return is_unit(m, g) && leq(m, multiply(m, g, e, g.inverse()), f);
      });
    guarded("clopen isomorphism criterion", e.to_clopen_string() + " " + f.to_clopen_string(), [&] {
      bool const congruent = e.cylinder_count() % static_cast<std::size_t>(n - 1)
                          == f.cylinder_count() % static_cast<std::size_t>(n - 1);
      try {
        auto const x = cuntz::clopen_iso(e, f);
        return congruent && domain(m, x) == e && range(m, x) == f;
      } catch (Error const& err) {
        return !congruent && err.kind() == ErrorKind::no_iso;
      }
    });
    guarded("support cover", ctx, [&] {
      auto acc = PrefixMap::zero(n);
      for (auto const& inv : cuntz::support_cover(e)) {
        if (!is_involution(m, inv))
          return false;
        acc = acc.join(sigma(m, inv));
      }
      return acc == e;
    });

    auto const s = cuntz::random_element(n, rng);
    if (!s.empty()) {
      guarded("piecewise factorization", s.to_string(), [&] {
        auto const parts = cuntz::piecewise_factorize(s);
        auto acc = PrefixMap::zero(n);
        auto used = PrefixMap::zero(n);
        for (auto const& part : parts) {
          if (!is_unit(m, part.unit) || !leq(m, part.idempotent, domain(m, s)) || !(used * part.idempotent).empty())
            return false;
          used = used.join(part.idempotent);
          acc = acc.join(part.unit * part.idempotent);
        }
        return acc == s;
      });
      auto const q = cuntz::random_point_in(domain(m, s), rng);
      guarded("unit in the ultrafilter", s.to_string() + " " + q.to_string(), [&] {
        auto const g = cuntz::unit_in_ultrafilter(s, q);
        return is_unit(m, g) && cuntz::in_domain(g.meet(s), q);
      });
      if (!cuntz::contains(phi(m, s), q))
        guarded("infinitesimals in a non-idempotent ultrafilter", s.to_string() + " " + q.to_string(), [&] {
          auto const parts = cuntz::hengist_witness(s, q);
          auto prod = PrefixMap::identity(n);
          for (auto const& a : parts) {
            if (!is_infinitesimal(m, a))
              return false;
            prod = prod * a;
          }
          return leq(m, prod, s) && cuntz::in_domain(prod, q);
        });
    }
    auto const g = cuntz::random_unit(n, rng);
    if (!is_one(m, g))
      guarded("separating cylinder at a moved point", g.to_string(), [&] {
        auto const q = cuntz::find_moved_point(g, sigma(m, g));
        auto const c = cuntz::separating_idempotent(g, q);
        return cuntz::apply_point(g, q) != q && cuntz::contains(c, q)
            && orthogonal(m, c, multiply(m, g, c, g.inverse()));
      });
  }
}

void suite_classification(Report& r, Instance const& inst, Options const& o)
{
  if (auto const* cm = std::get_if<CuntzMonoid>(&inst)) {
    auto const rep = analyze_cuntz(cm->alphabet(), o.seed, o.samples);
    for (auto const& [flag, value] : rep["flags"].items())
      r.get(flag).record(value.get<bool>(), "sampled flag false");
    return;
  }
  auto const& m = std::get<FiniteMonoid>(inst);
  auto const& atoms = m.idempotent_atoms();
  r.get("idempotents form a power set of the atoms")
    .record(m.idempotents().size() == (std::size_t{1} << atoms.size()), m.name());
  bool const simplifying = is_zero_simplifying(m);
  if (simplifying) {
    bool one_class = true;
    for (auto g : atoms)
      for (auto h : atoms) {
        auto const all = m.elements();
        one_class = one_class && std::any_of(all.begin(), all.end(), [&](element_t x) {
          return m.domain(x) == g && m.range(x) == h;
        });
      }
    r.get("atoms form one D-class").record(one_class, m.name());
  }
  bool const fundamental = is_fundamental(m);
  auto const c = classify(m);
  r.get("classified exactly when fundamental and 0-simplifying")
    .record(c.n.has_value() == (fundamental && simplifying), m.name());
  r.get("congruence-free composes its flags")
    .record(is_congruence_free(m) == (fundamental && is_zero_simple(m) && is_zero_disjunctive(m)), m.name());
  for (auto s : m.elements()) {
    auto const d = principality_decompose(m, s);
    if (!d) {
      r.get("idempotent plus orthogonal infinitesimals").record(!is_essentially_principal(atom_groupoid(m)),
                                                               m.label(s));
      continue;
    }
    auto acc = d->idempotent;
    bool ok = true;
    for (auto a : d->infinitesimals) {
      ok = ok && is_infinitesimal(m, a) && orthogonal(m, acc, a);
      acc = m.raw_join(acc, a);
    }
    r.get("idempotent plus orthogonal infinitesimals").record(ok && acc == s, m.label(s));
  }
  if (c.n)
    r.get("factorizable").record(is_factorizable(m), m.name());
}

} // namespace

Report run(std::string const& name, Options const& options)
{
  if (std::find(names().begin(), names().end(), name) == names().end())
    throw Error(ErrorKind::unknown_suite, "unknown suite '" + name + "'");
  auto spec = options.instance;
  if (spec.empty())
    spec = (name == "duality" || name == "classification") ? "I3" : "cn:2";
  auto const inst = load(spec);
  Report r{name, spec, options.seed, options.samples, {}};
  if (name == "axioms")
    suite_axioms(r, inst, options);
  else if (name == "order")
    suite_order(r, inst, options);
  else if (name == "support")
    suite_support(r, inst, options);
  else if (name == "duality")
    suite_duality(r, inst, options);
  else if (name == "witnesses")
    suite_witnesses(r, inst, options);
  else
    suite_classification(r, inst, options);
  return r;
}

} // namespace tarski::suites
