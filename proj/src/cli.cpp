#include "tarski/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tarski/analysis.hpp"
#include "tarski/core.hpp"
#include "tarski/cuntz.hpp"
#include "tarski/duality.hpp"
#include "tarski/error.hpp"
#include "tarski/finite_monoid.hpp"
#include "tarski/groupoid.hpp"
#include "tarski/prefix_map.hpp"
#include "tarski/suites.hpp"

namespace tarski::cli {

namespace {

using nlohmann::json;

struct Common {
  bool as_json = false;
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  std::string instance;
  int cn = 0;
  std::string e, p, t, f, s;
  std::string file;
  std::string kind;
  std::string suite;
  bool list = false;
};

std::optional<int> cuntz_alphabet(std::string const& spec)
{
  if (spec.rfind("cn:", 0) != 0)
    return std::nullopt;
  int n = 0;
  auto const body = std::string_view(spec).substr(3);
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), n);
  if (ec != std::errc() || ptr != body.data() + body.size())
    throw Error(ErrorKind::parse_error, "bad alphabet size in '" + spec + "'");
  return n;
}

int alphabet_of(Common const& c)
{
  if (c.cn != 0)
    return c.cn;
  if (auto n = cuntz_alphabet(c.instance))
    return *n;
  return 2;
}

std::string require(std::string const& value, char const* flag)
{
  if (value.empty())
    throw Error(ErrorKind::invalid_argument, std::string("missing ") + flag);
  return value;
}

void print_aligned(std::ostream& out, std::vector<std::pair<std::string, std::string>> const& rows)
{
  std::size_t width = 0;
  for (auto const& [k, v] : rows)
    width = std::max(width, k.size());
  for (auto const& [k, v] : rows)
    out << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
}

// --- finite ------------------------------------------------------------

int cmd_finite(Common const& c, std::ostream& out)
{
  auto const m = finite_instance_from_spec(c.instance.empty() ? "I3" : c.instance);
  auto const units = group_of_units(m);
  json j = {{"instance", m.name()},
            {"size", m.size()},
            {"idempotents", m.idempotents().size()},
            {"atoms", m.atoms().size()},
            {"idempotent_atoms", m.idempotent_atoms().size()},
            {"units", units.order()}};
  if (!c.s.empty()) {
    auto const x = m.parse(c.s);
    auto const [fixed, moving] = cooper_decompose(m, x);
    j["element"] = {{"normal_form", m.label(x)},
                    {"inverse", m.label(m.inverse(x))},
                    {"domain", m.label(m.domain(x))},
                    {"range", m.label(m.range(x))},
                    {"phi", m.label(fixed)},
                    {"sigma", m.label(sigma(m, x))},
                    {"moving_part", m.label(moving)},
                    {"is_idempotent", m.is_idempotent(x)},
                    {"is_unit", is_unit(m, x)},
                    {"is_involution", is_involution(m, x)},
                    {"is_infinitesimal", is_infinitesimal(m, x)},
                    {"atoms_below", json::array()}};
    for (auto a : m.atoms_below(x))
      j["element"]["atoms_below"].push_back(m.label(a));
  }
  if (c.list) {
    j["elements"] = json::array();
    for (auto x : m.elements())
      j["elements"].push_back(m.label(x));
  }
  if (c.as_json) {
    out << j.dump(2) << "\n";
    return ok;
  }
  out << "instance " << m.name() << "\n";
  print_aligned(out, {{"size", std::to_string(m.size())},
                      {"idempotents", std::to_string(m.idempotents().size())},
                      {"atoms", std::to_string(m.atoms().size())},
                      {"idempotent atoms", std::to_string(m.idempotent_atoms().size())},
                      {"units", std::to_string(units.order())}});
  if (j.contains("element")) {
    out << "element\n";
    std::vector<std::pair<std::string, std::string>> rows;
    for (auto const& [k, v] : j["element"].items())
      rows.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
    print_aligned(out, rows);
  }
  if (c.list)
    for (auto x : m.elements())
      out << "  " << m.label(x) << "\n";
  return ok;
}

// --- groupoid ----------------------------------------------------------

FiniteGroupoid load_groupoid(Common const& c)
{
  std::string spec = !c.file.empty() ? c.file : c.instance;
  if (spec.rfind("groupoid:", 0) == 0)
    spec = spec.substr(9);
  if (spec.empty())
    throw Error(ErrorKind::invalid_argument, "missing --file or --in groupoid:<path>");
  auto builtin = [&](std::string const& prefix) -> std::optional<std::size_t> {
    if (spec.rfind(prefix, 0) != 0)
      return std::nullopt;
    std::size_t k = 0;
    auto const body = std::string_view(spec).substr(prefix.size());
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw Error(ErrorKind::parse_error, "bad size in '" + spec + "'");
    return k;
  };
  if (auto k = builtin("pair:"))
    return groupoids::pair(*k);
  if (auto k = builtin("cyclic:"))
    return groupoids::cyclic_group(*k);
  if (auto k = builtin("discrete:"))
    return groupoids::discrete(*k);
  return FiniteGroupoid::from_file(spec);
}

int cmd_groupoid(Common const& c, std::ostream& out)
{
  auto const g = load_groupoid(c);
  json summary = {{"objects", g.object_count()},
                  {"arrows", g.arrow_count()},
                  {"orbits", orbit_count(g)},
                  {"essentially_principal", is_essentially_principal(g)}};
  if (g.arrow_count() <= max_bisection_arrows)
    summary["bisections"] = local_bisection_monoid(g).size();
  if (c.as_json) {
    out << json{{"groupoid", g.to_json()}, {"summary", summary}}.dump(2) << "\n";
    return ok;
  }
  out << "groupoid\n";
  std::vector<std::pair<std::string, std::string>> rows;
  for (auto const& [k, v] : summary.items())
    rows.emplace_back(k, v.dump());
  print_aligned(out, rows);
  out << g.to_json().dump() << "\n";
  return ok;
}

// --- cuntz -------------------------------------------------------------

int cmd_cuntz(Common const& c, std::ostream& out)
{
  int const n = alphabet_of(c);
  CuntzMonoid const m(n);
  auto const s = m.parse(require(c.s, "--s"));
  auto const [fixed, moving] = cooper_decompose(m, s);
  json j = {{"alphabet", n},
            {"s", s.to_string()},
            {"inverse", s.inverse().to_string()},
            {"domain", domain(m, s).to_clopen_string()},
            {"range", range(m, s).to_clopen_string()},
            {"phi", fixed.to_clopen_string()},
            {"sigma", sigma(m, s).to_clopen_string()},
            {"moving_part", moving.to_string()},
            {"is_idempotent", s.is_idempotent()},
            {"is_unit", is_unit(m, s)},
            {"is_involution", is_involution(m, s)},
            {"is_infinitesimal", is_infinitesimal(m, s)}};
  if (!c.t.empty()) {
    auto const t = m.parse(c.t);
    j["t"] = t.to_string();
    j["product"] = (s * t).to_string();
    j["meet"] = s.meet(t).to_string();
    j["compatible"] = compatible(m, s, t);
    j["join"] = compatible(m, s, t) ? json(s.join(t).to_string()) : json(nullptr);
  }
  if (!c.p.empty()) {
    auto const p = EPPoint::parse(n, c.p);
    j["point"] = p.to_string();
    j["image"] = cuntz::in_domain(s, p) ? json(cuntz::apply_point(s, p).to_string()) : json(nullptr);
  }
  if (c.as_json) {
    out << j.dump(2) << "\n";
    return ok;
  }
  out << "C" << n << " element\n";
  std::vector<std::pair<std::string, std::string>> rows;
  for (auto const& [k, v] : j.items())
    if (k != "alphabet")
      rows.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
  print_aligned(out, rows);
  return ok;
}

// --- analyze -----------------------------------------------------------

int cmd_analyze(Common const& c, std::ostream& out)
{
  json report;
  if (c.cn != 0 || cuntz_alphabet(c.instance))
    report = analyze_cuntz(alphabet_of(c), c.seed, c.samples);
  else
    report = analyze(finite_instance_from_spec(c.instance.empty() ? "I3" : c.instance));
  if (c.as_json) {
    out << report.dump(2) << "\n";
    return ok;
  }
  out << "analysis of " << report["instance"].get<std::string>();
  if (report.contains("sampled"))
    out << " (sampled, seed " << c.seed << ", " << c.samples << " clopens)";
  out << "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  for (auto const& [k, v] : report["flags"].items())
    rows.emplace_back(k, v.dump());
  print_aligned(out, rows);
  if (report.contains("classification")) {
    auto const& cl = report["classification"];
    out << "classification\n";
    if (cl["n"].is_null())
      print_aligned(out, {{"result", "none"}, {"reason", cl["reason"].get<std::string>()}});
    else
      print_aligned(out, {{"result", cl["target"].get<std::string>()}, {"verified", cl["verified"].dump()}});
  }
  if (report.contains("units"))
    print_aligned(out, {{"units", report["units"]["order"].dump()}});
  return ok;
}

// --- roundtrip ---------------------------------------------------------

int cmd_roundtrip(Common const& c, std::ostream& out)
{
  bool const groupoid_side = !c.file.empty() || c.instance.rfind("groupoid:", 0) == 0;
  json cert;
  std::string headline;
  if (groupoid_side) {
    auto const g = load_groupoid(c);
    cert = duality_roundtrip_groupoid(g).certificate;
    cert["direction"] = "G -> G(B(G))";
    headline = "G -> G(B(G)) on " + std::to_string(g.arrow_count()) + " arrows";
  } else {
    auto const m = finite_instance_from_spec(c.instance.empty() ? "I2" : c.instance);
    cert = duality_roundtrip_monoid(m).certificate;
    cert["direction"] = "S -> B(G(S))";
    headline = "S -> B(G(S)) for " + m.name() + " (" + std::to_string(m.size()) + " elements)";
  }
  if (c.as_json) {
    out << cert.dump(2) << "\n";
    return ok;
  }
  out << "round trip " << headline << "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  for (auto const& [k, v] : cert["checks"].items())
    rows.emplace_back(k, v.get<bool>() ? "verified" : "FAILED");
  print_aligned(out, rows);
  if (cert.contains("pairing"))
    for (auto const& p : cert["pairing"])
      out << "  " << p["element"].get<std::string>() << " -> " << p["bisection"].get<std::string>() << "\n";
  if (cert.contains("functor"))
    for (auto const& p : cert["functor"])
      out << "  " << p["arrow"].get<std::string>() << " -> " << p["bisection"].get<std::string>() << "\n";
  return ok;
}

// --- witness -----------------------------------------------------------

struct WitnessRun {
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> outputs;
  cuntz::CheckReport checks;
};

void reparse(WitnessRun& w, int n, std::string const& name, PrefixMap const& x)
{
  w.outputs.emplace_back(name, x.to_string());
  w.checks.add(name + " re-parses to the same normal form", PrefixMap::parse(n, x.to_string()) == x);
}

WitnessRun run_witness(Common const& c)
{
  int const n = alphabet_of(c);
  CuntzMonoid const m(n);
  auto clopen = [&](std::string const& v, char const* flag) {
    auto const e = PrefixMap::parse(n, require(v, flag));
    if (!e.is_idempotent())
      throw Error(ErrorKind::not_clopen, std::string(flag) + " " + e.to_string() + " is not a clopen");
    return e;
  };
  auto element = [&](std::string const& v, char const* flag) { return PrefixMap::parse(n, require(v, flag)); };
  auto point = [&] { return EPPoint::parse(n, require(c.p, "--p")); };

  WitnessRun w;
  auto const& k = c.kind;
  if (k == "f1") {
    auto const e = clopen(c.e, "--e");
    auto const p = point();
    w.inputs = {{"e", e.to_clopen_string()}, {"p", p.to_string()}};
    auto const t = cuntz::f1_witness(e, p);
    reparse(w, n, "t", t);
    w.outputs.emplace_back("sigma(t)", sigma(m, t).to_clopen_string());
    for (auto const& ch : cuntz::check_f1(e, p, PrefixMap::parse(n, t.to_string())).checks)
      w.checks.add(ch.name, ch.passed);
  } else if (k == "f2") {
    auto const t = element(c.t, "--t");
    auto const e = clopen(c.e, "--e");
    w.inputs = {{"t", t.to_string()}, {"e", e.to_clopen_string()}};
    auto const r = cuntz::f2_witness(t, e);
    reparse(w, n, "g", r.unit);
    w.outputs.emplace_back("region", r.region.to_clopen_string());
    w.outputs.emplace_back("infinitesimal", r.infinitesimal.to_string());
    w.outputs.emplace_back("moved point", r.moved_point.to_string());
    w.outputs.emplace_back("sigma(g)", sigma(m, r.unit).to_clopen_string());
    auto const samples = std::min<std::size_t>(c.samples, 50);
    for (auto const& ch : cuntz::check_f2(t, e, PrefixMap::parse(n, r.unit.to_string()), c.seed, samples).checks)
      w.checks.add(ch.name, ch.passed);
  } else if (k == "f3") {
    auto const e = clopen(c.e, "--e");
    w.inputs = {{"e", e.to_clopen_string()}};
    auto const r = cuntz::f3_witness(e);
    reparse(w, n, "g", r.unit);
    w.outputs.emplace_back("a", r.a.to_string());
    w.outputs.emplace_back("b", r.b.to_string());
    for (std::size_t i = 0; i < r.blocks.size(); ++i)
      w.outputs.emplace_back("block " + std::to_string(i + 1), r.blocks[i].to_clopen_string());
    w.outputs.emplace_back("block cycle", r.cycle_notation());
    for (auto const& ch : cuntz::check_f3(e, PrefixMap::parse(n, r.unit.to_string())).checks)
      w.checks.add(ch.name, ch.passed);
  } else if (k == "infinitesimal") {
    auto const e = clopen(c.e, "--e");
    auto const p = point();
    w.inputs = {{"e", e.to_clopen_string()}, {"p", p.to_string()}};
    auto const a = cuntz::infinitesimal_at(e, p);
    reparse(w, n, "a", a);
    w.checks.add("a is an infinitesimal", is_infinitesimal(m, a));
    w.checks.add("d(a) join r(a) <= e", leq(m, domain(m, a).join(range(m, a)), e));
    w.checks.add("p in d(a)", cuntz::in_domain(a, p));
  } else if (k == "properly-infinite") {
    auto const e = clopen(c.e, "--e");
    w.inputs = {{"e", e.to_clopen_string()}};
    auto const [x, y] = cuntz::properly_infinite_witness(e);
    reparse(w, n, "x", x);
    reparse(w, n, "y", y);
    w.checks.add("d(x) = d(y) = e", domain(m, x) == e && domain(m, y) == e);
    w.checks.add("r(x) orthogonal to r(y)", (range(m, x) * range(m, y)).empty());
    w.checks.add("r(x) join r(y) <= e", leq(m, range(m, x).join(range(m, y)), e));
  } else if (k == "transfer") {
    auto const e = clopen(c.e, "--e");
    auto const f = clopen(c.f, "--f");
    w.inputs = {{"e", e.to_clopen_string()}, {"f", f.to_clopen_string()}};
    auto const x = cuntz::transfer_witness(e, f);
    reparse(w, n, "x", x);
    w.checks.add("d(x) = e", domain(m, x) == e);
    w.checks.add("r(x) <= f", leq(m, range(m, x), f));
  } else if (k == "conjugator") {
    auto const e = clopen(c.e, "--e");
    auto const f = clopen(c.f, "--f");
    w.inputs = {{"e", e.to_clopen_string()}, {"f", f.to_clopen_string()}};
    auto const g = cuntz::conjugator_unit(e, f);
    reparse(w, n, "g", g);
    auto const image = g * e * g.inverse();
    w.outputs.emplace_back("g e g^-1", image.to_clopen_string());
    w.checks.add("g is a unit", is_unit(m, g));
    w.checks.add("g e g^-1 <= f", leq(m, image, f));
  } else if (k == "iso") {
    auto const e = clopen(c.e, "--e");
    auto const f = clopen(c.f, "--f");
    w.inputs = {{"e", e.to_clopen_string()}, {"f", f.to_clopen_string()}};
    auto const x = cuntz::clopen_iso(e, f);
    reparse(w, n, "x", x);
    w.checks.add("d(x) = e", domain(m, x) == e);
    w.checks.add("r(x) = f", range(m, x) == f);
  } else if (k == "factorize") {
    auto const s = element(c.s, "--s");
    w.inputs = {{"s", s.to_string()}};
    auto acc = PrefixMap::zero(n);
    auto used = PrefixMap::zero(n);
    bool parts_ok = true;
    std::size_t i = 0;
    for (auto const& part : cuntz::piecewise_factorize(s)) {
      ++i;
      reparse(w, n, "g" + std::to_string(i), part.unit);
      w.outputs.emplace_back("e" + std::to_string(i), part.idempotent.to_clopen_string());
      parts_ok = parts_ok && is_unit(m, part.unit) && leq(m, part.idempotent, domain(m, s))
              && (used * part.idempotent).empty();
      used = used.join(part.idempotent);
      acc = acc.join(part.unit * part.idempotent);
    }
    w.checks.add("units with orthogonal idempotents below d(s)", parts_ok);
    w.checks.add("s is the join of the parts", acc == s);
  } else if (k == "principality") {
    auto const s = element(c.s, "--s");
    w.inputs = {{"s", s.to_string()}};
    auto const r = cuntz::principality_decompose(s);
    if (auto const* d = std::get_if<cuntz::PrincipalDecomposition>(&r)) {
      w.outputs.emplace_back("branch", "decomposition");
      reparse(w, n, "idempotent", d->idempotent);
      auto acc = d->idempotent;
      bool orth = true;
      std::size_t i = 0;
      for (auto const& a : d->infinitesimals) {
        reparse(w, n, "s" + std::to_string(++i), a);
        orth = orth && is_infinitesimal(m, a) && orthogonal(m, acc, a);
        acc = acc.join(a);
      }
      w.checks.add("orthogonal infinitesimals", orth);
      w.checks.add("s = e join s_1 join ... join s_m", acc == s);
    } else {
      auto const& nw = std::get<cuntz::NonPrincipalWitness>(r);
      w.outputs.emplace_back("branch", "witness");
      w.outputs.emplace_back("pair", word_text(nw.pair.first) + "->" + word_text(nw.pair.second));
      w.outputs.emplace_back("fixed point", nw.fixed_point.to_string());
      w.checks.add("pair belongs to s", std::find(s.pairs().begin(), s.pairs().end(), nw.pair) != s.pairs().end());
      w.checks.add("point is fixed", cuntz::in_domain(s, nw.fixed_point)
                                         && cuntz::apply_point(s, nw.fixed_point) == nw.fixed_point);
      w.checks.add("point is outside phi(s)", !cuntz::contains(phi(m, s), nw.fixed_point));
    }
  } else if (k == "moved-point") {
    auto const g = element(c.t, "--t");
    auto const e = c.e.empty() ? sigma(m, g) : clopen(c.e, "--e");
    w.inputs = {{"g", g.to_string()}, {"e", e.to_clopen_string()}};
    auto const q = cuntz::find_moved_point(g, e);
    w.outputs.emplace_back("q", q.to_string());
    w.outputs.emplace_back("g q", cuntz::apply_point(g, q).to_string());
    w.checks.add("q in e", cuntz::contains(e, q));
    w.checks.add("g q != q", cuntz::apply_point(g, q) != q);
  } else if (k == "separate") {
    auto const g = element(c.t, "--t");
    auto const p = point();
    w.inputs = {{"g", g.to_string()}, {"p", p.to_string()}};
    auto const e = cuntz::separating_idempotent(g, p);
    reparse(w, n, "e", e);
    w.checks.add("p in e", cuntz::contains(e, p));
    w.checks.add("e orthogonal to g e g^-1", orthogonal(m, e, g * e * g.inverse()));
  } else if (k == "cover") {
    auto const e = clopen(c.e, "--e");
    w.inputs = {{"e", e.to_clopen_string()}};
    auto acc = PrefixMap::zero(n);
    bool invol = true;
    std::size_t i = 0;
    for (auto const& t : cuntz::support_cover(e)) {
      reparse(w, n, "t" + std::to_string(++i), t);
      invol = invol && is_involution(m, t);
      acc = acc.join(sigma(m, t));
    }
    w.checks.add("all involutions", invol);
    w.checks.add("supports join to e", acc == e);
  } else if (k == "ultrafilter") {
    auto const s = element(c.s, "--s");
    auto const p = point();
    w.inputs = {{"s", s.to_string()}, {"p", p.to_string()}};
    auto const g = cuntz::unit_in_ultrafilter(s, p);
    reparse(w, n, "g", g);
    w.checks.add("g is a unit", is_unit(m, g));
    w.checks.add("p in d(g meet s)", cuntz::in_domain(g.meet(s), p));
  } else if (k == "hengist") {
    auto const s = element(c.s, "--s");
    auto const p = point();
    w.inputs = {{"s", s.to_string()}, {"p", p.to_string()}};
    auto prod = PrefixMap::identity(n);
    bool inf = true;
    std::size_t i = 0;
    for (auto const& a : cuntz::hengist_witness(s, p)) {
      reparse(w, n, "a" + std::to_string(++i), a);
      inf = inf && is_infinitesimal(m, a);
      prod = prod * a;
    }
    w.checks.add("infinitesimals", inf);
    w.checks.add("product below s", leq(m, prod, s));
    w.checks.add("p in the domain of the product", cuntz::in_domain(prod, p));
  } else {
    throw Error(ErrorKind::invalid_argument, "unknown witness kind '" + k + "'");
  }
  return w;
}

int cmd_witness(Common const& c, std::ostream& out)
{
  auto const w = run_witness(c);
  int const n = alphabet_of(c);
  if (c.as_json) {
    json inputs = json::object();
    for (auto const& [k, v] : w.inputs)
      inputs[k] = v;
    json outputs = json::array();
    for (auto const& [k, v] : w.outputs)
      outputs.push_back({{"name", k}, {"value", v}});
    json checks = json::array();
    for (auto const& ch : w.checks.checks)
      checks.push_back({{"name", ch.name}, {"passed", ch.passed}});
    out << json{{"witness", c.kind},
                {"alphabet", n},
                {"seed", c.seed},
                {"inputs", inputs},
                {"outputs", outputs},
                {"checks", checks},
                {"passed", w.checks.passed()}}
             .dump(2)
        << "\n";
  } else {
    out << "witness " << c.kind << " in C" << n << "\n";
    print_aligned(out, w.inputs);
    out << "result\n";
    print_aligned(out, w.outputs);
    out << "checks\n";
    for (auto const& ch : w.checks.checks)
      out << "  " << (ch.passed ? "PASS" : "FAIL") << "  " << ch.name << "\n";
  }
  return w.checks.passed() ? ok : violation;
}

// --- test --------------------------------------------------------------

int cmd_test(Common const& c, std::ostream& out)
{
  suites::Options o;
  o.instance = c.cn != 0 ? "cn:" + std::to_string(c.cn) : c.instance;
  o.seed = c.seed;
  o.samples = c.samples;
  auto const report = suites::run(c.suite, o);
  if (c.as_json)
    out << report.to_json().dump(2) << "\n";
  else
    out << report.to_text();
  return report.passed() ? ok : violation;
}

int exit_for(Error const& e)
{
  switch (e.kind()) {
  case ErrorKind::parse_error:
  case ErrorKind::unknown_suite:
  case ErrorKind::invalid_argument:
    return usage;
  default:
    return violation;
  }
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Boolean inverse monoid workbench: finite instances, duality, Cuntz monoids", "tarski"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", c.as_json, "Emit JSON");
    sub->add_option("--seed", c.seed, "Seed for sampled checks")->capture_default_str();
    sub->add_option("--samples", c.samples, "Sample count")->capture_default_str();
    sub->add_option("--in,--instance", c.instance, "I<n> | prod:I<a>xI<b> | groupoid:<path> | cn:<n>");
    sub->add_option("--cn", c.cn, "Alphabet size of C_n")->check(CLI::Range(2, 9));
  };
  auto add_elements = [&](CLI::App* sub) {
    sub->add_option("--e", c.e, "Clopen");
    sub->add_option("--f", c.f, "Second clopen");
    sub->add_option("--p", c.p, "Eventually periodic point u|v");
    sub->add_option("--t", c.t, "Unit or involution");
    sub->add_option("--s", c.s, "Element");
  };

  auto* finite = app.add_subcommand("finite", "Describe a finite instance or one of its elements");
  add_common(finite);
  finite->add_option("--s", c.s, "Element in the instance grammar");
  finite->add_flag("--list", c.list, "List every element");

  auto* groupoid = app.add_subcommand("groupoid", "Validate a groupoid and print its canonical form");
  add_common(groupoid);
  groupoid->add_option("--file,--groupoid", c.file, "Groupoid JSON file or pair:k | cyclic:k | discrete:k");

  auto* cuntz_cmd = app.add_subcommand("cuntz", "Arithmetic of one element of C_n");
  add_common(cuntz_cmd);
  add_elements(cuntz_cmd);

  auto* analyze_cmd = app.add_subcommand("analyze", "Structural flags, witnesses and classification");
  add_common(analyze_cmd);

  auto* roundtrip = app.add_subcommand("roundtrip", "Duality round trip certificate");
  add_common(roundtrip);
  roundtrip->add_option("--groupoid,--file", c.file, "Groupoid JSON file");

  auto* witness = app.add_subcommand("witness", "Construct and check a witness in C_n");
  add_common(witness);
  add_elements(witness);
  witness->add_option("kind", c.kind,
                      "f1 | f2 | f3 | infinitesimal | properly-infinite | transfer | conjugator | iso | "
                      "factorize | principality | moved-point | separate | cover | ultrafilter | hengist")
    ->required();

  auto* test = app.add_subcommand("test", "Run a seeded property suite");
  add_common(test);
  test->add_option("suite", c.suite, "axioms | order | support | duality | witnesses | classification")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (finite->parsed())
      return cmd_finite(c, out);
    if (groupoid->parsed())
      return cmd_groupoid(c, out);
    if (cuntz_cmd->parsed())
      return cmd_cuntz(c, out);
    if (analyze_cmd->parsed())
      return cmd_analyze(c, out);
    if (roundtrip->parsed())
      return cmd_roundtrip(c, out);
    if (witness->parsed())
      return cmd_witness(c, out);
    return cmd_test(c, out);
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (nlohmann::json::exception const& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
}

} // namespace tarski::cli
