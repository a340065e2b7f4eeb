#include "tarski/cuntz.hpp"

#include <algorithm>
#include <map>

#include "tarski/core.hpp"
#include "tarski/error.hpp"

namespace tarski::cuntz {

namespace {

char next_letter(int n, char c)
{
  return static_cast<char>('1' + (c - '1' + 1) % n);
}

PrefixMap dom(PrefixMap const& s)
{
  return s.inverse() * s;
}

PrefixMap ran(PrefixMap const& s)
{
  return s * s.inverse();
}

bool below(PrefixMap const& e, PrefixMap const& f)
{
  return e * f == e;
}

PrefixMap complement_of(PrefixMap const& e)
{
  return e.complement();
}

void require_nonzero(PrefixMap const& e, char const* what)
{
  if (e.empty())
    throw Error(ErrorKind::zero_idempotent, std::string(what) + " must be a non-zero clopen");
}

void require_clopen(PrefixMap const& e)
{
  if (!e.is_idempotent())
    throw Error(ErrorKind::not_clopen, e.to_string() + " is not a clopen");
}

// Leaves of a comb inside [w]: the last leaf is split into its children
// until at least `count` leaves exist.
std::vector<Word> comb_leaves(int n, Word const& w, std::size_t count)
{
  std::vector<Word> leaves{w};
  while (leaves.size() < count) {
    Word last = leaves.back();
    leaves.pop_back();
    for (char a = '1'; a <= '0' + n; ++a)
      leaves.push_back(last + a);
  }
  return leaves;
}

PrefixMap pair_up(int n, std::vector<Word> const& from, std::vector<Word> const& to)
{
  std::vector<PrefixMap::Pair> pairs;
  for (std::size_t i = 0; i < from.size(); ++i)
    pairs.emplace_back(from[i], to[i]);
  return PrefixMap(n, std::move(pairs));
}

PrefixMap unit_completion(PrefixMap const& a)
{
  auto const rest = complement_of(dom(a).join(ran(a)));
  return a.join(a.inverse()).join(rest);
}

} // namespace

bool contains(PrefixMap const& e, EPPoint const& p)
{
  return in_domain(e, p);
}

bool in_domain(PrefixMap const& s, EPPoint const& p)
{
  return std::any_of(s.pairs().begin(), s.pairs().end(),
                     [&](PrefixMap::Pair const& q) { return p.in_cylinder(q.first); });
}

EPPoint apply_point(PrefixMap const& s, EPPoint const& p)
{
  for (auto const& [d, r] : s.pairs())
    if (p.in_cylinder(d))
      return p.drop(d.size()).prepend(r);
  throw Error(ErrorKind::point_outside_domain, p.to_string() + " is not in the domain of " + s.to_string());
}

PrefixMap infinitesimal_at(PrefixMap const& e, EPPoint const& p)
{
  require_clopen(e);
  auto const& pairs = e.pairs();
  auto it = std::find_if(pairs.begin(), pairs.end(),
                         [&](PrefixMap::Pair const& q) { return p.in_cylinder(q.first); });
  if (it == pairs.end())
    throw Error(ErrorKind::point_outside_domain, p.to_string() + " is not in " + e.to_clopen_string());
  auto const depth = std::max<std::size_t>(it->first.size(), 1) + 1;
  Word d = p.head(depth);
  Word r = d;
  r.back() = next_letter(e.alphabet(), r.back());
  return PrefixMap(e.alphabet(), {{d, r}});
}

PrefixMap f1_witness(PrefixMap const& e, EPPoint const& p)
{
  CuntzMonoid const m(e.alphabet());
  return involution_from_infinitesimal(m, infinitesimal_at(e, p));
}

F2Witness f2_witness(PrefixMap const& t, PrefixMap const& e)
{
  CuntzMonoid const m(t.alphabet());
  if (!is_involution(m, t) || is_one(m, t))
    throw Error(ErrorKind::not_involution, t.to_string() + " is not a non-trivial involution");
  require_clopen(e);
  if (e.empty() || !below(e, sigma(m, t)))
    throw Error(ErrorKind::not_below_support, e.to_clopen_string() + " is not a non-zero clopen below the support");
  auto const q = find_moved_point(t, e);
  auto const f = separating_idempotent(t, q, e);
  auto const a = infinitesimal_at(f, q);
  auto const d = dom(a);
  auto const i = complement_of(d) * complement_of(t * d * t);
  auto const g = (t * d).join(d * t).join(i);
  return {g, f, a, q};
}

std::string F3Witness::cycle_notation() const
{
  std::string out;
  std::vector<bool> seen(block_map.size(), false);
  for (std::size_t i = 0; i < block_map.size(); ++i) {
    if (seen[i] || block_map[i] == static_cast<int>(i))
      continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(block_map[j])) {
      seen[j] = true;
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

F3Witness f3_witness(PrefixMap const& e)
{
  require_clopen(e);
  require_nonzero(e, "e");
  int const n = e.alphabet();
  Word const w = e.pairs().front().first;
  PrefixMap const b(n, {{w + "11", w + "12"}});
  PrefixMap const a(n, {{w + "12", w + "2"}});
  CuntzMonoid const m(n);
  auto const g = involution_from_infinitesimal(m, a);
  auto const h = involution_from_infinitesimal(m, b);

  F3Witness out{g * h, g, h, a, b, {}, {}};
  out.blocks = {dom(a), ran(a), dom(b)};
  out.blocks.push_back(complement_of(out.blocks[0].join(out.blocks[1]).join(out.blocks[2])));
  for (auto const& block : out.blocks) {
    auto const image = out.unit * block * out.unit.inverse();
    int target = -1;
    for (std::size_t j = 0; j < out.blocks.size(); ++j)
      if (image == out.blocks[j])
        target = static_cast<int>(j);
    out.block_map.push_back(target);
  }
  return out;
}

std::pair<PrefixMap, PrefixMap> properly_infinite_witness(PrefixMap const& e)
{
  require_clopen(e);
  require_nonzero(e, "e");
  auto const cyl = e.cylinders();
  auto const k = cyl.size();
  auto const leaves = comb_leaves(e.alphabet(), cyl.front(), 2 * k);
  std::vector<Word> xs(leaves.begin(), leaves.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<Word> ys(leaves.begin() + static_cast<std::ptrdiff_t>(k),
                       leaves.begin() + static_cast<std::ptrdiff_t>(2 * k));
  return {pair_up(e.alphabet(), cyl, xs), pair_up(e.alphabet(), cyl, ys)};
}

PrefixMap transfer_witness(PrefixMap const& e, PrefixMap const& f)
{
  require_clopen(e);
  require_clopen(f);
  require_nonzero(e, "e");
  require_nonzero(f, "f");
  auto const cyl = e.cylinders();
  auto leaves = comb_leaves(e.alphabet(), f.pairs().front().first, cyl.size());
  leaves.resize(cyl.size());
  return pair_up(e.alphabet(), cyl, leaves);
}

PrefixMap conjugator_unit(PrefixMap const& e, PrefixMap const& f)
{
  require_clopen(e);
  require_clopen(f);
  int const n = e.alphabet();
  if (e == PrefixMap::identity(n))
    throw Error(ErrorKind::identity_idempotent, "e must not be the identity");
  require_nonzero(f, "f");
  if (e.empty())
    return PrefixMap::identity(n);
  auto const ebar = complement_of(e);
  auto const room = f * ebar;
  if (!room.empty())
    return unit_completion(transfer_witness(e, room));
  auto const u = conjugator_unit(e, ebar);
  auto const v = conjugator_unit(ebar, f);
  return v * u;
}

PrefixMap clopen_iso(PrefixMap const& e, PrefixMap const& f)
{
  require_clopen(e);
  require_clopen(f);
  int const n = e.alphabet();
  auto const ce = e.cylinder_count();
  auto const cf = f.cylinder_count();
  auto const step = static_cast<std::size_t>(n - 1);
  if (ce == 0 || cf == 0 || ce % step != cf % step)
    throw Error(ErrorKind::no_iso, "no isomorphism between clopens with " + std::to_string(ce) + " and "
                                       + std::to_string(cf) + " cylinders in C_" + std::to_string(n));
  auto grow = [n](std::vector<Word> leaves, std::size_t target) {
    while (leaves.size() < target) {
      Word last = leaves.back();
      leaves.pop_back();
      for (char a = '1'; a <= '0' + n; ++a)
        leaves.push_back(last + a);
    }
    return leaves;
  };
  auto const size = std::max(ce, cf);
  return pair_up(n, grow(e.cylinders(), size), grow(f.cylinders(), size));
}

std::vector<FactorPart> piecewise_factorize(PrefixMap const& s)
{
  int const n = s.alphabet();
  if (s.empty())
    return {};
  CuntzMonoid const m(n);
  if (is_unit(m, s))
    return {{s, PrefixMap::identity(n)}};
  auto const d = dom(s);
  auto const cd = complement_of(d);
  auto const cr = complement_of(ran(s));
  if (!cd.empty() && !cr.empty()) {
    try {
      return {{s.join(clopen_iso(cd, cr)), d}};
    } catch (Error const& err) {
      if (err.kind() != ErrorKind::no_iso)
        throw;
    }
  }
  // piece by piece; a single cylinder of positive length has a complement
  // whose cylinder count is a multiple of n - 1
  std::vector<FactorPart> parts;
  for (auto const& [dw, rw] : s.pairs()) {
    std::vector<PrefixMap::Pair> pieces;
    if (dw.empty() || rw.empty()) {
      for (char a = '1'; a <= '0' + n; ++a)
        pieces.emplace_back(dw + a, rw + a);
    } else {
      pieces.emplace_back(dw, rw);
    }
    for (auto const& [pd, pr] : pieces) {
      auto const piece_d = PrefixMap::cylinder(n, pd);
      auto const iso = clopen_iso(complement_of(piece_d), complement_of(PrefixMap::cylinder(n, pr)));
      parts.push_back({PrefixMap(n, {{pd, pr}}).join(iso), piece_d});
    }
  }
  return parts;
}

std::variant<PrincipalDecomposition, NonPrincipalWitness>
principality_decompose(PrefixMap const& s)
{
  int const n = s.alphabet();
  std::vector<PrefixMap::Pair> fixed;
  std::vector<PrefixMap> infinitesimals;
  for (auto const& pair : s.pairs()) {
    auto const& [d, r] = pair;
    if (d == r) {
      fixed.push_back(pair);
    } else if (incomparable(d, r)) {
      infinitesimals.emplace_back(n, std::vector<PrefixMap::Pair>{pair});
    } else {
      auto const& shorter = d.size() < r.size() ? d : r;
      auto const& longer = d.size() < r.size() ? r : d;
      return NonPrincipalWitness{pair, EPPoint(shorter, longer.substr(shorter.size()))};
    }
  }
  return PrincipalDecomposition{PrefixMap(n, std::move(fixed)), std::move(infinitesimals)};
}

EPPoint find_moved_point(PrefixMap const& g, PrefixMap const& e)
{
  require_clopen(e);
  if (e.empty())
    throw Error(ErrorKind::empty_support_region, "cannot find a moved point in the zero clopen");
  int const n = g.alphabet();
  auto const depth = g.max_word_length() + 2;
  for (auto const& w : e.cylinders()) {
    // breadth-first over extensions x of w, periods of one letter
    std::vector<Word> frontier{w};
    for (std::size_t len = 0; len <= depth; ++len) {
      for (auto const& u : frontier)
        for (char c = '1'; c <= '0' + n; ++c) {
          EPPoint const q(u, std::string(1, c));
          if (in_domain(g, q) && apply_point(g, q) != q)
            return q;
        }
      std::vector<Word> next;
      for (auto const& u : frontier)
        for (char c = '1'; c <= '0' + n; ++c)
          next.push_back(u + c);
      frontier = std::move(next);
    }
  }
  throw Error(ErrorKind::not_moved, g.to_string() + " moves no point of " + e.to_clopen_string());
}

PrefixMap separating_idempotent(PrefixMap const& g, EPPoint const& p, std::optional<PrefixMap> const& within)
{
  int const n = g.alphabet();
  auto const image = apply_point(g, p);
  if (image == p)
    throw Error(ErrorKind::not_moved, p.to_string() + " is fixed by " + g.to_string());
  if (within && !contains(*within, p))
    throw Error(ErrorKind::point_outside_domain, p.to_string() + " is not in " + within->to_clopen_string());
  auto const d = dom(g);
  auto const limit = 2 * (p.prefix().size() + p.period().size() + image.prefix().size()
                          + image.period().size() + g.max_word_length())
                   + 8;
  for (std::size_t k = 0; k <= limit; ++k) {
    auto const c = PrefixMap::cylinder(n, p.head(k));
    if (!below(c, d) || (within && !below(c, *within)))
      continue;
    if ((c * (g * c * g.inverse())).empty())
      return c;
  }
  throw Error(ErrorKind::not_moved, "no separating cylinder found around " + p.to_string());
}

std::vector<PrefixMap> support_cover(PrefixMap const& e)
{
  require_clopen(e);
  require_nonzero(e, "e");
  int const n = e.alphabet();
  CuntzMonoid const m(n);
  std::vector<PrefixMap> out;
  for (auto const& w : e.cylinders())
    for (char i = '1'; i <= '0' + n; ++i)
      for (char j = static_cast<char>(i + 1); j <= '0' + n; ++j)
        out.push_back(involution_from_infinitesimal(m, PrefixMap(n, {{w + i, w + j}})));
  return out;
}

PrefixMap unit_in_ultrafilter(PrefixMap const& s, EPPoint const& p)
{
  if (!in_domain(s, p))
    throw Error(ErrorKind::point_outside_domain, p.to_string() + " is not in the domain of " + s.to_string());
  for (auto const& part : piecewise_factorize(s))
    if (contains(part.idempotent, p))
      return part.unit;
  throw Error(ErrorKind::point_outside_domain, "no factor of " + s.to_string() + " covers " + p.to_string());
}

std::vector<PrefixMap> hengist_witness(PrefixMap const& s, EPPoint const& p)
{
  auto const image = apply_point(s, p);
  if (image != p) {
    auto const c = separating_idempotent(s, p, dom(s));
    return {s * c};
  }
  auto const a = infinitesimal_at(dom(s), p);
  auto const q = apply_point(a, p);
  auto const y = s * a.inverse();
  auto const c = separating_idempotent(y, q, dom(y));
  return {y * c, a};
}

bool CheckReport::passed() const
{
  return std::all_of(checks.begin(), checks.end(), [](Check const& c) { return c.passed; });
}

CheckReport check_f1(PrefixMap const& e, EPPoint const& p, PrefixMap const& t)
{
  CuntzMonoid const m(t.alphabet());
  CheckReport r;
  auto const supp = sigma(m, t);
  r.add("sigma(t) <= e", below(supp, e));
  r.add("p in sigma(t)", contains(supp, p));
  r.add("t^2 = 1", is_involution(m, t));
  r.add("t != 1", !is_one(m, t));
  return r;
}

CheckReport check_f2(PrefixMap const& t, PrefixMap const& e, PrefixMap const& g, std::uint64_t seed,
                     std::size_t samples)
{
  CuntzMonoid const m(t.alphabet());
  CheckReport r;
  r.add("g is a unit", is_unit(m, g));
  r.add("g^2 = 1", is_one(m, g * g));
  auto const supp = sigma(m, g);
  r.add("sigma(g) <= e join t e t", below(supp, e.join(t * e * t)));
  Rng rng(seed);
  bool agree = !supp.empty();
  for (std::size_t i = 0; i < samples && agree; ++i) {
    auto const q = random_point_in(supp, rng);
    agree = apply_point(g, q) == apply_point(t, q);
  }
  r.add("g F = t F on sampled points of sigma(g)", agree);
  auto const fix = phi(m, t);
  bool still = true;
  for (std::size_t i = 0; i < samples && still && !fix.empty(); ++i) {
    auto const q = random_point_in(fix, rng);
    still = apply_point(g, q) == q;
  }
  r.add("g F = F on sampled points of phi(t)", still);
  return r;
}

CheckReport check_f3(PrefixMap const& e, PrefixMap const& g)
{
  CuntzMonoid const m(g.alphabet());
  CheckReport r;
  r.add("g is a unit", is_unit(m, g));
  r.add("g != 1", !is_one(m, g));
  r.add("g^2 != 1", !is_one(m, g * g));
  r.add("g^3 = 1", is_one(m, g * g * g));
  r.add("sigma(g) <= e", below(sigma(m, g), e));
  return r;
}

std::vector<Word> random_prefix_code(int n, Rng& rng, std::size_t splits, std::size_t max_depth)
{
  std::vector<Word> leaves{Word{}};
  for (std::size_t i = 0; i < splits; ++i) {
    std::vector<std::size_t> open;
    for (std::size_t j = 0; j < leaves.size(); ++j)
      if (leaves[j].size() < max_depth)
        open.push_back(j);
    if (open.empty())
      break;
    auto const j = rng.pick(open);
    Word const w = leaves[j];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(j));
    for (char a = '1'; a <= '0' + n; ++a)
      leaves.push_back(w + a);
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

PrefixMap random_unit(int n, Rng& rng, SampleShape shape)
{
  auto const splits = rng.below(shape.max_splits + 1);
  auto const dom_code = random_prefix_code(n, rng, splits, shape.max_depth);
  std::vector<Word> ran_code;
  if (rng.below(3) == 0) {
    // same code, few moved leaves
    ran_code = dom_code;
    for (std::size_t i = 0; i + 1 < ran_code.size(); ++i)
      if (rng.coin())
        std::swap(ran_code[i], ran_code[i + 1 + rng.below(ran_code.size() - i - 1)]);
  } else {
    ran_code = random_prefix_code(n, rng, splits, shape.max_depth);
    if (ran_code.size() != dom_code.size())
      ran_code = dom_code;
    rng.shuffle(ran_code);
  }
  return pair_up(n, dom_code, ran_code);
}

PrefixMap random_element(int n, Rng& rng, SampleShape shape)
{
  auto const u = random_unit(n, rng, shape);
  std::vector<PrefixMap::Pair> kept;
  for (auto const& p : u.pairs())
    if (rng.below(3) != 0)
      kept.push_back(p);
  return PrefixMap(n, std::move(kept));
}

PrefixMap random_involution(int n, Rng& rng, SampleShape shape)
{
  auto const splits = 1 + rng.below(std::max<std::size_t>(shape.max_splits, 1));
  auto leaves = random_prefix_code(n, rng, splits, std::max<std::size_t>(shape.max_depth, 1));
  rng.shuffle(leaves);
  std::vector<PrefixMap::Pair> pairs;
  std::size_t i = 0;
  bool swapped = false;
  for (; i + 1 < leaves.size(); i += 2) {
    if (!swapped || rng.coin()) {
      pairs.emplace_back(leaves[i], leaves[i + 1]);
      pairs.emplace_back(leaves[i + 1], leaves[i]);
      swapped = true;
    } else {
      pairs.emplace_back(leaves[i], leaves[i]);
      pairs.emplace_back(leaves[i + 1], leaves[i + 1]);
    }
  }
  for (; i < leaves.size(); ++i)
    pairs.emplace_back(leaves[i], leaves[i]);
  return PrefixMap(n, std::move(pairs));
}

PrefixMap random_clopen(int n, Rng& rng, SampleShape shape)
{
  auto const splits = rng.below(shape.max_splits + 1);
  auto const code = random_prefix_code(n, rng, splits, shape.max_depth);
  std::vector<Word> chosen;
  for (auto const& w : code)
    if (rng.coin())
      chosen.push_back(w);
  if (chosen.empty())
    chosen.push_back(rng.pick(code));
  return PrefixMap::clopen(n, chosen);
}

EPPoint random_point_in(PrefixMap const& e, Rng& rng)
{
  if (e.empty())
    throw Error(ErrorKind::zero_idempotent, "no points in the zero clopen");
  int const n = e.alphabet();
  auto random_word = [&](std::size_t len) {
    Word w;
    for (std::size_t i = 0; i < len; ++i)
      w.push_back(static_cast<char>('1' + rng.below(static_cast<std::size_t>(n))));
    return w;
  };
  Word const w = rng.pick(e.pairs()).first;
  Word const tail = random_word(rng.below(4));
  Word const period = random_word(1 + rng.below(3));
  return EPPoint(w + tail, period);
}

} // namespace tarski::cuntz
