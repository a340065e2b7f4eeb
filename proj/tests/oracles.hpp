#ifndef TARSKI_TESTS_ORACLES_HPP
#define TARSKI_TESTS_ORACLES_HPP

// Reference computations that never call into the library's algebra: they
// see elements only through their raw pair tables.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tarski/groupoid.hpp"
#include "tarski/prefix_map.hpp"

namespace oracle {

inline std::size_t binomial(std::size_t n, std::size_t k)
{
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

inline std::size_t factorial(std::size_t n)
{
  return n <= 1 ? 1 : n * factorial(n - 1);
}

/// Number of injective partial maps on n points.
inline std::size_t partial_bijection_count(std::size_t n)
{
  std::size_t total = 0;
  for (std::size_t k = 0; k <= n; ++k)
    total += binomial(n, k) * binomial(n, k) * factorial(k);
  return total;
}

using Pairs = std::vector<std::pair<std::string, std::string>>;

/// Action of a pair table on a finite word long enough to be decided.
inline std::optional<std::string> act(Pairs const& pairs, std::string const& w)
{
  for (auto const& [d, r] : pairs)
    if (w.size() >= d.size() && w.compare(0, d.size(), d) == 0)
      return r + w.substr(d.size());
  return std::nullopt;
}

inline std::vector<std::string> all_words(int n, std::size_t length)
{
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::string> next;
    for (auto const& w : out)
      for (int a = 1; a <= n; ++a)
        next.push_back(w + char('0' + a));
    out = std::move(next);
  }
  return out;
}

/// Same partial map on every word of the given length.
inline bool same_action(int n, Pairs const& a, Pairs const& b, std::size_t length)
{
  for (auto const& w : all_words(n, length))
    if (act(a, w) != act(b, w))
      return false;
  return true;
}

/// No complete sibling family {(u c, v c) : c} survives in the table.
inline bool has_no_sibling_family(int n, Pairs const& pairs)
{
  std::map<std::pair<std::string, std::string>, int> families;
  for (auto const& [d, r] : pairs)
    if (!d.empty() && !r.empty() && d.back() == r.back())
      ++families[{d.substr(0, d.size() - 1), r.substr(0, r.size() - 1)}];
  return std::none_of(families.begin(), families.end(), [&](auto const& f) { return f.second == n; });
}

/// Words w of the given length with s the identity on all of [w].
inline std::set<std::string> fixed_cylinders(int n, Pairs const& pairs, std::size_t length)
{
  std::set<std::string> out;
  for (auto const& w : all_words(n, length)) {
    bool fixed = true;
    for (auto const& z : all_words(n, 2)) {
      auto const image = act(pairs, w + z);
      fixed = fixed && image && *image == w + z;
    }
    if (fixed)
      out.insert(w);
  }
  return out;
}

/// Words of the given length inside the clopen.
inline std::set<std::string> words_in(int n, Pairs const& clopen, std::size_t length)
{
  std::set<std::string> out;
  for (auto const& w : all_words(n, length))
    if (act(clopen, w))
      out.insert(w);
  return out;
}

/// Every size of a prefix code with words of length <= depth whose
/// cylinders partition the clopen (given as its words of length depth).
inline std::set<std::size_t> partition_sizes(int n, std::set<std::string> const& inside, std::size_t depth,
                                             std::string const& node = "")
{
  std::size_t covered = 0, total = 0;
  for (auto const& w : all_words(n, depth - node.size())) {
    ++total;
    covered += inside.count(node + w);
  }
  if (covered == 0)
    return {0};
  std::set<std::size_t> out;
  if (covered == total)
    out.insert(1);
  if (node.size() == depth)
    return out;
  std::set<std::size_t> sums{0};
  for (int a = 1; a <= n; ++a) {
    auto const child = partition_sizes(n, inside, depth, node + char('0' + a));
    std::set<std::size_t> next;
    for (auto x : sums)
      for (auto y : child)
        next.insert(x + y);
    sums = std::move(next);
  }
  out.insert(sums.begin(), sums.end());
  return out;
}

/// Some x with words of length <= depth has d(x) = e and r(x) = f.
inline bool iso_exists_up_to(int n, Pairs const& e, Pairs const& f, std::size_t depth)
{
  auto const a = partition_sizes(n, words_in(n, e, depth), depth);
  auto const b = partition_sizes(n, words_in(n, f, depth), depth);
  return std::any_of(a.begin(), a.end(), [&](std::size_t k) { return k > 0 && b.count(k); });
}

/// Number of local bisections: arrow sets with injective source and target.
inline std::size_t bisection_count(tarski::FiniteGroupoid const& g)
{
  std::size_t const m = g.arrow_count();
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::set<std::size_t> srcs, dsts;
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      if (mask >> a & 1u)
        ok = srcs.insert(g.src(a)).second && dsts.insert(g.dst(a)).second;
    count += ok;
  }
  return count;
}

/// Connected components of the object graph.
inline std::size_t orbit_count(tarski::FiniteGroupoid const& g)
{
  std::vector<std::size_t> label(g.object_count());
  for (std::size_t i = 0; i < label.size(); ++i)
    label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
      auto const lo = std::min(label[g.src(a)], label[g.dst(a)]);
      for (auto x : {g.src(a), g.dst(a)})
        if (label[x] != lo) {
          label[x] = lo;
          changed = true;
        }
    }
  }
  return std::set<std::size_t>(label.begin(), label.end()).size();
}

} // namespace oracle

#endif
