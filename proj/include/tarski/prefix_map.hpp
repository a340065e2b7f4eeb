#ifndef TARSKI_PREFIX_MAP_HPP
#define TARSKI_PREFIX_MAP_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tarski/core.hpp"

namespace tarski {

/// A finite word over the alphabet {'1', ..., '0' + n}. The empty word is
/// written `e` in text.
using Word = std::string;

bool is_prefix(std::string_view prefix, std::string_view word);
/// Neither word is a prefix of the other.
bool incomparable(std::string_view a, std::string_view b);
std::string word_text(std::string_view w);

/// An element of the Cuntz inverse monoid C_n: a finite set of pairs
/// (d_i -> r_i) acting by d_i w |-> r_i w on infinite words, with
/// prefix-free domain and range words.
///
/// Always held in normal form: no complete sibling family {(d a, r a) : a}
/// and pairs sorted by domain word. Two maps denote the same partial
/// homeomorphism iff their normal forms are equal.
class PrefixMap {
public:
  using Pair = std::pair<Word, Word>;

  PrefixMap() = default;
  /// Validates letters and prefix-freeness, then normalizes. Throws
  /// Error(invalid_argument).
  PrefixMap(int n, std::vector<Pair> pairs);

  static PrefixMap zero(int n) { return PrefixMap(n, {}); }
  static PrefixMap identity(int n) { return PrefixMap(n, {{"", ""}}); }
  /// Identity on the cylinders [w] for w in words (the words may overlap).
  static PrefixMap clopen(int n, std::vector<Word> const& words);
  static PrefixMap cylinder(int n, Word const& w) { return clopen(n, {w}); }

  /// Grammar `{d1->r1, ...}` with `e` for the empty word, or the clopen
  /// shorthand `[w1, w2, ...]`. Throws Error(parse_error).
  static PrefixMap parse(int n, std::string_view text);

  int alphabet() const { return n_; }
  std::vector<Pair> const& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::size_t max_word_length() const;

  bool is_idempotent() const;
  /// Domain words of an idempotent: its cylinders in normal form.
  std::vector<Word> cylinders() const;
  std::size_t cylinder_count() const { return pairs_.size(); }

  /// (*this * rhs)(x) = (*this)(rhs(x))
  PrefixMap operator*(PrefixMap const& rhs) const;
  PrefixMap inverse() const;
  /// Largest map below both: the union of the common cylinders on which
  /// the two agree.
  PrefixMap meet(PrefixMap const& rhs) const;
  /// Union of graphs; Error(incompatible) when the union is not a prefix map.
  PrefixMap join(PrefixMap const& rhs) const;
  /// Complement in the clopen algebra; Error(not_clopen) on non-idempotents.
  PrefixMap complement() const;

  std::string to_string() const;
  /// `[w1,w2]` for idempotents, otherwise to_string().
  std::string to_clopen_string() const;

  friend bool operator==(PrefixMap const&, PrefixMap const&) = default;
  friend auto operator<=>(PrefixMap const&, PrefixMap const&) = default;

private:
  void normalize();

  int n_ = 2;
  std::vector<Pair> pairs_;
};

/// The instance contract for C_n.
class CuntzMonoid {
public:
  using element_type = PrefixMap;

  explicit CuntzMonoid(int n);

  int alphabet() const { return n_; }
  PrefixMap multiply(PrefixMap const& s, PrefixMap const& t) const { return s * t; }
  PrefixMap inverse(PrefixMap const& s) const { return s.inverse(); }
  PrefixMap zero() const { return PrefixMap::zero(n_); }
  PrefixMap one() const { return PrefixMap::identity(n_); }
  bool equals(PrefixMap const& s, PrefixMap const& t) const { return s == t; }
  bool is_idempotent(PrefixMap const& s) const { return s.is_idempotent(); }
  PrefixMap complement(PrefixMap const& e) const { return e.complement(); }
  PrefixMap raw_meet(PrefixMap const& s, PrefixMap const& t) const { return s.meet(t); }
  PrefixMap raw_join(PrefixMap const& s, PrefixMap const& t) const { return s.join(t); }

  PrefixMap parse(std::string_view text) const { return PrefixMap::parse(n_, text); }

private:
  int n_;
};

static_assert(BooleanInverseMonoid<CuntzMonoid>);

/// The eventually periodic infinite word u v v v ... . Canonical form:
/// v primitive and u as short as possible.
class EPPoint {
public:
  EPPoint() = default;
  /// Throws Error(invalid_argument) for an empty period.
  EPPoint(Word prefix, Word period);

  /// Grammar `u|v` (u may be empty); Throws Error(parse_error).
  static EPPoint parse(int n, std::string_view text);

  Word const& prefix() const { return prefix_; }
  Word const& period() const { return period_; }
  /// First k letters.
  Word head(std::size_t k) const;
  char letter(std::size_t i) const;
  /// The point with the first k letters removed.
  EPPoint drop(std::size_t k) const;
  /// w followed by this point.
  EPPoint prepend(Word const& w) const;
  bool in_cylinder(std::string_view w) const { return is_prefix(w, head(w.size())); }

  std::string to_string() const;

  friend bool operator==(EPPoint const&, EPPoint const&) = default;
  friend auto operator<=>(EPPoint const&, EPPoint const&) = default;

private:
  Word prefix_;
  Word period_;
};

} // namespace tarski

template<>
struct std::hash<tarski::PrefixMap> {
  std::size_t operator()(tarski::PrefixMap const& p) const noexcept
  {
    return std::hash<std::string>{}(p.to_string());
  }
};

#endif
