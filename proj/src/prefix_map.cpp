#include "tarski/prefix_map.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tarski/error.hpp"
#include "tarski/text.hpp"

namespace tarski {

bool is_prefix(std::string_view prefix, std::string_view word)
{
  return prefix.size() <= word.size() && word.substr(0, prefix.size()) == prefix;
}

bool incomparable(std::string_view a, std::string_view b)
{
  return !is_prefix(a, b) && !is_prefix(b, a);
}

std::string word_text(std::string_view w)
{
  return w.empty() ? std::string("e") : std::string(w);
}

namespace {

void check_alphabet(int n)
{
  if (n < 2 || n > 9)
    throw Error(ErrorKind::invalid_argument, "alphabet size must be in 2..9");
}

void check_word(int n, std::string_view w)
{
  for (char c : w)
    if (c < '1' || c > '0' + n)
      throw Error(ErrorKind::invalid_argument,
                  "letter '" + std::string(1, c) + "' outside 1.." + std::to_string(n));
}

// lexicographic sort makes any prefix relation appear between neighbours
bool prefix_free(std::vector<Word> words)
{
  std::sort(words.begin(), words.end());
  for (std::size_t i = 1; i < words.size(); ++i)
    if (is_prefix(words[i - 1], words[i]))
      return false;
  return true;
}

Word from_token(int n, std::string const& tok)
{
  Word w = tok == "e" ? Word{} : tok;
  try {
    check_word(n, w);
  } catch (Error const& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
  return w;
}

} // namespace

PrefixMap::PrefixMap(int n, std::vector<Pair> pairs) : n_(n), pairs_(std::move(pairs))
{
  check_alphabet(n);
  std::vector<Word> doms, rans;
  for (auto const& [d, r] : pairs_) {
    check_word(n, d);
    check_word(n, r);
    doms.push_back(d);
    rans.push_back(r);
  }
  if (!prefix_free(doms))
    throw Error(ErrorKind::invalid_argument, "domain words are not prefix-free");
  if (!prefix_free(rans))
    throw Error(ErrorKind::invalid_argument, "range words are not prefix-free");
  normalize();
}

void PrefixMap::normalize()
{
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<Pair, std::size_t> family;
    for (auto const& [d, r] : pairs_)
      if (!d.empty() && !r.empty() && d.back() == r.back())
        ++family[{d.substr(0, d.size() - 1), r.substr(0, r.size() - 1)}];
    for (auto const& [parent, count] : family) {
      if (count != static_cast<std::size_t>(n_))
        continue;
      std::erase_if(pairs_, [&](Pair const& p) {
        return p.first.size() == parent.first.size() + 1 && is_prefix(parent.first, p.first)
            && p.second.size() == parent.second.size() + 1 && is_prefix(parent.second, p.second)
            && p.first.back() == p.second.back();
      });
      pairs_.push_back(parent);
      changed = true;
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
}

PrefixMap PrefixMap::clopen(int n, std::vector<Word> const& words)
{
  std::vector<Word> sorted(words);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Pair> pairs;
  for (auto const& w : sorted) {
    if (!pairs.empty() && is_prefix(pairs.back().first, w))
      continue;
    pairs.emplace_back(w, w);
  }
  return PrefixMap(n, std::move(pairs));
}

PrefixMap PrefixMap::parse(int n, std::string_view text)
{
  check_alphabet(n);
  auto const body = text::trim(text);
  try {
    if (!body.empty() && body.front() == '[') {
      std::vector<Word> words;
      for (auto const& tok : text::parse_word_list(body))
        words.push_back(from_token(n, tok));
      return clopen(n, words);
    }
    std::vector<Pair> pairs;
    for (auto const& [a, b] : text::parse_arrow_list(body))
      pairs.emplace_back(from_token(n, a), from_token(n, b));
    return PrefixMap(n, std::move(pairs));
  } catch (Error const& e) {
    if (e.kind() == ErrorKind::parse_error)
      throw;
    throw Error(ErrorKind::parse_error, e.what());
  }
}

std::size_t PrefixMap::max_word_length() const
{
  std::size_t m = 0;
  for (auto const& [d, r] : pairs_)
    m = std::max({m, d.size(), r.size()});
  return m;
}

bool PrefixMap::is_idempotent() const
{
  return std::all_of(pairs_.begin(), pairs_.end(), [](Pair const& p) { return p.first == p.second; });
}

std::vector<Word> PrefixMap::cylinders() const
{
  std::vector<Word> out;
  for (auto const& p : pairs_)
    out.push_back(p.first);
  return out;
}

PrefixMap PrefixMap::operator*(PrefixMap const& rhs) const
{
  // rhs first: (d1 -> r1) then (d2 -> r2)
  std::vector<Pair> out;
  for (auto const& [d1, r1] : rhs.pairs_)
    for (auto const& [d2, r2] : pairs_) {
      if (is_prefix(r1, d2))
        out.emplace_back(d1 + d2.substr(r1.size()), r2);
      else if (is_prefix(d2, r1))
        out.emplace_back(d1, r2 + r1.substr(d2.size()));
    }
  return PrefixMap(n_, std::move(out));
}

PrefixMap PrefixMap::inverse() const
{
  std::vector<Pair> out;
  for (auto const& [d, r] : pairs_)
    out.emplace_back(r, d);
  return PrefixMap(n_, std::move(out));
}

PrefixMap PrefixMap::meet(PrefixMap const& rhs) const
{
  std::vector<Pair> out;
  for (auto const& [d1, r1] : pairs_)
    for (auto const& [d2, r2] : rhs.pairs_) {
      if (is_prefix(d1, d2)) {
        if (r1 + d2.substr(d1.size()) == r2)
          out.emplace_back(d2, r2);
      } else if (is_prefix(d2, d1)) {
        if (r2 + d1.substr(d2.size()) == r1)
          out.emplace_back(d1, r1);
      }
    }
  return PrefixMap(n_, std::move(out));
}

PrefixMap PrefixMap::join(PrefixMap const& rhs) const
{
  std::vector<Pair> all(pairs_);
  all.insert(all.end(), rhs.pairs_.begin(), rhs.pairs_.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  // drop pairs that are restrictions of another pair
  std::vector<Pair> kept;
  for (auto const& p : all) {
    bool covered = std::any_of(all.begin(), all.end(), [&](Pair const& q) {
      return q != p && is_prefix(q.first, p.first)
          && q.second + p.first.substr(q.first.size()) == p.second;
    });
    if (!covered)
      kept.push_back(p);
  }
  std::vector<Word> doms, rans;
  for (auto const& [d, r] : kept) {
    doms.push_back(d);
    rans.push_back(r);
  }
  if (!prefix_free(doms) || !prefix_free(rans))
    throw Error(ErrorKind::incompatible, to_string() + " and " + rhs.to_string() + " have no join");
  return PrefixMap(n_, std::move(kept));
}

PrefixMap PrefixMap::complement() const
{
  if (!is_idempotent())
    throw Error(ErrorKind::not_clopen, to_string() + " is not an idempotent");
  std::vector<Pair> out;
  auto rec = [&](auto&& self, std::vector<Word> const& words, Word const& prefix) -> void {
    if (words.empty()) {
      out.emplace_back(prefix, prefix);
      return;
    }
    if (std::find(words.begin(), words.end(), Word{}) != words.end())
      return;
    for (char a = '1'; a <= '0' + n_; ++a) {
      std::vector<Word> sub;
      for (auto const& w : words)
        if (w.front() == a)
          sub.push_back(w.substr(1));
      self(self, sub, prefix + a);
    }
  };
  rec(rec, cylinders(), Word{});
  return PrefixMap(n_, std::move(out));
}

std::string PrefixMap::to_string() const
{
  std::string out = "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i != 0)
      out += ", ";
    out += word_text(pairs_[i].first) + "->" + word_text(pairs_[i].second);
  }
  return out + "}";
}

std::string PrefixMap::to_clopen_string() const
{
  if (!is_idempotent())
    return to_string();
  std::string out = "[";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i != 0)
      out += ", ";
    out += word_text(pairs_[i].first);
  }
  return out + "]";
}

CuntzMonoid::CuntzMonoid(int n) : n_(n)
{
  check_alphabet(n);
}

EPPoint::EPPoint(Word prefix, Word period) : prefix_(std::move(prefix)), period_(std::move(period))
{
  if (period_.empty())
    throw Error(ErrorKind::invalid_argument, "eventually periodic point needs a non-empty period");
  // primitive root of the period
  auto const len = period_.size();
  for (std::size_t k = 1; k <= len; ++k) {
    if (len % k != 0)
      continue;
    bool ok = true;
    for (std::size_t i = k; i < len && ok; ++i)
      ok = period_[i] == period_[i - k];
    if (ok) {
      period_.resize(k);
      break;
    }
  }
  // absorb the tail of the prefix into the period
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

EPPoint EPPoint::parse(int n, std::string_view text)
{
  check_alphabet(n);
  auto const body = text::trim(text);
  auto const bar = body.find('|');
  if (bar == std::string::npos)
    throw Error(ErrorKind::parse_error, "points are written u|v, got '" + body + "'");
  auto u = text::trim(body.substr(0, bar));
  auto v = text::trim(body.substr(bar + 1));
  if (u == "e")
    u.clear();
  if (v.empty() || v == "e")
    throw Error(ErrorKind::parse_error, "empty period in '" + body + "'");
  try {
    check_word(n, u);
    check_word(n, v);
  } catch (Error const& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
  return EPPoint(u, v);
}

char EPPoint::letter(std::size_t i) const
{
  if (i < prefix_.size())
    return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

Word EPPoint::head(std::size_t k) const
{
  Word out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    out.push_back(letter(i));
  return out;
}

EPPoint EPPoint::drop(std::size_t k) const
{
  if (k <= prefix_.size())
    return EPPoint(prefix_.substr(k), period_);
  auto const j = (k - prefix_.size()) % period_.size();
  return EPPoint(Word{}, period_.substr(j) + period_.substr(0, j));
}

EPPoint EPPoint::prepend(Word const& w) const
{
  return EPPoint(w + prefix_, period_);
}

std::string EPPoint::to_string() const
{
  return word_text(prefix_) + "|" + period_;
}

} // namespace tarski
