#include "tarski/finite_monoid.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <unordered_map>

#include "tarski/error.hpp"
#include "tarski/text.hpp"

namespace tarski {

namespace {

using element = FiniteMonoid::element_type;

constexpr std::size_t tabulate_limit = 1600;

class SymmetricModel final : public FiniteMonoid::Model {
public:
  explicit SymmetricModel(std::size_t n) : n_(n), carrier_(enumerate_partial_bijections(n))
  {
    for (std::size_t i = 0; i < carrier_.size(); ++i)
      index_.emplace(carrier_[i], static_cast<element>(i));
  }

  std::size_t size() const override { return carrier_.size(); }
  element multiply(element a, element b) const override { return find(carrier_[a] * carrier_[b]); }
  element inverse(element a) const override { return find(carrier_[a].inverse()); }
  element meet(element a, element b) const override { return find(carrier_[a].meet(carrier_[b])); }
  std::optional<element> join(element a, element b) const override
  {
    auto j = carrier_[a].join(carrier_[b]);
    if (!j)
      return std::nullopt;
    return find(*j);
  }
  element complement(element e) const override { return find(carrier_[e].complement()); }
  element zero() const override { return find(PartialBijection(n_)); }
  element one() const override { return find(PartialBijection::identity(n_)); }
  std::string label(element a) const override { return carrier_[a].to_string(); }
  std::optional<element> parse(std::string_view text) const override
  {
    return find(PartialBijection::parse(n_, text));
  }

private:
  element find(PartialBijection const& p) const { return index_.at(p); }

  std::size_t n_;
  std::vector<PartialBijection> carrier_;
  std::unordered_map<PartialBijection, element> index_;
};

} // namespace

/// Local bisections stored as arrow bitmasks.
class BisectionModel final : public FiniteMonoid::Model {
public:
  explicit BisectionModel(FiniteGroupoid g) : g_(std::move(g))
  {
    if (g_.arrow_count() > max_bisection_arrows)
      throw Error(ErrorKind::too_large, "local bisection monoid capped at "
                                          + std::to_string(max_bisection_arrows) + " arrows");
    for (std::size_t o = 0; o < g_.object_count(); ++o)
      identities_ |= bit(g_.identity(o));
    enumerate();
    std::sort(carrier_.begin(), carrier_.end(), [](std::uint64_t a, std::uint64_t b) {
      auto const pa = std::popcount(a), pb = std::popcount(b);
      if (pa != pb)
        return pa < pb;
      // lexicographic on the sorted arrow-index list
      while (a != 0 && b != 0) {
        auto const la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb)
          return la < lb;
        a &= a - 1;
        b &= b - 1;
      }
      return false;
    });
    for (std::size_t i = 0; i < carrier_.size(); ++i)
      index_.emplace(carrier_[i], static_cast<element>(i));
  }

  std::size_t size() const override { return carrier_.size(); }

  element multiply(element a, element b) const override
  {
    std::uint64_t out = 0;
    for_each(carrier_[a], [&](std::size_t x) {
      for_each(carrier_[b], [&](std::size_t y) {
        if (auto c = g_.compose(x, y))
          out |= bit(*c);
      });
    });
    return index_.at(out);
  }

  element inverse(element a) const override
  {
    std::uint64_t out = 0;
    for_each(carrier_[a], [&](std::size_t x) { out |= bit(g_.inverse(x)); });
    return index_.at(out);
  }

  element meet(element a, element b) const override { return index_.at(carrier_[a] & carrier_[b]); }

  std::optional<element> join(element a, element b) const override
  {
    auto it = index_.find(carrier_[a] | carrier_[b]);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  element complement(element e) const override { return index_.at(identities_ & ~carrier_[e]); }
  element zero() const override { return index_.at(0); }
  element one() const override { return index_.at(identities_); }

  std::string label(element a) const override
  {
    std::string out = "{";
    bool first = true;
    for_each(carrier_[a], [&](std::size_t x) {
      if (!first)
        out += ",";
      first = false;
      out += g_.arrow_id(x);
    });
    return out + "}";
  }

  std::optional<element> parse(std::string_view text) const override
  {
    std::uint64_t mask = 0;
    for (auto const& id : text::parse_word_list(text)) {
      auto a = g_.find_arrow(id);
      if (!a)
        throw Error(ErrorKind::parse_error, "unknown arrow '" + id + "'");
      mask |= bit(*a);
    }
    auto it = index_.find(mask);
    if (it == index_.end())
      throw Error(ErrorKind::parse_error, "'" + std::string(text) + "' is not a local bisection");
    return it->second;
  }

  std::vector<std::size_t> arrows(element a) const
  {
    std::vector<std::size_t> out;
    for_each(carrier_[a], [&](std::size_t x) { out.push_back(x); });
    return out;
  }

private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  template<typename F>
  static void for_each(std::uint64_t mask, F&& f)
  {
    while (mask != 0) {
      f(static_cast<std::size_t>(std::countr_zero(mask)));
      mask &= mask - 1;
    }
  }

  // a local bisection picks, for each source object, at most one arrow,
  // with all chosen targets distinct
  void enumerate()
  {
    std::vector<std::vector<std::size_t>> by_src(g_.object_count());
    for (std::size_t a = 0; a < g_.arrow_count(); ++a)
      by_src[g_.src(a)].push_back(a);
    std::vector<bool> used(g_.object_count(), false);
    auto rec = [&](auto&& self, std::size_t obj, std::uint64_t mask) -> void {
      if (obj == g_.object_count()) {
        carrier_.push_back(mask);
        return;
      }
      self(self, obj + 1, mask);
      for (auto a : by_src[obj]) {
        if (used[g_.dst(a)])
          continue;
        used[g_.dst(a)] = true;
        self(self, obj + 1, mask | bit(a));
        used[g_.dst(a)] = false;
      }
    };
    rec(rec, 0, 0);
  }

  FiniteGroupoid g_;
  std::uint64_t identities_ = 0;
  std::vector<std::uint64_t> carrier_;
  std::unordered_map<std::uint64_t, element> index_;
};

namespace {

class ProductModel final : public FiniteMonoid::Model {
public:
  ProductModel(FiniteMonoid s, FiniteMonoid t) : s_(std::move(s)), t_(std::move(t)) {}

  std::size_t size() const override { return s_.size() * t_.size(); }
  element multiply(element a, element b) const override
  {
    return pack(s_.multiply(left(a), left(b)), t_.multiply(right(a), right(b)));
  }
  element inverse(element a) const override
  {
    return pack(s_.inverse(left(a)), t_.inverse(right(a)));
  }
  element meet(element a, element b) const override
  {
    return pack(s_.raw_meet(left(a), left(b)), t_.raw_meet(right(a), right(b)));
  }
  std::optional<element> join(element a, element b) const override
  {
    if (!compatible(s_, left(a), left(b)) || !compatible(t_, right(a), right(b)))
      return std::nullopt;
    return pack(s_.raw_join(left(a), left(b)), t_.raw_join(right(a), right(b)));
  }
  element complement(element e) const override
  {
    return pack(s_.complement(left(e)), t_.complement(right(e)));
  }
  element zero() const override { return pack(s_.zero(), t_.zero()); }
  element one() const override { return pack(s_.one(), t_.one()); }
  std::string label(element a) const override
  {
    return "(" + s_.label(left(a)) + "," + t_.label(right(a)) + ")";
  }
  std::optional<element> parse(std::string_view text) const override
  {
    auto const body = text::trim(text);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
      throw Error(ErrorKind::parse_error, "product elements are written (left,right)");
    // split at the top-level comma
    int depth = 0;
    for (std::size_t i = 1; i + 1 < body.size(); ++i) {
      char const c = body[i];
      if (c == '{' || c == '[' || c == '(')
        ++depth;
      else if (c == '}' || c == ']' || c == ')')
        --depth;
      else if (c == ',' && depth == 0)
        return pack(s_.parse(body.substr(1, i - 1)), t_.parse(body.substr(i + 1, body.size() - i - 2)));
    }
    throw Error(ErrorKind::parse_error, "product elements are written (left,right)");
  }

private:
  element left(element a) const { return static_cast<element>(a / t_.size()); }
  element right(element a) const { return static_cast<element>(a % t_.size()); }
  element pack(element a, element b) const { return static_cast<element>(a * t_.size() + b); }

  FiniteMonoid s_;
  FiniteMonoid t_;
};

} // namespace

FiniteMonoid::FiniteMonoid(std::string name, std::shared_ptr<Model const> model)
  : name_(std::move(name)), model_(std::move(model)), size_(model_->size()),
    zero_(model_->zero()), one_(model_->one())
{
  if (size_ <= tabulate_limit) {
    table_.resize(size_ * size_);
    for (element a = 0; a < size_; ++a)
      for (element b = 0; b < size_; ++b)
        table_[a * size_ + b] = model_->multiply(a, b);
  }
  inverse_.resize(size_);
  domain_.resize(size_);
  range_.resize(size_);
  idempotent_.resize(size_);
  for (element a = 0; a < size_; ++a) {
    inverse_[a] = model_->inverse(a);
    idempotent_[a] = multiply(a, a) == a;
    if (idempotent_[a])
      idempotents_.push_back(a);
  }
  for (element a = 0; a < size_; ++a) {
    domain_[a] = multiply(inverse_[a], a);
    range_[a] = multiply(a, inverse_[a]);
  }
  for (auto e : idempotents_) {
    if (e == zero_)
      continue;
    bool minimal = true;
    for (auto f : idempotents_)
      if (f != zero_ && f != e && multiply(f, e) == f) {
        minimal = false;
        break;
      }
    if (minimal)
      idempotent_atoms_.push_back(e);
  }
  for (element a = 0; a < size_; ++a)
    if (std::binary_search(idempotent_atoms_.begin(), idempotent_atoms_.end(), domain_[a]))
      atoms_.push_back(a);
}

FiniteMonoid::element_type FiniteMonoid::multiply(element_type a, element_type b) const
{
  if (!table_.empty())
    return table_[a * size_ + b];
  return model_->multiply(a, b);
}

FiniteMonoid::element_type FiniteMonoid::complement(element_type e) const
{
  if (!idempotent_[e])
    throw Error(ErrorKind::invalid_argument, "complement of a non-idempotent " + label(e));
  return model_->complement(e);
}

FiniteMonoid::element_type FiniteMonoid::raw_join(element_type a, element_type b) const
{
  auto j = model_->join(a, b);
  if (!j)
    throw Error(ErrorKind::incompatible, label(a) + " and " + label(b) + " have no join");
  return *j;
}

std::vector<FiniteMonoid::element_type> FiniteMonoid::atoms_below(element_type s) const
{
  std::vector<element_type> out;
  for (auto a : atoms_)
    if (multiply(s, domain_[a]) == a)
      out.push_back(a);
  return out;
}

FiniteMonoid::element_type FiniteMonoid::parse(std::string_view text) const
{
  auto e = model_->parse(text);
  if (!e)
    throw Error(ErrorKind::parse_error, "'" + std::string(text) + "' is not an element of " + name_);
  return *e;
}

std::vector<FiniteMonoid::element_type> FiniteMonoid::elements() const
{
  std::vector<element_type> out(size_);
  for (element_type a = 0; a < size_; ++a)
    out[a] = a;
  return out;
}

FiniteMonoid symmetric_inverse_monoid(std::size_t n)
{
  if (n < 1)
    throw Error(ErrorKind::invalid_argument, "I_n needs n >= 1");
  if (n > max_symmetric_degree)
    throw Error(ErrorKind::too_large,
                "I_n is capped at n <= " + std::to_string(max_symmetric_degree));
  return FiniteMonoid("I" + std::to_string(n), std::make_shared<SymmetricModel>(n));
}

FiniteMonoid product(FiniteMonoid const& s, FiniteMonoid const& t)
{
  if (s.size() * t.size() > 200000)
    throw Error(ErrorKind::too_large, "product carrier too large to enumerate");
  return FiniteMonoid(s.name() + "x" + t.name(), std::make_shared<ProductModel>(s, t));
}

FiniteMonoid local_bisection_monoid(FiniteGroupoid const& g, std::string name)
{
  return FiniteMonoid(std::move(name), std::make_shared<BisectionModel>(g));
}

std::vector<std::size_t> bisection_arrows(FiniteMonoid const& m, FiniteMonoid::element_type a)
{
  auto const* model = dynamic_cast<BisectionModel const*>(&m.model());
  if (model == nullptr)
    return {};
  return model->arrows(a);
}

namespace {

std::size_t parse_size(std::string_view text, std::string_view what)
{
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorKind::parse_error, "bad " + std::string(what) + " '" + std::string(text) + "'");
  return v;
}

FiniteMonoid symmetric_from_token(std::string_view tok)
{
  if (tok.size() < 2 || tok.front() != 'I')
    throw Error(ErrorKind::parse_error, "expected I<n>, got '" + std::string(tok) + "'");
  return symmetric_inverse_monoid(parse_size(tok.substr(1), "degree"));
}

FiniteGroupoid groupoid_from_token(std::string_view tok)
{
  auto builtin = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (tok.substr(0, prefix.size()) != prefix)
      return std::nullopt;
    return parse_size(tok.substr(prefix.size()), "size");
  };
  if (auto k = builtin("pair:"))
    return groupoids::pair(*k);
  if (auto k = builtin("cyclic:"))
    return groupoids::cyclic_group(*k);
  if (auto k = builtin("discrete:"))
    return groupoids::discrete(*k);
  return FiniteGroupoid::from_file(std::string(tok));
}

} // namespace

FiniteMonoid finite_instance_from_spec(std::string_view spec)
{
  if (spec.substr(0, 5) == "prod:") {
    auto rest = spec.substr(5);
    std::optional<FiniteMonoid> acc;
    while (!rest.empty()) {
      auto const cut = rest.find('x');
      auto const tok = rest.substr(0, cut);
      auto factor = symmetric_from_token(tok);
      acc = acc ? product(*acc, factor) : factor;
      rest = cut == std::string_view::npos ? std::string_view{} : rest.substr(cut + 1);
    }
    if (!acc)
      throw Error(ErrorKind::parse_error, "empty product");
    return *acc;
  }
  if (spec.substr(0, 9) == "groupoid:")
    return local_bisection_monoid(groupoid_from_token(spec.substr(9)),
                                  "B(" + std::string(spec.substr(9)) + ")");
  return symmetric_from_token(spec);
}

} // namespace tarski
