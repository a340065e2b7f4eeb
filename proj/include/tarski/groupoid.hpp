#ifndef TARSKI_GROUPOID_HPP
#define TARSKI_GROUPOID_HPP

#include <cstddef>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tarski {

/// A finite discrete groupoid. Objects and arrows are addressed by index;
/// indices follow the lexicographic order of their ids. An arrow a goes
/// from src(a) to dst(a), and compose(a, b) = a o b is defined iff
/// dst(b) == src(a).
class FiniteGroupoid {
public:
  struct ArrowSpec {
    std::string id;
    std::string src;
    std::string dst;
  };

  struct Spec {
    std::vector<std::string> objects;
    std::vector<ArrowSpec> arrows;
    /// {a, b, c} meaning a o b = c
    std::vector<std::array<std::string, 3>> compose;
    std::vector<std::pair<std::string, std::string>> inverse;
    /// optional {object, identity arrow}
    std::vector<std::pair<std::string, std::string>> identities;
  };

  /// Validates eagerly: composition table complete on composable pairs,
  /// associativity on all composable triples, identity and inverse laws.
  /// Throws Error(invalid_groupoid).
  explicit FiniteGroupoid(Spec spec);

  static FiniteGroupoid from_json(nlohmann::json const& j);
  static FiniteGroupoid from_file(std::string const& path);
  /// Canonical form: everything lexicographic by id.
  nlohmann::json to_json() const;

  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  std::string const& object_id(std::size_t o) const { return objects_[o]; }
  std::string const& arrow_id(std::size_t a) const { return arrows_[a].id; }
  std::size_t src(std::size_t a) const { return arrows_[a].src; }
  std::size_t dst(std::size_t a) const { return arrows_[a].dst; }
  std::optional<std::size_t> compose(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t identity(std::size_t object) const { return identity_[object]; }
  bool is_identity(std::size_t a) const { return identity_[arrows_[a].src] == a; }
  std::optional<std::size_t> find_arrow(std::string const& id) const;

  friend bool operator==(FiniteGroupoid const&, FiniteGroupoid const&) = default;

private:
  struct Arrow {
    std::string id;
    std::size_t src;
    std::size_t dst;
    friend bool operator==(Arrow const&, Arrow const&) = default;
  };

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<std::int32_t> compose_; // arrow_count^2, -1 when not composable
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> identity_;
};

namespace groupoids {

/// Pair groupoid on k objects: one arrow (i, j) for each ordered pair.
FiniteGroupoid pair(std::size_t k);
/// Cyclic group Z/k as a one-object groupoid.
FiniteGroupoid cyclic_group(std::size_t k);
/// k objects with identity arrows only.
FiniteGroupoid discrete(std::size_t k);
/// Z/order x pair(k): the general connected groupoid with cyclic isotropy.
FiniteGroupoid cyclic_pair(std::size_t order, std::size_t k, std::string const& tag = "");
FiniteGroupoid disjoint_union(std::vector<FiniteGroupoid> const& parts);
/// Random groupoid with at most max_arrows arrows, assembled from
/// connected components with cyclic isotropy and relabelled arrow ids.
FiniteGroupoid random(std::uint64_t seed, std::size_t max_arrows);

} // namespace groupoids

} // namespace tarski

#endif
