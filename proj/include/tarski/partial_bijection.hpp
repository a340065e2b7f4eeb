#ifndef TARSKI_PARTIAL_BIJECTION_HPP
#define TARSKI_PARTIAL_BIJECTION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tarski {

/// A finite injective partial map on {1..degree}. Points are 1-based.
class PartialBijection {
public:
  using point = std::uint8_t;
  static constexpr std::size_t max_degree = 32;

  PartialBijection() = default;
  explicit PartialBijection(std::size_t degree);
  PartialBijection(std::size_t degree, std::vector<std::pair<point, point>> const& pairs);

  static PartialBijection identity(std::size_t degree);
  static PartialBijection parse(std::size_t degree, std::string_view text);

  std::size_t degree() const { return image_.size(); }
  std::optional<point> operator()(point i) const;
  std::vector<std::pair<point, point>> pairs() const;
  std::size_t rank() const;

  /// (*this * rhs)(x) = (*this)(rhs(x))
  PartialBijection operator*(PartialBijection const& rhs) const;
  PartialBijection inverse() const;
  PartialBijection meet(PartialBijection const& rhs) const;
  /// Graph union; std::nullopt when the union is not injective or not a function.
  std::optional<PartialBijection> join(PartialBijection const& rhs) const;
  /// Identity on the points outside the domain.
  PartialBijection complement() const;
  bool is_idempotent() const;

  std::string to_string() const;
  std::vector<point> const& image() const { return image_; }

  friend bool operator==(PartialBijection const&, PartialBijection const&) = default;
  friend auto operator<=>(PartialBijection const&, PartialBijection const&) = default;

private:
  // image_[i-1] == 0 means i is outside the domain
  std::vector<point> image_;
};

/// All partial bijections of {1..n} in a fixed canonical order (by rank,
/// then lexicographically by image vector).
std::vector<PartialBijection> enumerate_partial_bijections(std::size_t n);

} // namespace tarski

template<>
struct std::hash<tarski::PartialBijection> {
  std::size_t operator()(tarski::PartialBijection const& p) const noexcept
  {
    auto const& v = p.image();
    return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<char const*>(v.data()), v.size()));
  }
};

#endif
