#include "tarski/partial_bijection.hpp"

#include <algorithm>
#include <charconv>

#include "tarski/error.hpp"
#include "tarski/text.hpp"

namespace tarski {

PartialBijection::PartialBijection(std::size_t degree) : image_(degree, 0)
{
  if (degree > max_degree)
    throw Error(ErrorKind::too_large, "partial bijection degree above " + std::to_string(max_degree));
}

PartialBijection::PartialBijection(std::size_t degree,
                                   std::vector<std::pair<point, point>> const& pairs)
  : PartialBijection(degree)
{
  std::vector<bool> hit(degree + 1, false);
  for (auto [i, j] : pairs) {
    if (i < 1 || i > degree || j < 1 || j > degree)
      throw Error(ErrorKind::invalid_argument,
                  "point out of range 1.." + std::to_string(degree));
    if (image_[i - 1] != 0)
      throw Error(ErrorKind::invalid_argument, "point " + std::to_string(i) + " has two images");
    if (hit[j])
      throw Error(ErrorKind::invalid_argument, "point " + std::to_string(j) + " hit twice");
    image_[i - 1] = j;
    hit[j] = true;
  }
}

PartialBijection PartialBijection::identity(std::size_t degree)
{
  PartialBijection p(degree);
  for (std::size_t i = 0; i < degree; ++i)
    p.image_[i] = static_cast<point>(i + 1);
  return p;
}

PartialBijection PartialBijection::parse(std::size_t degree, std::string_view text)
{
  std::vector<std::pair<point, point>> pairs;
  auto to_point = [&](std::string const& tok) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 1 || v > degree)
      throw Error(ErrorKind::parse_error,
                  "'" + tok + "' is not a point of 1.." + std::to_string(degree));
    return static_cast<point>(v);
  };
  for (auto const& [a, b] : text::parse_arrow_list(text))
    pairs.emplace_back(to_point(a), to_point(b));
  try {
    return PartialBijection(degree, pairs);
  } catch (Error const& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

std::optional<PartialBijection::point> PartialBijection::operator()(point i) const
{
  if (i < 1 || i > degree() || image_[i - 1] == 0)
    return std::nullopt;
  return image_[i - 1];
}

std::vector<std::pair<PartialBijection::point, PartialBijection::point>>
PartialBijection::pairs() const
{
  std::vector<std::pair<point, point>> out;
  for (std::size_t i = 0; i < degree(); ++i)
    if (image_[i] != 0)
      out.emplace_back(static_cast<point>(i + 1), image_[i]);
  return out;
}

std::size_t PartialBijection::rank() const
{
  return static_cast<std::size_t>(std::count_if(image_.begin(), image_.end(),
                                                [](point p) { return p != 0; }));
}

PartialBijection PartialBijection::operator*(PartialBijection const& rhs) const
{
  PartialBijection out(degree());
  for (std::size_t i = 0; i < rhs.degree(); ++i) {
    auto const mid = rhs.image_[i];
    if (mid != 0)
      out.image_[i] = image_[mid - 1];
  }
  return out;
}

PartialBijection PartialBijection::inverse() const
{
  PartialBijection out(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    if (image_[i] != 0)
      out.image_[image_[i] - 1] = static_cast<point>(i + 1);
  return out;
}

PartialBijection PartialBijection::meet(PartialBijection const& rhs) const
{
  PartialBijection out(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    if (image_[i] == rhs.image_[i])
      out.image_[i] = image_[i];
  return out;
}

std::optional<PartialBijection> PartialBijection::join(PartialBijection const& rhs) const
{
  PartialBijection out(*this);
  std::vector<bool> hit(degree() + 1, false);
  for (auto v : image_)
    if (v != 0)
      hit[v] = true;
  for (std::size_t i = 0; i < degree(); ++i) {
    auto const v = rhs.image_[i];
    if (v == 0)
      continue;
    if (out.image_[i] == v)
      continue;
    if (out.image_[i] != 0 || hit[v])
      return std::nullopt;
    out.image_[i] = v;
    hit[v] = true;
  }
  return out;
}

PartialBijection PartialBijection::complement() const
{
  PartialBijection out(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    if (image_[i] == 0)
      out.image_[i] = static_cast<point>(i + 1);
  return out;
}

bool PartialBijection::is_idempotent() const
{
  for (std::size_t i = 0; i < degree(); ++i)
    if (image_[i] != 0 && image_[i] != i + 1)
      return false;
  return true;
}

std::string PartialBijection::to_string() const
{
  std::string out = "{";
  bool first = true;
  for (auto [i, j] : pairs()) {
    if (!first)
      out += ",";
    first = false;
    out += std::to_string(i) + "->" + std::to_string(j);
  }
  return out + "}";
}

std::vector<PartialBijection> enumerate_partial_bijections(std::size_t n)
{
  std::vector<PartialBijection> out;
  std::vector<PartialBijection::point> image(n, 0);
  std::vector<bool> used(n + 1, false);
  // depth-first over image vectors; the result is then ordered by rank
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      std::vector<std::pair<PartialBijection::point, PartialBijection::point>> pairs;
      for (std::size_t k = 0; k < n; ++k)
        if (image[k] != 0)
          pairs.emplace_back(static_cast<PartialBijection::point>(k + 1), image[k]);
      out.emplace_back(n, pairs);
      return;
    }
    image[i] = 0;
    self(self, i + 1);
    for (std::size_t j = 1; j <= n; ++j) {
      if (used[j])
        continue;
      used[j] = true;
      image[i] = static_cast<PartialBijection::point>(j);
      self(self, i + 1);
      used[j] = false;
    }
    image[i] = 0;
  };
  rec(rec, 0);
  std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    if (a.rank() != b.rank())
      return a.rank() < b.rank();
    return a.pairs() < b.pairs();
  });
  return out;
}

} // namespace tarski
