#ifndef TARSKI_RANDOM_HPP
#define TARSKI_RANDOM_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace tarski {

/// Seeded generator with platform-stable draws (mt19937_64 is fully
/// specified; the bounded draw avoids the implementation-defined
/// standard distributions).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish in [0, bound); bound must be positive.
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }

  bool coin() { return (engine_() >> 17) & 1u; }

  template<typename T>
  void shuffle(std::vector<T>& v)
  {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

  template<typename T>
  T const& pick(std::vector<T> const& v)
  {
    return v[below(v.size())];
  }

private:
  std::mt19937_64 engine_;
};

} // namespace tarski

#endif
