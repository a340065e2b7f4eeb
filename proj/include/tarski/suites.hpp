#ifndef TARSKI_SUITES_HPP
#define TARSKI_SUITES_HPP

// Seeded property suites. Each suite reports, per invariant, how many
// cases were examined and how many failed, plus the first counterexample.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace tarski::suites {

struct Invariant {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string counterexample;

  void record(bool ok, std::string const& detail = {});
};

struct Report {
  std::string suite;
  std::string instance;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<Invariant> invariants;

  /// Adds the invariant on first use.
  Invariant& get(std::string const& name);
  /// Throws Error(invalid_argument) for an unrecorded invariant.
  Invariant const& at(std::string const& name) const;
  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct Options {
  std::string instance; ///< I<n>, prod:..., groupoid:..., cn:<n>; empty picks the suite default
  std::uint64_t seed = 42;
  std::size_t samples = 100;
};

std::vector<std::string> const& names();

/// Throws Error(unknown_suite) for names outside names().
Report run(std::string const& name, Options const& options);

} // namespace tarski::suites

#endif
