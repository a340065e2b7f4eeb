#ifndef TARSKI_ERROR_HPP
#define TARSKI_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tarski {

enum class ErrorKind {
  incompatible,
  not_a_unit,
  not_balanced,
  not_infinitesimal,
  too_large,
  invalid_groupoid,
  not_boolean,
  round_trip_failure,
  parse_error,
  not_clopen,
  point_outside_domain,
  not_involution,
  not_below_support,
  zero_idempotent,
  identity_idempotent,
  no_iso,
  not_moved,
  empty_support_region,
  no_pencil,
  not_classifiable,
  out_of_class,
  unknown_suite,
  invalid_argument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string const& message);

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace tarski

#endif
