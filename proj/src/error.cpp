#include "tarski/error.hpp"

namespace tarski {

std::string_view to_string(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::incompatible: return "Incompatible";
  case ErrorKind::not_a_unit: return "NotAUnit";
  case ErrorKind::not_balanced: return "NotBalanced";
  case ErrorKind::not_infinitesimal: return "NotInfinitesimal";
  case ErrorKind::too_large: return "TooLarge";
  case ErrorKind::invalid_groupoid: return "InvalidGroupoid";
  case ErrorKind::not_boolean: return "NotBoolean";
  case ErrorKind::round_trip_failure: return "RoundTripFailure";
  case ErrorKind::parse_error: return "ParseError";
  case ErrorKind::not_clopen: return "NotClopen";
  case ErrorKind::point_outside_domain: return "PointOutsideDomain";
  case ErrorKind::not_involution: return "NotInvolution";
  case ErrorKind::not_below_support: return "NotBelowSupport";
  case ErrorKind::zero_idempotent: return "ZeroIdempotent";
  case ErrorKind::identity_idempotent: return "IdentityIdempotent";
  case ErrorKind::no_iso: return "NoIso";
  case ErrorKind::not_moved: return "NotMoved";
  case ErrorKind::empty_support_region: return "EmptySupportRegion";
  case ErrorKind::no_pencil: return "NoPencil";
  case ErrorKind::not_classifiable: return "NotClassifiable";
  case ErrorKind::out_of_class: return "OutOfClass";
  case ErrorKind::unknown_suite: return "UnknownSuite";
  case ErrorKind::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string const& message)
  : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{}

} // namespace tarski
