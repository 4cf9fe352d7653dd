#include "pspace/error.hpp"

namespace pspace {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::duplicate_label: return "DuplicateLabel";
    case ErrorCode::antisymmetry_violation: return "AntisymmetryViolation";
    case ErrorCode::unknown_label: return "UnknownLabel";
    case ErrorCode::empty_subset: return "EmptySubset";
    case ErrorCode::empty_poset: return "EmptyPoset";
    case ErrorCode::size_limit_exceeded: return "SizeLimitExceeded";
    case ErrorCode::invalid_topology: return "InvalidTopology";
    case ErrorCode::not_t0: return "NotT0";
    case ErrorCode::base_mismatch: return "BaseMismatch";
    case ErrorCode::kind_mismatch: return "KindMismatch";
    case ErrorCode::not_monotone: return "NotMonotone";
    case ErrorCode::not_directed: return "NotDirected";
    case ErrorCode::meet_missing: return "MeetMissing";
    case ErrorCode::join_missing: return "JoinMissing";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::unbound_variable: return "UnboundVariable";
    case ErrorCode::unknown_op: return "UnknownOp";
    case ErrorCode::iso_failure: return "IsoFailure";
    case ErrorCode::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace pspace
