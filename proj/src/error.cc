#include "cnfgraph/error.h"

namespace cnfgraph {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kClauseTooLong: return "ClauseTooLong";
    case ErrorCode::kVariableOutOfRange: return "VariableOutOfRange";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kModelInvalid: return "ModelInvalid";
    case ErrorCode::kNotNontrivial: return "NotNontrivial";
    case ErrorCode::kUnitClausePresent: return "UnitClausePresent";
    case ErrorCode::kMultiEdgePresent: return "MultiEdgePresent";
    case ErrorCode::kEdgeAbsent: return "EdgeAbsent";
    case ErrorCode::kEdgeInTriangle: return "EdgeInTriangle";
    case ErrorCode::kHostTooLarge: return "HostTooLarge";
    case ErrorCode::kEdgeAbsentInSupport: return "EdgeAbsentInSupport";
    case ErrorCode::kVariableCollision: return "VariableCollision";
    case ErrorCode::kDegreeNotTwo: return "DegreeNotTwo";
    case ErrorCode::kSmoothingCreatesMultiEdge: return "SmoothingCreatesMultiEdge";
    case ErrorCode::kNotASubgraph: return "NotASubgraph";
    case ErrorCode::kInternalVerificationFailed: return "InternalVerificationFailed";
    case ErrorCode::kTooManyEdges: return "TooManyEdges";
    case ErrorCode::kUnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& message,
                           std::optional<std::size_t> line) {
  std::string out(error_code_name(code));
  if (line) out += " (line " + std::to_string(*line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(format_message(code, message, line)),
      code_(code),
      line_(line) {}

}  // namespace cnfgraph
