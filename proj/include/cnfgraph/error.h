#ifndef CNFGRAPH_ERROR_H_
#define CNFGRAPH_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cnfgraph {

enum class ErrorCode {
  kParseError,
  kClauseTooLong,
  kVariableOutOfRange,
  kInvalidArgument,
  kPreconditionViolated,
  kModelInvalid,
  kNotNontrivial,
  kUnitClausePresent,
  kMultiEdgePresent,
  kEdgeAbsent,
  kEdgeInTriangle,
  kHostTooLarge,
  kEdgeAbsentInSupport,
  kVariableCollision,
  kDegreeNotTwo,
  kSmoothingCreatesMultiEdge,
  kNotASubgraph,
  kInternalVerificationFailed,
  kTooManyEdges,
  kUnknownFixture,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library. `line()` is set for parse errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> line() const { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace cnfgraph

#endif  // CNFGRAPH_ERROR_H_
