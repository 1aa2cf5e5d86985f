#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spheretri {

enum class ErrorCode {
  // plane_map
  TooFewVertices,
  VertexOutOfRange,
  NotSimple,
  NotSymmetric,
  DegreeTooLow,
  NotTriangular,
  EulerViolation,
  EdgeAbsent,
  // generator
  FaceAbsent,
  WouldCreateMultiEdge,
  PolygonInvalid,
  InvalidArgument,
  NMaxOutOfRange,
  // tricolor
  PartialColoring,
  InvalidColoring,
  // oracle
  TooLarge,
  // text formats
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; `code()` tells callers what went wrong
// without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spheretri
