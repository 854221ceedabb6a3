#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace takeaway {

enum class ErrorCode {
  EdgeNotSubsetOfVertices,
  DuplicateEdge,
  EdgeTooSmall,
  DuplicateVertexId,
  DuplicateVertexName,
  TooManyVertices,
  IllegalMove,
  SizeBoundExceeded,
  MalformedDocument,
  UnknownVertexName,
  PreconditionViolated,
  InternalInconsistency,
  ValueOverflow,
  IoFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// the C API can map it onto a status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace takeaway
