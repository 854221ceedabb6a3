#include "takeaway/error.hpp"

namespace takeaway {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EdgeNotSubsetOfVertices: return "edge-not-subset-of-vertices";
    case ErrorCode::DuplicateEdge: return "duplicate-edge";
    case ErrorCode::EdgeTooSmall: return "edge-too-small";
    case ErrorCode::DuplicateVertexId: return "duplicate-vertex-id";
    case ErrorCode::DuplicateVertexName: return "duplicate-vertex-name";
    case ErrorCode::TooManyVertices: return "too-many-vertices";
    case ErrorCode::IllegalMove: return "illegal-move";
    case ErrorCode::SizeBoundExceeded: return "size-bound-exceeded";
    case ErrorCode::MalformedDocument: return "malformed-document";
    case ErrorCode::UnknownVertexName: return "unknown-vertex-name-in-edge";
    case ErrorCode::PreconditionViolated: return "precondition-violated";
    case ErrorCode::InternalInconsistency: return "internal-inconsistency";
    case ErrorCode::ValueOverflow: return "value-overflow";
    case ErrorCode::IoFailure: return "io-failure";
  }
  return "unknown";
}

}  // namespace takeaway
