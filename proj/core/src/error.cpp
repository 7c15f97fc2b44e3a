#include "ktree/error.hpp"

namespace ktree {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::AttachmentNotClique: return "AttachmentNotClique";
    case ErrorCode::BadVertexOrder: return "BadVertexOrder";
    case ErrorCode::NotKTree: return "NotKTree";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotAClique: return "NotAClique";
    case ErrorCode::TrivialKTree: return "TrivialKTree";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::BadMoveSet: return "BadMoveSet";
    case ErrorCode::NotALeaf: return "NotALeaf";
    case ErrorCode::VertexInClique: return "VertexInClique";
    case ErrorCode::NotAdjacentCliques: return "NotAdjacentCliques";
    case ErrorCode::NotEndClique: return "NotEndClique";
    case ErrorCode::NotASubKTree: return "NotASubKTree";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace ktree
