#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ktree {

enum class ErrorCode {
  InvalidVertex,
  AttachmentNotClique,
  BadVertexOrder,
  NotKTree,
  Disconnected,
  NotAClique,
  TrivialKTree,
  SizeTooSmall,
  NotATree,
  NotAdjacent,
  SameVertex,
  BadMoveSet,
  NotALeaf,
  VertexInClique,
  NotAdjacentCliques,
  NotEndClique,
  NotASubKTree,
  TooLarge,
  UnknownSuite,
  BadConfig,
  BadK,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Every precondition failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ktree
