#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace asua {

enum class ErrorKind {
  Parse,
  SelfLoop,
  IdOutOfRange,
  ZeroMultiplicity,
  EmptyAbsorbingSet,
  UnreachableAbsorber,
  SameVertex,
  MultipleAbsorbers,
  NotStochastic,
  SingularSystem,
  IndexMismatch,
  OutOfRange,
  BadSpec,
  StartIsAbsorbing,
  RaggedRows,
  IllegalCharacter,
  NoTarget,
  EmptyMaze,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` tells callers which
/// contract was violated. `vertices()` carries 0-based ids where relevant
/// (the stranded set for UnreachableAbsorber).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::size_t> vertices = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        vertices_(std::move(vertices)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& vertices() const noexcept { return vertices_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> vertices_;
};

}  // namespace asua
