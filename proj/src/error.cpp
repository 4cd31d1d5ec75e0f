#include "asua/error.hpp"

namespace asua {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::IdOutOfRange: return "IdOutOfRange";
    case ErrorKind::ZeroMultiplicity: return "ZeroMultiplicity";
    case ErrorKind::EmptyAbsorbingSet: return "EmptyAbsorbingSet";
    case ErrorKind::UnreachableAbsorber: return "UnreachableAbsorber";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::MultipleAbsorbers: return "MultipleAbsorbers";
    case ErrorKind::NotStochastic: return "NotStochastic";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::StartIsAbsorbing: return "StartIsAbsorbing";
    case ErrorKind::RaggedRows: return "RaggedRows";
    case ErrorKind::IllegalCharacter: return "IllegalCharacter";
    case ErrorKind::NoTarget: return "NoTarget";
    case ErrorKind::EmptyMaze: return "EmptyMaze";
  }
  return "Unknown";
}

}  // namespace asua
