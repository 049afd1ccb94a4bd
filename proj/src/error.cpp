#include "domaincheck/error.hpp"

namespace domaincheck {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Cycle: return "CycleError";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotDirected: return "NotDirected";
    case ErrorKind::BackendUnsupported: return "BackendUnsupported";
    case ErrorKind::NonRepresentableSet: return "NonRepresentableSet";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::NotQuasiContinuous: return "NotQuasiContinuous";
    case ErrorKind::NotDirectedFamily: return "NotDirectedFamily";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::InvalidNet: return "InvalidNet";
    case ErrorKind::NetClassTooSmall: return "NetClassTooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

}  // namespace domaincheck
