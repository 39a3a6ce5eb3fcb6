#include "pglsym/error.hpp"

namespace pglsym {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::MalformedInput: return "MalformedInput";
  case ErrorKind::UngluedFace: return "UngluedFace";
  case ErrorKind::InconsistentPairing: return "InconsistentPairing";
  case ErrorKind::NotOriented: return "NotOriented";
  case ErrorKind::DisconnectedLink: return "DisconnectedLink";
  case ErrorKind::InvalidN: return "InvalidN";
  case ErrorKind::VertexPoint: return "VertexPoint";
  case ErrorKind::OutOfRange: return "OutOfRange";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::NotAComplex: return "NotAComplex";
  case ErrorKind::ClosedManifold: return "ClosedManifold";
  case ErrorKind::NotClosed: return "NotClosed";
  case ErrorKind::ComponentMismatch: return "ComponentMismatch";
  case ErrorKind::DegenerateShape: return "DegenerateShape";
  case ErrorKind::LocalModeUnsupported: return "LocalModeUnsupported";
  case ErrorKind::NoUnimodularBasis: return "NoUnimodularBasis";
  }
  return "Unknown";
}

} // namespace pglsym
