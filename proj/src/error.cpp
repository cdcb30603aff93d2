#include "dessins/error.hpp"

namespace dessins {

const char *errc_name(Errc code) noexcept {
  switch (code) {
  case Errc::DegreeMismatch: return "DegreeMismatch";
  case Errc::NotBijection: return "NotBijection";
  case Errc::NotTransitive: return "NotTransitive";
  case Errc::CapExceeded: return "CapExceeded";
  case Errc::UnknownName: return "UnknownName";
  case Errc::BadGenus: return "BadGenus";
  case Errc::BadHost: return "BadHost";
  case Errc::BadPosition: return "BadPosition";
  case Errc::InternalParity: return "InternalParity";
  case Errc::NotAutomorphisms: return "NotAutomorphisms";
  case Errc::NotSubgroupClosed: return "NotSubgroupClosed";
  case Errc::NonIntegerGenus: return "NonIntegerGenus";
  case Errc::ShapeMismatch: return "ShapeMismatch";
  case Errc::ConventionViolation: return "ConventionViolation";
  case Errc::Disconnected: return "Disconnected";
  case Errc::VectorInvalid: return "VectorInvalid";
  case Errc::VerificationFailed: return "VerificationFailed";
  case Errc::NotGenerating: return "NotGenerating";
  case Errc::GenusTooSmall: return "GenusTooSmall";
  case Errc::InvalidGroup: return "InvalidGroup";
  case Errc::InvalidArgument: return "InvalidArgument";
  case Errc::Parse: return "Parse";
  case Errc::Io: return "Io";
  }
  return "Unknown";
}

} // namespace dessins
