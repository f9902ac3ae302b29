#include "fb/error.hpp"

namespace fb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::InconsistentBlocks: return "InconsistentBlocks";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::ZeroDivisorQuery: return "ZeroDivisorQuery";
    case ErrorKind::InfiniteLength: return "InfiniteLength";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::NotPrimary: return "NotPrimary";
    case ErrorKind::NotMonomial: return "NotMonomial";
    case ErrorKind::MissingMultiplicities: return "MissingMultiplicities";
    case ErrorKind::NoParameterFound: return "NoParameterFound";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ResourceBound: return "ResourceBound";
    case ErrorKind::LiftFailure: return "LiftFailure";
    case ErrorKind::CacheCorrupt: return "CacheCorrupt";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

}  // namespace fb
