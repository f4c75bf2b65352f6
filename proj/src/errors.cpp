#include "polyknot/errors.hpp"

namespace polyknot {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DegenerateCrossing: return "DegenerateCrossing";
    case ErrorKind::NonRegular: return "NonRegular";
    case ErrorKind::ZCollision: return "ZCollision";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::Unliftable: return "Unliftable";
    case ErrorKind::ExtraCrossings: return "ExtraCrossings";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace polyknot
