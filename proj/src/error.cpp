#include "pps/error.hpp"

namespace pps {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownArrow: return "UnknownArrow";
    case ErrorKind::CapTooSmall: return "CapTooSmall";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::MalformedEntry: return "MalformedEntry";
    case ErrorKind::InvalidSystem: return "InvalidSystem";
    case ErrorKind::NotPathCategory: return "NotPathCategory";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DegreeOrder: return "DegreeOrder";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::InvalidIdealSpec: return "InvalidIdealSpec";
    case ErrorKind::TooManyVertices: return "TooManyVertices";
    case ErrorKind::HorizonTooSmall: return "HorizonTooSmall";
    case ErrorKind::NotExtendable: return "NotExtendable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

}  // namespace pps
