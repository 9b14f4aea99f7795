#include "qcat/error.hpp"

namespace qcat {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidSize: return "InvalidSize";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::StructureError: return "StructureError";
    case Errc::ObjectMismatch: return "ObjectMismatch";
    case Errc::NotCyclic: return "NotCyclic";
    case Errc::NotDualizing: return "NotDualizing";
    case Errc::TypeError: return "TypeError";
    case Errc::CategoryMismatch: return "CategoryMismatch";
    case Errc::PresheafSpaceTooLarge: return "PresheafSpaceTooLarge";
    case Errc::NotGirard: return "NotGirard";
    case Errc::SchemaError: return "SchemaError";
    case Errc::DegreeOutOfHom: return "DegreeOutOfHom";
    case Errc::Unsupported: return "Unsupported";
    case Errc::Mismatch: return "Mismatch";
    case Errc::InvalidInfomorphism: return "InvalidInfomorphism";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace qcat
