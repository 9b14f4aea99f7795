#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

enum class Errc {
  InvalidSize,
  NotDivisible,
  StructureError,
  ObjectMismatch,
  NotCyclic,
  NotDualizing,
  TypeError,
  CategoryMismatch,
  PresheafSpaceTooLarge,
  NotGirard,
  SchemaError,
  DegreeOutOfHom,
  Unsupported,
  Mismatch,
  InvalidInfomorphism,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace qcat
