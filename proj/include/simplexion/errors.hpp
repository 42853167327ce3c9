#pragma once

#include <stdexcept>
#include <string>

namespace simplexion {

// Two elements with different moduli met in one operation.
struct ModulusMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Inversion requested for a residue that is not a unit of Z_D.
struct NotAUnitError : std::domain_error {
  using std::domain_error::domain_error;
};

// Matrix inversion requested while det is not a unit of Z_D.
struct SingularMatrixError : std::domain_error {
  using std::domain_error::domain_error;
};

// An enumeration would exceed the configured candidate budget.
struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A catalog instantiation outside the family's parameter domain.
struct DomainViolationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace simplexion
