#pragma once

#include <stdexcept>
#include <string>

namespace perfest {

// Invalid input to an estimation routine (out-of-range score, empty batch,
// malformed distribution). Undefined metrics are not errors; they surface as
// empty optionals.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical routine produced a result outside its accuracy envelope.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace perfest
