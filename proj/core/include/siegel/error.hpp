#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

// Raised for any violated mathematical precondition or failed verification.
// The CLI maps it to exit code 1 and prints what() verbatim.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace siegel
