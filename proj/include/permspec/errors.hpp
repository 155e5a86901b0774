#pragma once

#include <stdexcept>
#include <string>

namespace permspec {

/// Precondition violated by the caller (bad degree, index out of range,
/// mixed variable families, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Request exceeds a size limit (matrix export, enumeration ceiling).
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace permspec
