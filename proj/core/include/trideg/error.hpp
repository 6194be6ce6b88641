#pragma once

#include <stdexcept>
#include <string>

namespace trideg {

/// Malformed or inconsistent input: shape mismatches, bad JSON, invalid
/// presentations. The CLI maps this to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction whose certificate could not be produced or checked.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trideg
