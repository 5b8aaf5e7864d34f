#pragma once

#include <stdexcept>
#include <string>

namespace galois {

/// Malformed input or a value outside an operation's domain.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric certificate could not be established within its budget.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact identity that must hold by the theory failed to hold.
class TheoremError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace galois
