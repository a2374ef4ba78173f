#pragma once

#include <stdexcept>
#include <string>

namespace wilsoncg {

// Invalid argument to an operation (bad coordinate, mismatched geometry, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation declined to run on its input, e.g. a lattice too large for
// the dense oracle or too small for the streaming window.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wilsoncg
