#pragma once

#include <stdexcept>
#include <string>

namespace gmqaoa {

// Malformed or inconsistent input (bad instance file, mismatched sets,
// invalid qubit indices). Maps to CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap would be exceeded (enumeration size, statevector
// width, dense-matrix dimension). Maps to CLI exit code 2.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gmqaoa
