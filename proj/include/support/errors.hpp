#pragma once

#include <stdexcept>
#include <string>

namespace support {

/// Bad input: rejected data, broken preconditions, unknown names.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A postcondition the library guarantees failed to hold; indicates a bug,
/// not a user error.
class defect_error : public std::runtime_error {
public:
    explicit defect_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace support
