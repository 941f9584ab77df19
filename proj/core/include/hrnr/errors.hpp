#pragma once

#include <stdexcept>
#include <string>

namespace hrnr {

/// Invalid or malformed input (files, dimensions, flags). Maps to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical routine failed its own consistency requirements. Maps to exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hrnr
