#pragma once

#include <stdexcept>
#include <string>

namespace mink {

/// Invalid input: malformed ball, bad conic parameters, zero vectors where a
/// direction is required, violated preconditions.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure could not complete (bracketing failed, no sign
/// change where one was guaranteed).
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mink
