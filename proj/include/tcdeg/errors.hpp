#pragma once

#include <stdexcept>
#include <string>

namespace tcdeg {

// Invalid input or configuration: bad parameters, unsupported combinations,
// malformed config files. The CLI maps this to exit code 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation ran but its result cannot be trusted: truncation leakage,
// positivity violations, overflow, failed validation. Exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tcdeg
