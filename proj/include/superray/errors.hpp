#pragma once

#include <stdexcept>
#include <string>

namespace superray {

/// Requested evaluation falls in the evanescent band (epsilon < 0), where the
/// real-amplitude model does not apply.
class EvanescentBandError : public std::domain_error {
public:
    explicit EvanescentBandError(const std::string& what) : std::domain_error(what) {}
};

/// An iterative solver exhausted its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or invalid configuration input. Messages carry the offending
/// key and, for parse errors, the line number.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace superray
