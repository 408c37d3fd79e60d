#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srblab {

// Point falls outside a non-periodic axis range.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument values (negative thresholds, bad lambdas, empty axis sets, ...).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Operands live on different partitions / domains.
class IncompatibilityError : public std::invalid_argument {
public:
    explicit IncompatibilityError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Unknown system name requested from the registry.
class RegistryError : public std::invalid_argument {
public:
    explicit RegistryError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Orbit produced NaN/Inf or left a non-periodic domain; carries the failing step.
class OrbitDivergenceError : public std::runtime_error {
public:
    OrbitDivergenceError(const std::string& msg, std::size_t step)
        : std::runtime_error(msg + " (at orbit step " + std::to_string(step) + ")"),
          step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

// Config file problems; carries a 1-based line number when known (0 = n/a).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace srblab
