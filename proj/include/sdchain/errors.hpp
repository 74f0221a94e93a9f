#pragma once

#include <stdexcept>
#include <string>

namespace sdchain {

/// Thrown when a request exceeds a solver's size or parameter guard
/// (e.g. dense thermal diagonalization above its site limit).
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when an iterative solver fails to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double residual)
        : std::runtime_error(msg), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Thrown when a root search cannot locate a sign change.
class BracketError : public std::runtime_error {
public:
    explicit BracketError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sdchain
