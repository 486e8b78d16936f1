#pragma once

#include <stdexcept>
#include <string>

namespace elax {

/// Invalid configuration (bad grid size, malformed config file, ...).
/// CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Misuse of an operation (grid mismatch, sector requested for an
/// x-dependent vorticity, ...).
class UsageError : public std::logic_error {
public:
    explicit UsageError(const std::string& msg) : std::logic_error(msg) {}
};

/// A simulation produced NaN/Inf or exceeded the enstrophy ceiling.
/// Carries the time of failure. CLI maps this to exit code 3.
class BlowUpError : public std::runtime_error {
public:
    BlowUpError(const std::string& msg, double t)
        : std::runtime_error(msg), time_of_failure(t) {}
    double time_of_failure;
};

/// Input that makes the requested diagnostic meaningless (eta0 = 0 in a
/// commutation check, zero-norm phi, ...). CLI maps this to exit code 4.
class DegenerateInputError : public std::runtime_error {
public:
    explicit DegenerateInputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure inside a solver (eigensolver non-convergence, ...).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A basis whose Gram matrix is numerically rank-deficient.
class IllConditionedBasisError : public std::runtime_error {
public:
    explicit IllConditionedBasisError(const std::string& msg)
        : std::runtime_error(msg) {}
};

} // namespace elax
