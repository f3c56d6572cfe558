#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace numdiff {

/// Thrown when an argument violates a documented precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a signal carries no usable spectral content (e.g. constant data).
class NoSignal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File or parse failure. Carries a 1-based line number when known.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what, long line = -1)
        : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    long line() const noexcept { return line_; }

private:
    long line_;
};

/// Iterative solver ran out of iterations. Carries the last iterate and the
/// residual it reached so callers can inspect or salvage the partial result.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::vector<double> last_iterate, double residual)
        : std::runtime_error(what), last_iterate_(std::move(last_iterate)), residual_(residual) {}
    const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }
    double residual() const noexcept { return residual_; }

private:
    std::vector<double> last_iterate_;
    double residual_;
};

/// Parameter search failed on every start.
class OptimizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Regression fit failed (e.g. rank-deficient design matrix).
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace numdiff
