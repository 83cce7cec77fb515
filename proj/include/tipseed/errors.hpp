#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tipseed {

// Malformed input text; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// An exact method was asked to run past its configured instance-size limit.
class SizeLimitError : public std::invalid_argument {
public:
    SizeLimitError(const std::string& what_failed, std::size_t n, std::size_t limit)
        : std::invalid_argument(what_failed + ": instance has " + std::to_string(n) +
                                " nodes, limit is " + std::to_string(limit)) {}
};

// Iterative method failed to converge within its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& message) : std::runtime_error(message) {}
};

// A measure defined only for a restricted graph class (e.g. symmetric) was
// applied outside it.
class ApplicabilityError : public std::invalid_argument {
public:
    explicit ApplicabilityError(const std::string& message) : std::invalid_argument(message) {}
};

// Least-squares design matrix is rank deficient.
class DegenerateFitError : public std::runtime_error {
public:
    explicit DegenerateFitError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace tipseed
