#pragma once

#include <stdexcept>
#include <string>

namespace fdso {

// Invalid caller-supplied values (vertex/edge ids, parameter ranges).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed text input; message names the offending line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Filesystem failures.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Corrupt or mismatched binary container.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Build refused because the estimated footprint exceeds the configured
// budget. Carries a sizing report so callers can shrink L, f, or n.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& message, std::string report)
        : std::runtime_error(message), report_(std::move(report)) {}

    const std::string& report() const noexcept { return report_; }

private:
    std::string report_;
};

}  // namespace fdso
