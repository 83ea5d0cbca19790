#pragma once

#include <stdexcept>
#include <string>

namespace mstd {

/// 64-bit overflow in set or lattice arithmetic. Results never wrap.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A documented precondition or parameter clause was violated. `what()`
/// names the clause.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Enumeration or search would exceed its configured budget.
class BudgetError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A construction's output failed its own post-condition check.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Failure inside the group -> lattice -> integer embedding, tagged with the
/// stage that raised it.
class PipelineError : public std::runtime_error {
public:
    PipelineError(std::string stage, const std::string& message)
        : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace mstd
