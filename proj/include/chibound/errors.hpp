#pragma once

#include <stdexcept>
#include <string>

namespace chibound {

// Bad caller-supplied data: out-of-range vertex, malformed file, bad parameter domain.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented operation precondition does not hold.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Rejection sampling ran out of attempts.
struct generation_error : std::runtime_error {
    generation_error(const std::string& msg, long attempts_)
        : std::runtime_error(msg), attempts(attempts_) {}
    long attempts;
};

// An exact search exceeded its time budget. Never a wrong answer.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A counting argument needed a parameter floor that the caller did not meet,
// so neither success nor a witness is promised.
struct indeterminate_error : std::runtime_error {
    explicit indeterminate_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal step contradicted a verified hypothesis. Reaching this is a bug
// (or a lie in a trusted flag), so it is reported loudly rather than absorbed.
struct contradiction_error : std::runtime_error {
    explicit contradiction_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace chibound
