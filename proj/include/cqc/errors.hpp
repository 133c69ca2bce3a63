#pragma once

#include <stdexcept>
#include <string>

namespace cqc {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Brute-force oracle asked to do more work than its configured budget.
struct oracle_limit_error : error {
    using error::error;
};

// A node tried to push more bits through an ordered pair than the
// per-round bandwidth allows (strict send API only).
struct bandwidth_error : error {
    bandwidth_error(int round, int sender, int receiver, long bits, long cap)
        : error("bandwidth exceeded in round " + std::to_string(round) + ": " +
                std::to_string(sender) + " -> " + std::to_string(receiver) + " carries " +
                std::to_string(bits) + " bits, cap " + std::to_string(cap)),
          round(round), sender(sender), receiver(receiver), bits(bits), cap(cap) {}
    int round, sender, receiver;
    long bits, cap;
};

struct timeout_error : error {
    using error::error;
};

struct overflow_error : error {
    using error::error;
};

struct dimension_error : error {
    using error::error;
};

struct param_error : error {
    using error::error;
};

// Embedded numeric table failed its self-check on load.
struct table_corruption_error : error {
    using error::error;
};

} // namespace cqc
