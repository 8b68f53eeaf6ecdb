#pragma once

/**
 * @file caps.hpp
 * @brief Error types, resource caps and cooperative deadlines.
 *
 * Every kernel that can blow up (Buchberger, Omega rewriting, brute-force
 * searches) polls check_deadline() and consults current_caps() so the CLI
 * fails fast instead of thrashing.
 */

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ufdlab {

/// Base class for every library error. The message is user-facing.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A degree, term-count or search-space cap was exceeded.
class InstanceTooLarge : public Error {
public:
    explicit InstanceTooLarge(const std::string& what)
        : Error("instance too large: " + what) {}
};

/// The per-claim deadline expired.
class Timeout : public Error {
public:
    Timeout() : Error("timeout") {}
};

struct Caps {
    int degree = 64;
    std::size_t terms = 20000;
};

/// Caps in effect; initialised from UFDLAB_CAPS ("degree=64,terms=20000") on first use.
Caps current_caps();
void set_caps(const Caps& caps);
/// Parses the UFDLAB_CAPS syntax; throws std::invalid_argument on malformed input.
Caps parse_caps(const std::string& text, Caps base = {});

using Clock = std::chrono::steady_clock;

/// Installs a deadline for the current thread for the lifetime of the guard.
class DeadlineGuard {
public:
    explicit DeadlineGuard(std::optional<Clock::duration> budget);
    ~DeadlineGuard();
    DeadlineGuard(const DeadlineGuard&) = delete;
    DeadlineGuard& operator=(const DeadlineGuard&) = delete;

private:
    std::optional<Clock::time_point> previous_;
};

/// Throws Timeout if the current thread's deadline has passed.
void check_deadline();

}  // namespace ufdlab
