#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace finring {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructor precondition failed (non-central s, reducible modulus, ...).
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// The carrier of a requested ring would exceed the configured order cap.
class CapExceeded : public ConstructionError {
public:
    CapExceeded(const std::string& what, std::uint64_t order, std::uint64_t cap)
        : ConstructionError(what + ": order " + std::to_string(order) + " exceeds cap " +
                            std::to_string(cap)),
          order_(order), cap_(cap) {}

    std::uint64_t order() const noexcept { return order_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t order_;
    std::uint64_t cap_;
};

/// Internal consistency check failed. Signals a bug, never bad input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace finring
