#pragma once

#include <stdexcept>
#include <string>

namespace newtonsys {

/// Malformed user input (bad expression, out-of-domain parameter).
struct InputError : std::invalid_argument {
    std::size_t offset = 0;
    explicit InputError(const std::string& what, std::size_t off = 0)
        : std::invalid_argument(what), offset(off) {}
};

/// A theorem-level invariant failed at runtime. Always a defect.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require_invariant(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation(what);
}

}  // namespace newtonsys
