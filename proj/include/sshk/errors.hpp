#pragma once

#include <stdexcept>
#include <string>

namespace sshk {

// Malformed input: bad schema, unknown symbol, dimension mismatch in a user
// document.  CLI exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical precondition failed: non-transitive action where transitivity
// is required, a non-integral scaled matrix, a theorem hypothesis violated.
// CLI exit code 3.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IntegralityError : PreconditionError {
    std::size_t row, col;
    IntegralityError(std::size_t r, std::size_t c, const std::string& entry)
        : PreconditionError("entry (" + std::to_string(r) + "," + std::to_string(c) +
                            ") = " + entry + " is not an integer"),
          row(r), col(c) {}
};

}  // namespace sshk
