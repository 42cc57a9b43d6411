// errors.hpp -- exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace kp {

// Thrown when a computation would exceed a configured size ceiling.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a mathematical check that should always hold fails on a
// concrete instance.  Seeing one of these means either a bug or a
// counterexample; both deserve a loud stop.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace kp
