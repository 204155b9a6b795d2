#pragma once

#include <stdexcept>
#include <string>

namespace qtilt {

// A precondition on the input failed (bad algebra, gl.dim too large, ...).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A statement that the theory guarantees did not hold on a computed instance.
struct Falsification : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured search bound was hit before the computation finished.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qtilt
