#pragma once

#include <stdexcept>
#include <string>

namespace rsys {

/// Input text could not be understood (system files, formula files,
/// solver output). Messages carry line/position information where known.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation was invoked on arguments that violate its contract
/// (index out of range, width mismatch, wrong resource class, ...).
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exact computation would exceed a configured resource cap.
/// The message names the cap and the flag that raises it.
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A reported witness failed re-validation against direct evaluation.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rsys
