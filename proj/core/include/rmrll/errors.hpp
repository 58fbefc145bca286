#pragma once

#include <stdexcept>
#include <string>

namespace rmrll {

/// Thrown when an observation (erasure pattern / known bits) matches no codeword.
class inconsistent_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive computation is refused because it exceeds the
/// enumeration guard. Never silently approximated.
class guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rmrll
